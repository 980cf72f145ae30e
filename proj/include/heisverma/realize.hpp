#pragma once

#include <string>
#include <vector>

#include "heisverma/lie.hpp"
#include "heisverma/pbw.hpp"
#include "heisverma/weyl.hpp"

namespace heisverma {

/// The two closed-form realizations of sl(n+2) by differential operators:
/// pi on the hatted coordinates of ū and pi_hat on the dual coordinates.
///
/// The parameter (mu1, mu2) is the one that appears literally in the closed
/// formulas, e.g. pi(h_1) = E_x + E_y + 2E_z + mu1 + mu2 + n + 1. The
/// generalized Verma module M(lambda) of highest weight lambda is modelled with
/// mu = lambda + rho; use for_verma() for that.
class Realization {
 public:
  Realization(unsigned n, ParamScalar mu1, ParamScalar mu2);
  /// mu = (l1, l2) kept symbolic.
  static Realization generic(unsigned n);
  /// mu = lambda + rho for the module M(lambda).
  static Realization for_verma(const Character& lambda);

  unsigned n() const { return n_; }
  const ParamScalar& mu1() const { return mu1_; }
  const ParamScalar& mu2() const { return mu2_; }
  VarSet hatted() const { return {n_, Side::hatted}; }
  VarSet dual() const { return {n_, Side::dual}; }

  /// Operators for canonical basis elements come from a table built once at
  /// construction; a general hmat element is expanded over the spanning set.
  const WeylElement& pi(std::size_t canonical) const { return pi_.at(canonical); }
  const WeylElement& pi_hat(std::size_t canonical) const { return pi_hat_.at(canonical); }
  WeylElement pi(const LieBasisElement& x) const;
  WeylElement pi_hat(const LieBasisElement& x) const;
  WeylElement pi(const LieElement& x) const;
  WeylElement pi_hat(const LieElement& x) const;

  /// The map U(ū) v -> C[ū*] sending w v to pi_hat(w) 1.
  PolyVector phi(const PbwVector& v) const;
  /// The same map computed on the hatted side: the class of pi(w) modulo I_e,
  /// read as a constant-coefficient operator and Fourier transformed.
  PolyVector phi_hatted(const PbwVector& v) const;

 private:
  WeylElement build_pi(const LieBasisElement& x) const;
  WeylElement build_pi_hat(const LieBasisElement& x) const;

  unsigned n_;
  ParamScalar mu1_, mu2_;
  std::vector<WeylElement> pi_;
  std::vector<WeylElement> pi_hat_;
};

/// Outcome of the homomorphism certification of a Realization.
struct CertificationReport {
  unsigned n = 0;
  std::size_t pairs = 0;
  std::vector<std::string> failures;  // e.g. "pi_hat [f1, d2]" or "fourier c"

  bool ok() const { return failures.empty(); }
};

/// Checks pi([X, Y]) = [pi(X), pi(Y)] and the same for pi_hat on all ordered
/// pairs of canonical basis elements, and fourier(pi(X)) = pi_hat(X).
CertificationReport certify_homomorphism(const Realization& real);

/// Oracle realization on the hatted side from the exponential-coordinate
/// formula: with u = sum x_i f_i + y_i g_i + z c and W = exp(-ad u) X,
///   pi(X) = -sum_i [ (ad u / (1 - exp(-ad u))) W_ū ]_i D_i + nu(W_p),
/// where nu is the character of p. The series terminate because ad u is
/// nilpotent in the |2|-graded algebra. Realization(n, mu) corresponds to
/// nu = mu + rho.
WeylElement pi_generic(const LieElement& x, const Character& nu);

/// Class of a hatted-side operator modulo the left ideal generated by the
/// coordinates: writes p = sum D^beta a_beta(x) and keeps sum a_beta(0) D^beta.
WeylElement reduce_mod_Ie(const WeylElement& p);

/// Inverse of the symmetrization bridge: a monomial x^alpha y^beta z^gamma with
/// k letters maps to (-1)^k sym(f^alpha g^beta c^gamma) v.
PbwVector poly_to_pbw(const PolyVector& r);

}  // namespace heisverma
