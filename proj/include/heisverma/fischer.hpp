#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "heisverma/param_scalar.hpp"
#include "heisverma/weyl.hpp"

namespace heisverma {

/// Bihomogeneous harmonic polynomials of bidegree (a, b) in the x/y pairs
/// with indices lo..hi of a VarSet.
struct HarmonicSpace {
  unsigned a = 0;
  unsigned b = 0;
  VarSet vs;
  unsigned lo = 1;
  unsigned hi = 1;
  std::vector<PolyVector> basis;

  unsigned n_vars() const { return hi + 1 - lo; }
  std::size_t dim() const { return basis.size(); }
};

/// Exact nullspace of the block box operator on P_{a,b} of the block [lo, hi].
HarmonicSpace harmonic_basis(VarSet vs, unsigned lo, unsigned hi, unsigned a, unsigned b);
/// Full block of a dual-side VarSet on n_vars pairs.
HarmonicSpace harmonic_basis(unsigned a, unsigned b, unsigned n_vars);

/// C(a+n-1, n-1) C(b+n-1, n-1) - C(a+n-2, n-1) C(b+n-2, n-1).
Rational harmonic_dimension(unsigned a, unsigned b, unsigned n_vars);

/// Monomials x^alpha y^beta of the block with |alpha| = a, |beta| = b.
std::vector<Exponent> block_monomials(VarSet vs, unsigned lo, unsigned hi, unsigned a, unsigned b);

/// Fischer decomposition with respect to the block [lo, hi]: f = sum_k q^k h_k
/// with box_block h_k = 0. Variables outside the block act as coefficients.
/// Returns the non-zero (k, h_k) in increasing k.
std::vector<std::pair<unsigned, PolyVector>> fischer_project(const PolyVector& f, unsigned lo, unsigned hi);
inline std::vector<std::pair<unsigned, PolyVector>> fischer_project(const PolyVector& f) {
  return fischer_project(f, 1, f.varset().n);
}

/// Polynomial in the radial variables q', q'' and z: exponent triple -> coefficient.
class RadialPoly {
 public:
  using Key = std::array<unsigned, 3>;  // (q', q'', z)

  RadialPoly() = default;
  static RadialPoly monomial(unsigned i, unsigned j, unsigned k, const ParamScalar& c);

  const std::map<Key, ParamScalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const Key& k, const ParamScalar& c);

  RadialPoly& operator+=(const RadialPoly& o);
  friend RadialPoly operator+(RadialPoly a, const RadialPoly& b) { return a += b; }
  friend RadialPoly operator*(RadialPoly a, const ParamScalar& c);
  friend bool operator==(const RadialPoly&, const RadialPoly&) = default;

  /// Substitutes q' -> q_poly[1..n-r], q'' -> q_poly[n-r+1..n], z -> z.
  PolyVector materialize(VarSet vs, unsigned r) const;
  std::string str() const;

 private:
  std::map<Key, ParamScalar> terms_;
};

/// Q_{alpha,beta} = q' D_{q'}^2 + (n-r+alpha) D_{q'} + q'' D_{q''}^2 + (r+beta) D_{q''}.
struct QOperator {
  ParamScalar alpha;
  ParamScalar beta;
  unsigned n = 0;
  unsigned r = 0;

  RadialPoly apply(const RadialPoly& u) const;
};

/// Basis of S_{l,s} = ker Q_{-s+l1+l2+2, s-2l} on the degree-l part of
/// C[q', q''] (only q'^l when r = 0, where q'' does not exist).
std::vector<RadialPoly> solve_S(unsigned l, unsigned s, const Rational& l1, const Rational& l2, unsigned n,
                                unsigned r);

/// alpha_0..alpha_K from the three-term recurrence
/// (k+2) alpha_{k+2} = (r1-r2-l1+l2) alpha_{k+1} - (r1+r2-l1-l2-2-k) alpha_k.
std::vector<ParamScalar> t_coeffs(const ParamScalar& r1, const ParamScalar& r2, const ParamScalar& l1,
                                  const ParamScalar& l2, unsigned K);
/// The w^k coefficients of (1+w)^{r1-l1-1} (1-w)^{r2-l2-1}, k <= K.
std::vector<ParamScalar> t_coeffs_series(const ParamScalar& r1, const ParamScalar& r2, const ParamScalar& l1,
                                         const ParamScalar& l2, unsigned K);

/// T = sum_k alpha_k / 2^k z^k D_{q'}^k.
struct TOperator {
  unsigned r1 = 0;
  unsigned r2 = 0;
  ParamScalar l1;
  ParamScalar l2;
  std::vector<ParamScalar> alpha;

  /// K defaults to floor((r1 + r2) / 2).
  static TOperator make(unsigned r1, unsigned r2, const ParamScalar& l1, const ParamScalar& l2);
  static TOperator make(unsigned r1, unsigned r2, const ParamScalar& l1, const ParamScalar& l2, unsigned K);

  RadialPoly apply(const RadialPoly& u) const;
};

/// f written as sum q'^i q''^j z^k H_{ijk} with every H harmonic for both
/// block box operators (blocks [1, n-r] and [n-r+1, n]).
struct FischerElement {
  VarSet vs;
  unsigned r = 0;
  std::map<RadialPoly::Key, PolyVector> parts;

  static FischerElement decompose(const PolyVector& f, unsigned r);
  PolyVector materialize() const;
};

/// T applied through the Fischer identification: D_{q'} acts on the q'-power.
PolyVector t_apply(const TOperator& t, const PolyVector& f, unsigned r);

}  // namespace heisverma
