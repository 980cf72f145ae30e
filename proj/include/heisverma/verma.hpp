#pragma once

#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "heisverma/lie.hpp"
#include "heisverma/pbw.hpp"
#include "heisverma/realize.hpp"

namespace heisverma {

/// Scalar generalized Verma module M(lambda) = U(ū) ⊗ v for the Heisenberg
/// parabolic, with lambda = lambda1 w1 + lambda2 w_{n+1}. h_1 acts on v by
/// lambda1 + lambda2, h_2 by lambda1 - lambda2, [l, l] and u by zero.
class VermaModule {
 public:
  explicit VermaModule(Character lambda);

  unsigned n() const { return lambda_.n; }
  const Character& lambda() const { return lambda_; }
  /// Realization with mu = lambda + rho, intertwined with this module by phi.
  const Realization& realization() const { return real_; }

  PbwVector act(std::size_t canonical, const PbwVector& v) const;
  PbwVector act(const LieBasisElement& x, const PbwVector& v) const;
  PbwVector act(const LieElement& x, const PbwVector& v) const;

  /// True iff d_i v = e_i v = 0 for every i <= n - r.
  bool is_singular(const PbwVector& v, unsigned r) const;

  /// The polynomial model of v (dual side).
  PolyVector to_polynomial(const PbwVector& v) const { return real_.phi(v); }

  /// Checks that the module action and the operator realizations agree on v:
  /// for every canonical basis element X, the hatted route applied to X v
  /// equals pi_hat(X) applied to the polynomial of v.
  bool crosscheck_phi(const PbwVector& v) const;

 private:
  const PbwVector& act_word(std::size_t k, const PbwVector::Word& w) const;

  Character lambda_;
  Realization real_;
  std::size_t nbar_dim_;
  std::vector<ParamScalar> char_values_;
  // ad_[k][l]: coordinates of [B_k, B_l] for letters l of ū
  std::vector<std::vector<std::vector<std::pair<std::size_t, Rational>>>> ad_;

  mutable std::mutex memo_mu_;
  mutable std::map<std::pair<std::size_t, PbwVector::Word>, PbwVector> memo_;
};

/// A named example vector together with the data it is claimed for.
struct ExampleVector {
  std::string name;
  unsigned n = 0;
  unsigned r = 0;
  Character lambda;
  PbwVector vector;
};

/// sum_i f_i g_i + s c, the quadratic building block of the r = 0 examples.
PbwVector casimir_like(unsigned n, const ParamScalar& s);
/// (sum f_i g_i + 1/2 (l1 - l2 + n) c) v.
PbwVector example_r0_quadratic(const Character& lambda);
/// (sum f_i g_i + 1/2 (l1 - l2 + n - 1) c)(sum f_i g_i + 1/2 (l1 - l2 + n + 1) c) v.
PbwVector example_r0_quartic(const Character& lambda);
/// f_1 g_n v.
PbwVector example_r0_mixed(unsigned n);
/// prod_{j=0}^{a-1} (sum f_i g_i + 1/2 (l1 - l2 + n - a + 2j + 1) c) v, j = 0 leftmost.
PbwVector conjecture_vector(const Character& lambda, unsigned a);
/// The four r = 1 families (which = 1..4) with parameter a.
PbwVector example_r1(unsigned which, const Character& lambda, unsigned a);

/// All example vectors at their stated weights: the three r = 0 examples at
/// n_r0, and the four r = 1 families at n_r1 with symbolic lambda and a <= a_max.
std::vector<ExampleVector> example_catalog(unsigned n_r0, unsigned n_r1, unsigned a_max);

}  // namespace heisverma
