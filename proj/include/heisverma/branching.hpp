#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "heisverma/fischer.hpp"
#include "heisverma/lie.hpp"
#include "heisverma/pbw.hpp"
#include "heisverma/rational.hpp"
#include "heisverma/weyl.hpp"

namespace heisverma {

// Everything in this header uses the theorem-level lambda: the module is
// M(lambda) and the closed formulas are evaluated at mu = lambda + rho.

/// C(a+r-1, a) C(b+r-1, b). Throws std::invalid_argument for r = 0.
unsigned long multiplicity(unsigned a, unsigned b, unsigned r);

enum class CaseTag { case1, case2, case3, case4 };
std::string to_string(CaseTag c);

/// Isotypical component V_{a0,b0,c0,d0} of the singular vectors of M(lambda)
/// for the pair (sl(n+2), sl(n-r+2)).
struct ComponentDescriptor {
  unsigned a0 = 0, b0 = 0, c0 = 0, d0 = 0;
  CaseTag case_tag = CaseTag::case4;
  Rational l1, l2;
  unsigned n = 0, r = 0;

  Character lambda() const { return {n, ParamScalar(l1), ParamScalar(l2)}; }
  unsigned m() const { return a0 + b0 + c0 + d0; }
  long t() const;
  std::string label() const;

  friend bool operator==(const ComponentDescriptor&, const ComponentDescriptor&) = default;
};

/// The case whose constraints (a0, b0, c0, d0) satisfies, if any:
/// Case1 a0, b0 != 0, a0+c0 = l1+1, b0+d0 = l2+1; Case2 a0 != 0, b0 = 0,
/// a0+c0 = l1+1; Case3 a0 = 0, b0 != 0, b0+d0 = l2+1; Case4 a0 = b0 = 0.
std::optional<CaseTag> classify_case(unsigned a0, unsigned b0, unsigned c0, unsigned d0, const Rational& l1,
                                     const Rational& l2);

/// Components with a0+b0+c0+d0 <= m_max, following the integrality pattern of
/// (l1, l2) as the four classification theorems prescribe. For r = 0 these are
/// the short lists made of H_{0,0}, H_{l1+1,0}, H_{0,l2+1}, H_{l1+1,l2+1} and
/// the q-power components P H_{0,0}, P1 H_{-l2-n,0}, P2 H_{0,-l1-n}.
/// Throws std::invalid_argument when n - r <= 2.
std::vector<ComponentDescriptor> enumerate_components(const Rational& l1, const Rational& l2, unsigned n, unsigned r,
                                                      unsigned m_max);

/// The same set reached differently: every tuple satisfying a case
/// constraint whose predicted dimension is non-zero.
std::vector<ComponentDescriptor> enumerate_by_cases(const Rational& l1, const Rational& l2, unsigned n, unsigned r,
                                                    unsigned m_max);

/// sum_l dim S_{l, c0+d0} dim H'_{a0,b0} dim H''_{c0-l, d0-l}.
std::size_t component_dimension(const ComponentDescriptor& comp);

struct SingularVector {
  PolyVector polynomial;
  PbwVector pbw;
  ComponentDescriptor component;
  long m = 0;
  long t = 0;
};

/// R = T_{a0+c0, b0+d0}(u) h' h'' with u in S_{l, c0+d0}, h' in H'_{a0,b0}
/// (block 1..n-r) and h'' in H''_{c0-l, d0-l} (block n-r+1..n; the constant 1
/// when r = 0). The PBW image is filled in when with_pbw is set.
/// Throws std::invalid_argument if an input is not in its space.
SingularVector build_R(const ComponentDescriptor& comp, const PolyVector& h1, const PolyVector& h2, const RadialPoly& u,
                       bool with_pbw = true);

/// All build_R outputs over the bases of S, H' and H'' of a component.
std::vector<SingularVector> component_vectors(const ComponentDescriptor& comp, bool with_pbw = false);

/// Checks the two z-recurrences (from d_i and e_i, i <= n-r) on R = sum z^k R_{m-2k}.
bool recurrence_check(const PolyVector& R, const Character& lambda, unsigned r);
inline bool recurrence_check(const SingularVector& v) {
  return recurrence_check(v.polynomial, v.component.lambda(), v.component.r);
}

/// True iff pi_hat(d_i) R = pi_hat(e_i) R = 0 for i <= n-r.
bool is_annihilated(const PolyVector& R, const Character& lambda, unsigned r);

/// Monomials of the (m, t) slice of C[x, y, z] for split r.
std::vector<Exponent> slice_monomials(unsigned n, unsigned r, unsigned m, long t);
/// The t values occurring at weighted degree m, increasing.
std::vector<long> admissible_t(unsigned n, unsigned r, unsigned m);

/// Exact basis of the joint kernel of pi_hat(d_i), pi_hat(e_i), i <= n-r, on
/// the (m, t) slice. Works for any r < n.
std::vector<PolyVector> brute_force_solve(const Rational& l1, const Rational& l2, unsigned n, unsigned r, unsigned m,
                                          long t);

/// Basis of the vectors in span(basis) killed by pi_hat(hE_ij), i < j <= n-r.
std::vector<PolyVector> highest_weight_filter(const std::vector<PolyVector>& basis, unsigned n, unsigned r);

/// Weight of a monomial under the Cartan of sl(n-r): deg x_i - deg y_i, i <= n-r.
std::vector<long> block_weight(const VarSet& vs, unsigned r, const Exponent& e);

/// Dimension of the highest weight vectors per Cartan weight. The span of the
/// input must be stable under the Cartan (true for brute-force slices).
std::map<std::vector<long>, std::size_t> highest_weight_counts(const std::vector<PolyVector>& basis, unsigned n,
                                                               unsigned r);

/// Dimension of a span of polynomials.
std::size_t span_rank(const std::vector<PolyVector>& vs);

struct SliceReport {
  long m = 0;
  long t = 0;
  std::size_t oracle_dim = 0;
  std::size_t predicted_dim = 0;  // rank of the build_R span
  std::size_t formula_dim = 0;    // sum of component_dimension
  bool span_match = false;        // rank of the concatenation equals both ranks
  bool recurrences_ok = false;
  std::vector<ComponentDescriptor> components;
  std::vector<PolyVector> basis;  // oracle basis

  bool match() const {
    return oracle_dim == predicted_dim && predicted_dim == formula_dim && span_match && recurrences_ok;
  }
};

/// Compares oracle and theorem at every (m, t) with m <= m_max. Slices run on
/// thread_count() threads; the result is ordered by (m, t).
std::vector<SliceReport> cross_validate(const Rational& l1, const Rational& l2, unsigned n, unsigned r,
                                        unsigned m_max);

struct ConjectureVerdict {
  bool verdict = false;      // polynomial side annihilated by all d_i, e_i
  bool pbw_verdict = false;  // the same question asked in M(lambda) directly
  PbwVector vector;
  PolyVector polynomial;
};

/// The ordered product prod_{j=0}^{a-1} (sum f_i g_i + 1/2 (l1-l2+n-a+2j+1) c) v
/// tested for singularity with r = 0. Requires l1 + l2 + n = a - 1.
ConjectureVerdict factorization_check(const Rational& l1, const Rational& l2, unsigned a, unsigned n);

/// HEISVERMA_THREADS if set and positive, else the hardware concurrency.
unsigned thread_count();
/// Runs body(0..count-1) on up to thread_count() threads.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace heisverma
