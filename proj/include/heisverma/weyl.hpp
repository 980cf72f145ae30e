#pragma once

#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "heisverma/param_scalar.hpp"

namespace heisverma {

enum class Side { hatted, dual };

/// Variable set of A_ū (hatted) or A_ū* (dual): x_1..x_n, y_1..y_n, z.
/// Slot layout: x_i -> i-1, y_i -> n+i-1, z -> 2n.
struct VarSet {
  unsigned n = 1;
  Side side = Side::dual;

  unsigned slots() const { return 2 * n + 1; }
  unsigned x(unsigned i) const;  // 1-based
  unsigned y(unsigned i) const;  // 1-based
  unsigned z() const { return 2 * n; }
  /// Weighted degree of a slot: 1 for x and y, 2 for z.
  unsigned weight(unsigned slot) const { return slot == 2 * n ? 2 : 1; }
  std::string slot_name(unsigned slot) const;

  friend bool operator==(const VarSet&, const VarSet&) = default;
};

/// Largest exponent accepted in any slot; larger values throw std::overflow_error.
inline constexpr unsigned kMaxExponent = 64;

using Exponent = boost::container::small_vector<std::uint8_t, 32>;

/// Graded lexicographic order: total degree, then the first differing slot.
struct GrlexLess {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

unsigned total_degree(const Exponent& e);
/// Adds b into a slot-wise, enforcing kMaxExponent.
void add_into(Exponent& a, const Exponent& b);

class WeylElement;

/// Polynomial in the variables of a VarSet (the module C[ū*] on the dual side).
class PolyVector {
 public:
  using TermMap = std::map<Exponent, ParamScalar, GrlexLess>;

  PolyVector() = default;
  explicit PolyVector(VarSet vs) : vs_(vs) {}

  static PolyVector constant(VarSet vs, const ParamScalar& c);
  static PolyVector variable(VarSet vs, unsigned slot);
  static PolyVector monomial(VarSet vs, const Exponent& e, const ParamScalar& c);

  const VarSet& varset() const { return vs_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(const Exponent& e, const ParamScalar& c);
  /// Coefficient of a monomial (zero if absent).
  ParamScalar coeff(const Exponent& e) const;

  PolyVector& operator+=(const PolyVector& o);
  PolyVector& operator-=(const PolyVector& o);
  PolyVector& operator*=(const ParamScalar& c);
  friend PolyVector operator+(PolyVector a, const PolyVector& b) { return a += b; }
  friend PolyVector operator-(PolyVector a, const PolyVector& b) { return a -= b; }
  friend PolyVector operator*(PolyVector a, const ParamScalar& c) { return a *= c; }
  friend PolyVector operator*(const ParamScalar& c, PolyVector a) { return a *= c; }
  friend PolyVector operator*(const PolyVector& a, const PolyVector& b);
  PolyVector operator-() const;
  PolyVector pow(unsigned k) const;

  friend bool operator==(const PolyVector& a, const PolyVector& b) {
    return a.vs_ == b.vs_ && a.terms_ == b.terms_;
  }

  /// Partial derivative in a slot.
  PolyVector derivative(unsigned slot) const;
  PolyVector evaluate(const Rational& l1, const Rational& l2) const;
  /// Maximum weighted degree (deg x = deg y = 1, deg z = 2); -1 for zero.
  int weighted_degree() const;
  /// Splits f = sum_k z^k f_k (f_k free of z); element k of the result is f_k.
  std::vector<PolyVector> z_expansion() const;

  std::string str() const;

 private:
  VarSet vs_;
  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const PolyVector& p);

/// Normal-ordered element of the Weyl algebra: terms x^alpha * D^beta with all
/// variables to the left. The key stores alpha followed by beta.
class WeylElement {
 public:
  using TermMap = std::map<Exponent, ParamScalar, GrlexLess>;

  WeylElement() = default;
  explicit WeylElement(VarSet vs) : vs_(vs) {}

  static WeylElement constant(VarSet vs, const ParamScalar& c);
  static WeylElement variable(VarSet vs, unsigned slot);
  static WeylElement derivative(VarSet vs, unsigned slot);
  static WeylElement term(VarSet vs, const Exponent& alpha, const Exponent& beta, const ParamScalar& c);
  /// Multiplication operator by a polynomial.
  static WeylElement from_poly(const PolyVector& p);

  const VarSet& varset() const { return vs_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Exponent alpha_of(const Exponent& key) const;
  Exponent beta_of(const Exponent& key) const;

  void add_term(const Exponent& alpha, const Exponent& beta, const ParamScalar& c);

  WeylElement& operator+=(const WeylElement& o);
  WeylElement& operator-=(const WeylElement& o);
  WeylElement& operator*=(const ParamScalar& c);
  friend WeylElement operator+(WeylElement a, const WeylElement& b) { return a += b; }
  friend WeylElement operator-(WeylElement a, const WeylElement& b) { return a -= b; }
  friend WeylElement operator*(WeylElement a, const ParamScalar& c) { return a *= c; }
  friend WeylElement operator*(const ParamScalar& c, WeylElement a) { return a *= c; }
  /// Normal-ordered product.
  friend WeylElement operator*(const WeylElement& a, const WeylElement& b);
  WeylElement operator-() const;

  friend bool operator==(const WeylElement& a, const WeylElement& b) {
    return a.vs_ == b.vs_ && a.terms_ == b.terms_;
  }

  WeylElement evaluate(const Rational& l1, const Rational& l2) const;
  std::string str() const;

 private:
  void add_key(const Exponent& key, const ParamScalar& c);

  VarSet vs_;
  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const WeylElement& w);

WeylElement mul(const WeylElement& p, const WeylElement& q);
WeylElement commutator(const WeylElement& p, const WeylElement& q);

/// Algebraic Fourier transform A_ū -> A_ū*: x̂ -> -D, D̂ -> x.
WeylElement fourier(const WeylElement& p);
/// Inverse transform A_ū* -> A_ū: x -> D̂, D -> -x̂.
WeylElement fourier_inverse(const WeylElement& p);

/// Action of a differential operator on a polynomial over the same VarSet.
PolyVector apply(const WeylElement& p, const PolyVector& f);

// Distinguished elements on a dual-side (or hatted-side) VarSet.
// Index ranges are 1-based and inclusive: [lo, hi].
PolyVector q_poly(VarSet vs, unsigned lo, unsigned hi);
inline PolyVector q_poly(VarSet vs) { return q_poly(vs, 1, vs.n); }
/// Euler operators sum x_i Dx_i, sum y_i Dy_i over [lo, hi], and z Dz.
WeylElement euler_x(VarSet vs, unsigned lo, unsigned hi);
WeylElement euler_y(VarSet vs, unsigned lo, unsigned hi);
inline WeylElement euler_x(VarSet vs) { return euler_x(vs, 1, vs.n); }
inline WeylElement euler_y(VarSet vs) { return euler_y(vs, 1, vs.n); }
WeylElement euler_z(VarSet vs);
/// Box operator sum Dx_i Dy_i over [lo, hi].
WeylElement box(VarSet vs, unsigned lo, unsigned hi);
inline WeylElement box(VarSet vs) { return box(vs, 1, vs.n); }

/// Joint eigencomponent of the two Euler-type operators for split index r.
struct BidegreeComponent {
  long m = 0;
  long t = 0;
  PolyVector component;
};

/// Eigenvalues (m, t) of a single monomial on a dual-side VarSet with split r.
std::pair<long, long> monomial_bidegree(const VarSet& vs, unsigned r, const Exponent& e);
/// Decomposes f into components ordered by (m, t).
std::vector<BidegreeComponent> euler_bidegree(const PolyVector& f, unsigned r);
/// The operators m and t themselves: m = E_x + E_y + 2E_z and
/// t = (n-r+2)(E_x' - E_y') + (n-r)(E_x'' - E_y'').
WeylElement euler_m(VarSet vs);
WeylElement euler_t(VarSet vs, unsigned r);

}  // namespace heisverma
