#pragma once

#include <concepts>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "heisverma/rational.hpp"

namespace heisverma {

/// Monomial l1^deg1 * l2^deg2 in the two character parameters.
struct ParamMonomial {
  unsigned deg1 = 0;
  unsigned deg2 = 0;

  unsigned total() const { return deg1 + deg2; }
  friend bool operator==(const ParamMonomial&, const ParamMonomial&) = default;
};

/// Graded lexicographic order on (l1, l2): total degree first, then the l1 exponent.
inline bool grlex_less(const ParamMonomial& a, const ParamMonomial& b) {
  if (a.total() != b.total()) return a.total() < b.total();
  return a.deg1 < b.deg1;
}

/// Polynomial in l1, l2 with rational coefficients. Terms are kept sorted in
/// ascending graded-lex order with no stored zero coefficients, so equality
/// is structural.
class ParamScalar {
 public:
  using Term = std::pair<ParamMonomial, Rational>;

  ParamScalar() = default;
  ParamScalar(const Rational& c);  // NOLINT(implicit)
  template <std::integral T>
  ParamScalar(T c) : ParamScalar(Rational(c)) {}  // NOLINT(implicit)

  static ParamScalar lambda1();
  static ParamScalar lambda2();
  static ParamScalar monomial(ParamMonomial m, const Rational& c);

  /// Parses the canonical rendering produced by str(), e.g. "l1^2-1/2*l2+3".
  static ParamScalar parse(std::string_view text);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.total() == 0); }
  /// Constant term (zero if absent).
  Rational constant_term() const;
  /// The value as a Rational; throws std::domain_error if the scalar depends on l1 or l2.
  Rational as_rational() const;

  Rational evaluate(const Rational& v1, const Rational& v2) const;
  /// Substitutes l1 <- p1, l2 <- p2 (polynomial composition).
  ParamScalar substitute(const ParamScalar& p1, const ParamScalar& p2) const;

  ParamScalar& operator+=(const ParamScalar& o);
  ParamScalar& operator-=(const ParamScalar& o);
  ParamScalar& operator*=(const ParamScalar& o);
  ParamScalar& operator*=(const Rational& c);

  friend ParamScalar operator+(ParamScalar a, const ParamScalar& b) { return a += b; }
  friend ParamScalar operator-(ParamScalar a, const ParamScalar& b) { return a -= b; }
  friend ParamScalar operator*(const ParamScalar& a, const ParamScalar& b);
  friend ParamScalar operator*(ParamScalar a, const Rational& c) { return a *= c; }
  friend ParamScalar operator*(const Rational& c, ParamScalar a) { return a *= c; }
  ParamScalar operator-() const;

  friend bool operator==(const ParamScalar& a, const ParamScalar& b) { return a.terms_ == b.terms_; }

  /// Canonical rendering in descending graded-lex order: "l1+l2+4", "-1/2*l1*l2^2", "0".
  std::string str() const;

 private:
  void add_scaled(const ParamScalar& o, const Rational& scale);

  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const ParamScalar& p);

}  // namespace heisverma
