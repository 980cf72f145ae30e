#pragma once

#include <compare>
#include <concepts>
#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace heisverma {

/// Exact arbitrary-precision rational number, always kept in lowest terms
/// with a positive denominator.
class Rational {
 public:
  Rational() = default;

  template <std::integral T>
  Rational(T value) : value_(static_cast<long>(value)) {}  // NOLINT(implicit)

  Rational(long num, long den);
  explicit Rational(mpq_class value);
  Rational(const mpz_class& num, const mpz_class& den);

  /// Parses "p", "-p" or "p/q"; throws std::invalid_argument on malformed input
  /// or a zero denominator.
  static Rational parse(std::string_view text);

  const mpq_class& value() const { return value_; }
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  /// Integer value; throws std::domain_error when not an integer or out of range.
  long to_long() const;
  /// True when the value is an integer >= 0.
  bool is_natural() const { return is_integer() && sign() >= 0; }

  Rational inverse() const;
  Rational abs() const;

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const { return Rational(mpq_class(-value_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// Canonical rendering: integers plain, otherwise "p/q".
  std::string str() const;

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Binomial coefficient C(top, k) for a rational top and natural k
/// (the generalized binomial of a power series).
Rational binomial(const Rational& top, unsigned k);
/// Ordinary binomial coefficient C(n, k) for naturals; zero when k > n.
Rational binomial(unsigned n, unsigned k);
Rational factorial(unsigned k);

}  // namespace heisverma
