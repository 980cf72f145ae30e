#include "heisverma/rational.hpp"

#include <stdexcept>

namespace heisverma {

Rational::Rational(long num, long den) : value_(num, den) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational::Rational(const mpz_class& num, const mpz_class& den) : value_(num, den) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("Rational: empty string");
  if (s.front() == '+') s.erase(0, 1);
  const auto slash = s.find('/');
  auto check_digits = [&](const std::string& part, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && !part.empty() && part[0] == '-') i = 1;
    if (i >= part.size()) throw std::invalid_argument("Rational: malformed '" + std::string(text) + "'");
    for (; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9')
        throw std::invalid_argument("Rational: malformed '" + std::string(text) + "'");
  };
  if (slash == std::string::npos) {
    check_digits(s, true);
    return Rational(mpq_class(mpz_class(s, 10)));
  }
  const std::string num = s.substr(0, slash);
  const std::string den = s.substr(slash + 1);
  check_digits(num, true);
  check_digits(den, false);
  return Rational(mpz_class(num, 10), mpz_class(den, 10));
}

long Rational::to_long() const {
  if (!is_integer()) throw std::domain_error("Rational::to_long: " + str() + " is not an integer");
  const mpz_class& num = value_.get_num();
  if (!num.fits_slong_p()) throw std::domain_error("Rational::to_long: out of range");
  return num.get_si();
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("Rational: division by zero");
  return Rational(mpq_class(1 / value_));
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  value_ /= o.value_;
  return *this;
}

std::string Rational::str() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational binomial(const Rational& top, unsigned k) {
  Rational result(1);
  for (unsigned i = 0; i < k; ++i) {
    result *= top - Rational(i);
    result /= Rational(i + 1);
  }
  return result;
}

Rational binomial(unsigned n, unsigned k) {
  if (k > n) return Rational(0);
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return Rational(out, mpz_class(1));
}

Rational factorial(unsigned k) {
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), k);
  return Rational(out, mpz_class(1));
}

}  // namespace heisverma
