#include "heisverma/param_scalar.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace heisverma {

ParamScalar::ParamScalar(const Rational& c) {
  if (!c.is_zero()) terms_.emplace_back(ParamMonomial{}, c);
}

ParamScalar ParamScalar::lambda1() { return monomial({1, 0}, Rational(1)); }
ParamScalar ParamScalar::lambda2() { return monomial({0, 1}, Rational(1)); }

ParamScalar ParamScalar::monomial(ParamMonomial m, const Rational& c) {
  ParamScalar out;
  if (!c.is_zero()) out.terms_.emplace_back(m, c);
  return out;
}

Rational ParamScalar::constant_term() const {
  if (!terms_.empty() && terms_[0].first.total() == 0) return terms_[0].second;
  return Rational(0);
}

Rational ParamScalar::as_rational() const {
  if (!is_constant()) throw std::domain_error("ParamScalar '" + str() + "' is not a constant");
  return constant_term();
}

Rational ParamScalar::evaluate(const Rational& v1, const Rational& v2) const {
  Rational out(0);
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (unsigned i = 0; i < m.deg1; ++i) t *= v1;
    for (unsigned i = 0; i < m.deg2; ++i) t *= v2;
    out += t;
  }
  return out;
}

ParamScalar ParamScalar::substitute(const ParamScalar& p1, const ParamScalar& p2) const {
  ParamScalar out;
  for (const auto& [m, c] : terms_) {
    ParamScalar t(c);
    for (unsigned i = 0; i < m.deg1; ++i) t *= p1;
    for (unsigned i = 0; i < m.deg2; ++i) t *= p2;
    out += t;
  }
  return out;
}

void ParamScalar::add_scaled(const ParamScalar& o, const Rational& scale) {
  if (o.terms_.empty() || scale.is_zero()) return;
  // fast path: both constant
  if (o.terms_.size() == 1 && terms_.size() <= 1 && o.terms_[0].first.total() == 0 &&
      (terms_.empty() || terms_[0].first.total() == 0)) {
    if (terms_.empty()) {
      terms_.emplace_back(ParamMonomial{}, o.terms_[0].second * scale);
    } else {
      terms_[0].second += o.terms_[0].second * scale;
      if (terms_[0].second.is_zero()) terms_.clear();
    }
    return;
  }
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && grlex_less(a->first, b->first))) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || grlex_less(b->first, a->first)) {
      merged.emplace_back(b->first, b->second * scale);
      ++b;
    } else {
      Rational c = a->second + b->second * scale;
      if (!c.is_zero()) merged.emplace_back(a->first, std::move(c));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
}

ParamScalar& ParamScalar::operator+=(const ParamScalar& o) {
  add_scaled(o, Rational(1));
  return *this;
}

ParamScalar& ParamScalar::operator-=(const ParamScalar& o) {
  add_scaled(o, Rational(-1));
  return *this;
}

ParamScalar& ParamScalar::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= c;
  return *this;
}

ParamScalar operator*(const ParamScalar& a, const ParamScalar& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (b.terms_.size() == 1 && b.terms_[0].first.total() == 0) return a * b.terms_[0].second;
  if (a.terms_.size() == 1 && a.terms_[0].first.total() == 0) return b * a.terms_[0].second;
  ParamScalar out;
  for (const auto& [ma, ca] : a.terms_) {
    ParamScalar row;
    for (const auto& [mb, cb] : b.terms_)
      row.terms_.emplace_back(ParamMonomial{ma.deg1 + mb.deg1, ma.deg2 + mb.deg2}, ca * cb);
    // multiplying by a fixed monomial preserves grlex order
    out += row;
  }
  return out;
}

ParamScalar& ParamScalar::operator*=(const ParamScalar& o) {
  *this = *this * o;
  return *this;
}

ParamScalar ParamScalar::operator-() const {
  ParamScalar out = *this;
  for (auto& t : out.terms_) t.second = -t.second;
  return out;
}

std::string ParamScalar::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    std::string mono;
    auto append = [&](const char* name, unsigned deg) {
      if (deg == 0) return;
      if (!mono.empty()) mono += "*";
      mono += name;
      if (deg > 1) mono += "^" + std::to_string(deg);
    };
    append("l1", m.deg1);
    append("l2", m.deg2);
    std::string term;
    const bool negative = c.sign() < 0;
    const Rational mag = c.abs();
    if (mono.empty()) {
      term = mag.str();
    } else if (mag.is_one()) {
      term = mono;
    } else {
      term = mag.str() + "*" + mono;
    }
    if (out.empty()) {
      out = negative ? "-" + term : term;
    } else {
      out += negative ? "-" : "+";
      out += term;
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const ParamScalar& p) { return os << p.str(); }

namespace {

class ScalarParser {
 public:
  explicit ScalarParser(std::string_view text) : text_(text) {}

  ParamScalar parse() {
    skip_ws();
    if (at_end()) fail("empty expression");
    ParamScalar out;
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      out += parse_term() * Rational(sign);
      first = false;
      skip_ws();
    }
    return out;
  }

 private:
  ParamScalar parse_term() {
    Rational coeff(1);
    ParamMonomial mono;
    bool have_factor = false;
    while (true) {
      skip_ws();
      if (at_end()) break;
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        coeff *= parse_rational();
      } else if (peek() == 'l') {
        ++pos_;
        if (at_end() || (peek() != '1' && peek() != '2')) fail("expected l1 or l2");
        const bool is_first = peek() == '1';
        ++pos_;
        unsigned deg = 1;
        if (!at_end() && peek() == '^') {
          ++pos_;
          deg = parse_unsigned();
        }
        (is_first ? mono.deg1 : mono.deg2) += deg;
      } else {
        fail("unexpected character");
      }
      have_factor = true;
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    if (!have_factor) fail("empty term");
    return ParamScalar::monomial(mono, coeff);
  }

  Rational parse_rational() {
    const std::size_t start = pos_;
    while (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/')) ++pos_;
    return Rational::parse(text_.substr(start, pos_ - start));
  }

  unsigned parse_unsigned() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected exponent");
    return static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start))));
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("ParamScalar::parse: " + what + " in '" + std::string(text_) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

ParamScalar ParamScalar::parse(std::string_view text) { return ScalarParser(text).parse(); }

}  // namespace heisverma
