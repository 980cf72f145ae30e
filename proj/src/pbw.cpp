#include "heisverma/pbw.hpp"

#include <algorithm>
#include <stdexcept>

namespace heisverma {

PbwVector PbwVector::vacuum(unsigned n) { return word(n, Word(2 * n + 1, 0), ParamScalar(1)); }

PbwVector PbwVector::word(unsigned n, const Word& w, const ParamScalar& c) {
  PbwVector v(n);
  v.add_term(w, c);
  return v;
}

PbwVector PbwVector::letter(unsigned n, const LieBasisElement& x) { return vacuum(n).left_mul(x); }

void PbwVector::add_term(const Word& w, const ParamScalar& c) {
  if (w.size() != 2 * n_ + 1) throw std::invalid_argument("PbwVector: word length mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ParamScalar PbwVector::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? ParamScalar() : it->second;
}

int PbwVector::degree() const {
  int d = -1;
  for (const auto& [w, c] : terms_) d = std::max(d, int(total_degree(w)));
  return d;
}

PbwVector& PbwVector::operator+=(const PbwVector& o) {
  if (o.is_zero()) return *this;
  if (terms_.empty()) n_ = o.n_;
  if (n_ != o.n_) throw std::invalid_argument("PbwVector: size mismatch");
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

PbwVector& PbwVector::operator-=(const PbwVector& o) {
  if (o.is_zero()) return *this;
  if (terms_.empty()) n_ = o.n_;
  if (n_ != o.n_) throw std::invalid_argument("PbwVector: size mismatch");
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

PbwVector& PbwVector::operator*=(const ParamScalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, v] : terms_) v *= c;
  return *this;
}

PbwVector PbwVector::left_mul(const LieBasisElement& x) const {
  PbwVector out(n_);
  const unsigned cs = 2 * n_;
  auto bump = [](Word w, unsigned slot, int by) {
    const int v = int(w[slot]) + by;
    if (v > int(kMaxExponent)) throw std::overflow_error("PBW exponent exceeds degree cap");
    w[slot] = static_cast<std::uint8_t>(v);
    return w;
  };
  switch (x.kind) {
    case LieKind::f:
      if (x.i < 1 || x.i > n_) throw std::out_of_range("left_mul: index out of range");
      for (const auto& [w, c] : terms_) out.add_term(bump(w, x.i - 1, 1), c);
      break;
    case LieKind::g: {
      if (x.i < 1 || x.i > n_) throw std::out_of_range("left_mul: index out of range");
      const unsigned fs = x.i - 1, gs = n_ + x.i - 1;
      // g_i f_i^a = f_i^a g_i + a f_i^{a-1} c
      for (const auto& [w, c] : terms_) {
        out.add_term(bump(w, gs, 1), c);
        if (w[fs] > 0) out.add_term(bump(bump(w, fs, -1), cs, 1), c * Rational(long(w[fs])));
      }
      break;
    }
    case LieKind::c:
      for (const auto& [w, c] : terms_) out.add_term(bump(w, cs, 1), c);
      break;
    default:
      throw std::invalid_argument("left_mul: letter is not in the opposite nilradical");
  }
  return out;
}

PbwVector operator*(const PbwVector& a, const PbwVector& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("PbwVector: size mismatch");
  const unsigned n = a.n_;
  PbwVector out(n);
  for (const auto& [w, c] : a.terms_) {
    PbwVector cur = b;
    for (unsigned k = 0; k < w[2 * n]; ++k) cur = cur.left_mul(LieBasisElement::C());
    for (unsigned i = n; i >= 1; --i)
      for (unsigned k = 0; k < w[n + i - 1]; ++k) cur = cur.left_mul(LieBasisElement::G(i));
    for (unsigned i = n; i >= 1; --i)
      for (unsigned k = 0; k < w[i - 1]; ++k) cur = cur.left_mul(LieBasisElement::F(i));
    out += cur * c;
  }
  return out;
}

PbwVector PbwVector::evaluate(const Rational& l1, const Rational& l2) const {
  PbwVector out(n_);
  for (const auto& [w, c] : terms_) out.add_term(w, ParamScalar(c.evaluate(l1, l2)));
  return out;
}

std::string PbwVector::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [w, c] = *it;
    std::string word;
    auto put = [&](const std::string& name, unsigned e) {
      if (e == 0) return;
      if (!word.empty()) word += " ";
      word += name;
      if (e > 1) word += "^" + std::to_string(e);
    };
    for (unsigned i = 1; i <= n_; ++i) put("f" + std::to_string(i), w[i - 1]);
    for (unsigned i = 1; i <= n_; ++i) put("g" + std::to_string(i), w[n_ + i - 1]);
    put("c", w[2 * n_]);
    word += word.empty() ? "v" : " . v";

    std::string coeff;
    bool neg = false;
    if (c.is_constant()) {
      const Rational v = c.constant_term();
      neg = v.sign() < 0;
      if (!v.abs().is_one()) coeff = v.abs().str() + " ";
    } else {
      coeff = "(" + c.str() + ") ";
    }
    if (first) out += neg ? "-" : "";
    else out += neg ? " - " : " + ";
    out += coeff + word;
    first = false;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const PbwVector& v) { return os << v.str(); }

PbwVector symmetrize(unsigned n, const PbwVector::Word& multiset) {
  if (multiset.size() != 2 * n + 1) throw std::invalid_argument("symmetrize: word length mismatch");
  // Letters of different indices commute and c is central, so the
  // symmetrization factors per index: sym(f^a g^b) = sum_k C(a,k) C(b,k) k!/2^k c^k f^{a-k} g^{b-k}.
  PbwVector acc = PbwVector::word(n, PbwVector::Word(2 * n + 1, 0), ParamScalar(1));
  for (unsigned i = 1; i <= n; ++i) {
    const unsigned a = multiset[i - 1], b = multiset[n + i - 1];
    if (a == 0 && b == 0) continue;
    PbwVector factor(n);
    for (unsigned k = 0; k <= std::min(a, b); ++k) {
      PbwVector::Word w(2 * n + 1, 0);
      w[i - 1] = static_cast<std::uint8_t>(a - k);
      w[n + i - 1] = static_cast<std::uint8_t>(b - k);
      w[2 * n] = static_cast<std::uint8_t>(k);
      Rational coeff = binomial(a, k) * binomial(b, k) * factorial(k);
      for (unsigned j = 0; j < k; ++j) coeff /= Rational(2);
      factor.add_term(w, ParamScalar(coeff));
    }
    acc = factor * acc;
  }
  PbwVector::Word cw(2 * n + 1, 0);
  cw[2 * n] = multiset[2 * n];
  return PbwVector::word(n, cw, ParamScalar(1)) * acc;
}

PbwVector symmetrize_by_permutations(unsigned n, const PbwVector::Word& multiset) {
  if (multiset.size() != 2 * n + 1) throw std::invalid_argument("symmetrize: word length mismatch");
  std::vector<unsigned> letters;
  for (unsigned s = 0; s < multiset.size(); ++s)
    for (unsigned k = 0; k < multiset[s]; ++k) letters.push_back(s);
  auto letter_of = [n](unsigned s) {
    if (s < n) return LieBasisElement::F(s + 1);
    if (s < 2 * n) return LieBasisElement::G(s - n + 1);
    return LieBasisElement::C();
  };
  // Distinct orderings of a multiset each occur equally often among all
  // permutations, so averaging over distinct orderings gives the same result.
  PbwVector sum(n);
  long count = 0;
  std::sort(letters.begin(), letters.end());
  do {
    PbwVector v = PbwVector::vacuum(n);
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) v = v.left_mul(letter_of(*it));
    sum += v;
    ++count;
  } while (std::next_permutation(letters.begin(), letters.end()));
  return sum * ParamScalar(Rational(1) / Rational(count));
}

}  // namespace heisverma
