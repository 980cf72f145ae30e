#include "heisverma/weyl.hpp"

#include <algorithm>
#include <stdexcept>

namespace heisverma {

unsigned VarSet::x(unsigned i) const {
  if (i < 1 || i > n) throw std::out_of_range("VarSet::x: index out of range");
  return i - 1;
}

unsigned VarSet::y(unsigned i) const {
  if (i < 1 || i > n) throw std::out_of_range("VarSet::y: index out of range");
  return n + i - 1;
}

std::string VarSet::slot_name(unsigned slot) const {
  if (slot < n) return "x" + std::to_string(slot + 1);
  if (slot < 2 * n) return "y" + std::to_string(slot - n + 1);
  if (slot == 2 * n) return "z";
  throw std::out_of_range("VarSet::slot_name: slot out of range");
}

bool GrlexLess::operator()(const Exponent& a, const Exponent& b) const {
  const unsigned da = total_degree(a);
  const unsigned db = total_degree(b);
  if (da != db) return da < db;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

unsigned total_degree(const Exponent& e) {
  unsigned d = 0;
  for (auto v : e) d += v;
  return d;
}

void add_into(Exponent& a, const Exponent& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    const unsigned v = unsigned(a[i]) + b[i];
    if (v > kMaxExponent) throw std::overflow_error("exponent exceeds degree cap");
    a[i] = static_cast<std::uint8_t>(v);
  }
}

namespace {

void check_same(const VarSet& a, const VarSet& b, const char* what) {
  if (!(a == b)) throw std::invalid_argument(std::string(what) + ": variable set mismatch");
}

std::string coeff_prefix(const ParamScalar& c, bool first, bool has_monomial) {
  // Returns the signed coefficient text; empty body when the coefficient is +-1
  // in front of a monomial.
  std::string out;
  if (c.is_constant()) {
    const Rational v = c.constant_term();
    const bool neg = v.sign() < 0;
    if (neg) out = "-";
    else if (!first) out = "+";
    const Rational mag = v.abs();
    if (!has_monomial) return out + mag.str();
    if (!mag.is_one()) out += mag.str() + "*";
    return out;
  }
  // pull a leading minus out of the parentheses
  const std::string body = c.str();
  if (body[0] == '-') out = "-(" + (-c).str() + ")";
  else out = (first ? "(" : "+(") + body + ")";
  if (has_monomial) out += "*";
  return out;
}

std::string monomial_text(const VarSet& vs, const Exponent& e, const char* prefix) {
  std::string out;
  for (unsigned s = 0; s < e.size(); ++s) {
    if (e[s] == 0) continue;
    if (!out.empty()) out += "*";
    out += prefix + vs.slot_name(s);
    if (e[s] > 1) out += "^" + std::to_string(e[s]);
  }
  return out;
}

// Falling factorial a (a-1) ... (a-k+1) as a Rational.
Rational falling(unsigned a, unsigned k) {
  Rational r(1);
  for (unsigned i = 0; i < k; ++i) r *= Rational(long(a - i));
  return r;
}

// Normal-orders D^b x^c on one slot set: D^b x^c = sum_k C(b,k) C(c,k) k! x^{c-k} D^{b-k},
// slot-wise. Calls emit(kvec, coeff) for every admissible k.
template <class Emit>
void reorder(const Exponent& b, const Exponent& c, Emit&& emit) {
  std::vector<unsigned> contact;
  for (unsigned s = 0; s < b.size(); ++s)
    if (b[s] && c[s]) contact.push_back(s);
  Exponent k(b.size(), 0);
  if (contact.empty()) {
    emit(k, Rational(1));
    return;
  }
  // odometer over k_s in [0, min(b_s, c_s)]
  while (true) {
    Rational coeff(1);
    for (unsigned s : contact)
      coeff *= falling(b[s], k[s]) * falling(c[s], k[s]) / factorial(k[s]);
    emit(k, coeff);
    std::size_t j = 0;
    for (; j < contact.size(); ++j) {
      const unsigned s = contact[j];
      if (k[s] < std::min(b[s], c[s])) {
        ++k[s];
        break;
      }
      k[s] = 0;
    }
    if (j == contact.size()) break;
  }
}

}  // namespace

// ---------------------------------------------------------------- PolyVector

PolyVector PolyVector::constant(VarSet vs, const ParamScalar& c) {
  PolyVector p(vs);
  p.add_term(Exponent(vs.slots(), 0), c);
  return p;
}

PolyVector PolyVector::variable(VarSet vs, unsigned slot) {
  Exponent e(vs.slots(), 0);
  e.at(slot) = 1;
  return monomial(vs, e, ParamScalar(1));
}

PolyVector PolyVector::monomial(VarSet vs, const Exponent& e, const ParamScalar& c) {
  PolyVector p(vs);
  p.add_term(e, c);
  return p;
}

void PolyVector::add_term(const Exponent& e, const ParamScalar& c) {
  if (e.size() != vs_.slots()) throw std::invalid_argument("PolyVector: exponent length mismatch");
  for (auto v : e)
    if (v > kMaxExponent) throw std::overflow_error("exponent exceeds degree cap");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ParamScalar PolyVector::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? ParamScalar() : it->second;
}

PolyVector& PolyVector::operator+=(const PolyVector& o) {
  if (o.is_zero()) return *this;
  if (terms_.empty()) vs_ = o.vs_;
  check_same(vs_, o.vs_, "PolyVector::+");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

PolyVector& PolyVector::operator-=(const PolyVector& o) {
  if (o.is_zero()) return *this;
  if (terms_.empty()) vs_ = o.vs_;
  check_same(vs_, o.vs_, "PolyVector::-");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

PolyVector& PolyVector::operator*=(const ParamScalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

PolyVector operator*(const PolyVector& a, const PolyVector& b) {
  check_same(a.vs_, b.vs_, "PolyVector::*");
  PolyVector out(a.vs_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Exponent e = ea;
      add_into(e, eb);
      out.add_term(e, ca * cb);
    }
  return out;
}

PolyVector PolyVector::operator-() const {
  PolyVector out = *this;
  for (auto& [e, v] : out.terms_) v = -v;
  return out;
}

PolyVector PolyVector::pow(unsigned k) const {
  PolyVector out = constant(vs_, ParamScalar(1));
  for (unsigned i = 0; i < k; ++i) out = out * *this;
  return out;
}

PolyVector PolyVector::derivative(unsigned slot) const {
  PolyVector out(vs_);
  for (const auto& [e, c] : terms_) {
    if (e.at(slot) == 0) continue;
    Exponent d = e;
    --d[slot];
    out.add_term(d, c * Rational(long(e[slot])));
  }
  return out;
}

PolyVector PolyVector::evaluate(const Rational& l1, const Rational& l2) const {
  PolyVector out(vs_);
  for (const auto& [e, c] : terms_) out.add_term(e, ParamScalar(c.evaluate(l1, l2)));
  return out;
}

int PolyVector::weighted_degree() const {
  int best = -1;
  for (const auto& [e, c] : terms_) {
    int d = 0;
    for (unsigned s = 0; s < e.size(); ++s) d += int(e[s]) * int(vs_.weight(s));
    best = std::max(best, d);
  }
  return best;
}

std::vector<PolyVector> PolyVector::z_expansion() const {
  std::vector<PolyVector> out;
  const unsigned zs = vs_.z();
  for (const auto& [e, c] : terms_) {
    const unsigned k = e[zs];
    while (out.size() <= k) out.emplace_back(vs_);
    Exponent f = e;
    f[zs] = 0;
    out[k].add_term(f, c);
  }
  return out;
}

std::string PolyVector::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const std::string mono = monomial_text(vs_, it->first, "");
    out += coeff_prefix(it->second, first, !mono.empty()) + mono;
    first = false;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const PolyVector& p) { return os << p.str(); }

// --------------------------------------------------------------- WeylElement

WeylElement WeylElement::constant(VarSet vs, const ParamScalar& c) {
  Exponent zero(vs.slots(), 0);
  return term(vs, zero, zero, c);
}

WeylElement WeylElement::variable(VarSet vs, unsigned slot) {
  Exponent a(vs.slots(), 0), b(vs.slots(), 0);
  a.at(slot) = 1;
  return term(vs, a, b, ParamScalar(1));
}

WeylElement WeylElement::derivative(VarSet vs, unsigned slot) {
  Exponent a(vs.slots(), 0), b(vs.slots(), 0);
  b.at(slot) = 1;
  return term(vs, a, b, ParamScalar(1));
}

WeylElement WeylElement::term(VarSet vs, const Exponent& alpha, const Exponent& beta, const ParamScalar& c) {
  WeylElement w(vs);
  w.add_term(alpha, beta, c);
  return w;
}

WeylElement WeylElement::from_poly(const PolyVector& p) {
  WeylElement w(p.varset());
  const Exponent zero(p.varset().slots(), 0);
  for (const auto& [e, c] : p.terms()) w.add_term(e, zero, c);
  return w;
}

Exponent WeylElement::alpha_of(const Exponent& key) const {
  return Exponent(key.begin(), key.begin() + vs_.slots());
}

Exponent WeylElement::beta_of(const Exponent& key) const {
  return Exponent(key.begin() + vs_.slots(), key.end());
}

void WeylElement::add_key(const Exponent& key, const ParamScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void WeylElement::add_term(const Exponent& alpha, const Exponent& beta, const ParamScalar& c) {
  const unsigned s = vs_.slots();
  if (alpha.size() != s || beta.size() != s) throw std::invalid_argument("WeylElement: exponent length mismatch");
  Exponent key;
  key.reserve(2 * s);
  for (auto v : alpha) {
    if (v > kMaxExponent) throw std::overflow_error("exponent exceeds degree cap");
    key.push_back(v);
  }
  for (auto v : beta) {
    if (v > kMaxExponent) throw std::overflow_error("exponent exceeds degree cap");
    key.push_back(v);
  }
  add_key(key, c);
}

WeylElement& WeylElement::operator+=(const WeylElement& o) {
  if (o.is_zero()) return *this;
  if (terms_.empty()) vs_ = o.vs_;
  check_same(vs_, o.vs_, "WeylElement::+");
  for (const auto& [k, c] : o.terms_) add_key(k, c);
  return *this;
}

WeylElement& WeylElement::operator-=(const WeylElement& o) {
  if (o.is_zero()) return *this;
  if (terms_.empty()) vs_ = o.vs_;
  check_same(vs_, o.vs_, "WeylElement::-");
  for (const auto& [k, c] : o.terms_) add_key(k, -c);
  return *this;
}

WeylElement& WeylElement::operator*=(const ParamScalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

WeylElement operator*(const WeylElement& p, const WeylElement& q) {
  check_same(p.vs_, q.vs_, "mul");
  WeylElement out(p.vs_);
  const unsigned s = p.vs_.slots();
  for (const auto& [kp, cp] : p.terms_) {
    const Exponent a = p.alpha_of(kp), b = p.beta_of(kp);
    for (const auto& [kq, cq] : q.terms_) {
      const Exponent c = q.alpha_of(kq), d = q.beta_of(kq);
      const ParamScalar base = cp * cq;
      reorder(b, c, [&](const Exponent& k, const Rational& w) {
        Exponent alpha = a, beta = d;
        for (unsigned i = 0; i < s; ++i) {
          alpha[i] = static_cast<std::uint8_t>(alpha[i] + c[i] - k[i]);
          beta[i] = static_cast<std::uint8_t>(beta[i] + b[i] - k[i]);
          if (alpha[i] > kMaxExponent || beta[i] > kMaxExponent)
            throw std::overflow_error("exponent exceeds degree cap");
        }
        out.add_term(alpha, beta, base * w);
      });
    }
  }
  return out;
}

WeylElement WeylElement::operator-() const {
  WeylElement out = *this;
  for (auto& [k, v] : out.terms_) v = -v;
  return out;
}

WeylElement WeylElement::evaluate(const Rational& l1, const Rational& l2) const {
  WeylElement out(vs_);
  for (const auto& [k, c] : terms_) out.add_key(k, ParamScalar(c.evaluate(l1, l2)));
  return out;
}

std::string WeylElement::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    std::string mono = monomial_text(vs_, alpha_of(it->first), "");
    const std::string der = monomial_text(vs_, beta_of(it->first), "D");
    if (!der.empty()) mono += (mono.empty() ? "" : "*") + der;
    out += coeff_prefix(it->second, first, !mono.empty()) + mono;
    first = false;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const WeylElement& w) { return os << w.str(); }

WeylElement mul(const WeylElement& p, const WeylElement& q) { return p * q; }

WeylElement commutator(const WeylElement& p, const WeylElement& q) { return p * q - q * p; }

namespace {

// Transform of x^alpha D^beta where the images of the generators are
// x -> sx * D', D -> sd * x'. The image is sx^|alpha| sd^|beta| D'^alpha x'^beta.
WeylElement transform(const WeylElement& p, Side target, int sx, int sd) {
  VarSet vs = p.varset();
  vs.side = target;
  WeylElement out(vs);
  for (const auto& [key, c] : p.terms()) {
    const Exponent alpha = p.alpha_of(key), beta = p.beta_of(key);
    const int sign = ((sx < 0 && total_degree(alpha) % 2) != (sd < 0 && total_degree(beta) % 2)) ? -1 : 1;
    const ParamScalar base = c * Rational(sign);
    reorder(alpha, beta, [&](const Exponent& k, const Rational& w) {
      Exponent na = beta, nb = alpha;
      for (unsigned i = 0; i < na.size(); ++i) {
        na[i] = static_cast<std::uint8_t>(na[i] - k[i]);
        nb[i] = static_cast<std::uint8_t>(nb[i] - k[i]);
      }
      out.add_term(na, nb, base * w);
    });
  }
  return out;
}

}  // namespace

WeylElement fourier(const WeylElement& p) {
  if (p.varset().side != Side::hatted) throw std::invalid_argument("fourier: expects a hatted-side element");
  return transform(p, Side::dual, -1, 1);
}

WeylElement fourier_inverse(const WeylElement& p) {
  if (p.varset().side != Side::dual) throw std::invalid_argument("fourier_inverse: expects a dual-side element");
  return transform(p, Side::hatted, 1, -1);
}

PolyVector apply(const WeylElement& p, const PolyVector& f) {
  if (f.is_zero()) return PolyVector(p.varset());
  check_same(p.varset(), f.varset(), "apply");
  PolyVector out(p.varset());
  const unsigned s = p.varset().slots();
  for (const auto& [key, c] : p.terms()) {
    const Exponent alpha = p.alpha_of(key), beta = p.beta_of(key);
    for (const auto& [e, fc] : f.terms()) {
      bool ok = true;
      Rational w(1);
      Exponent r = e;
      for (unsigned i = 0; i < s && ok; ++i) {
        if (e[i] < beta[i]) {
          ok = false;
          break;
        }
        if (beta[i]) w *= falling(e[i], beta[i]);
        r[i] = static_cast<std::uint8_t>(e[i] - beta[i]);
      }
      if (!ok) continue;
      add_into(r, alpha);
      out.add_term(r, c * fc * w);
    }
  }
  return out;
}

PolyVector q_poly(VarSet vs, unsigned lo, unsigned hi) {
  PolyVector out(vs);
  for (unsigned i = lo; i <= hi; ++i) {
    Exponent e(vs.slots(), 0);
    e[vs.x(i)] = 1;
    e[vs.y(i)] = 1;
    out.add_term(e, ParamScalar(1));
  }
  return out;
}

namespace {

WeylElement euler_slots(VarSet vs, const std::vector<unsigned>& slots) {
  WeylElement out(vs);
  for (unsigned s : slots) {
    Exponent a(vs.slots(), 0);
    a[s] = 1;
    out.add_term(a, a, ParamScalar(1));
  }
  return out;
}

}  // namespace

WeylElement euler_x(VarSet vs, unsigned lo, unsigned hi) {
  std::vector<unsigned> slots;
  for (unsigned i = lo; i <= hi; ++i) slots.push_back(vs.x(i));
  return euler_slots(vs, slots);
}

WeylElement euler_y(VarSet vs, unsigned lo, unsigned hi) {
  std::vector<unsigned> slots;
  for (unsigned i = lo; i <= hi; ++i) slots.push_back(vs.y(i));
  return euler_slots(vs, slots);
}

WeylElement euler_z(VarSet vs) { return euler_slots(vs, {vs.z()}); }

WeylElement box(VarSet vs, unsigned lo, unsigned hi) {
  WeylElement out(vs);
  const Exponent zero(vs.slots(), 0);
  for (unsigned i = lo; i <= hi; ++i) {
    Exponent b(vs.slots(), 0);
    b[vs.x(i)] = 1;
    b[vs.y(i)] = 1;
    out.add_term(zero, b, ParamScalar(1));
  }
  return out;
}

std::pair<long, long> monomial_bidegree(const VarSet& vs, unsigned r, const Exponent& e) {
  if (r >= vs.n) throw std::invalid_argument("euler_bidegree: need 0 <= r < n");
  const long n = vs.n;
  const long split = n - long(r);
  long m = 2 * long(e[vs.z()]);
  long tp = 0, tpp = 0;
  for (unsigned i = 1; i <= vs.n; ++i) {
    const long dx = e[vs.x(i)], dy = e[vs.y(i)];
    m += dx + dy;
    (long(i) <= split ? tp : tpp) += dx - dy;
  }
  return {m, (split + 2) * tp + split * tpp};
}

std::vector<BidegreeComponent> euler_bidegree(const PolyVector& f, unsigned r) {
  if (r >= f.varset().n) throw std::invalid_argument("euler_bidegree: need 0 <= r < n");
  std::map<std::pair<long, long>, PolyVector> parts;
  for (const auto& [e, c] : f.terms()) {
    auto key = monomial_bidegree(f.varset(), r, e);
    auto [it, inserted] = parts.try_emplace(key, f.varset());
    it->second.add_term(e, c);
  }
  std::vector<BidegreeComponent> out;
  for (auto& [key, p] : parts) out.push_back({key.first, key.second, std::move(p)});
  return out;
}

WeylElement euler_m(VarSet vs) {
  return euler_x(vs) + euler_y(vs) + euler_z(vs) * ParamScalar(2);
}

WeylElement euler_t(VarSet vs, unsigned r) {
  const unsigned split = vs.n - r;
  WeylElement t = (euler_x(vs, 1, split) - euler_y(vs, 1, split)) * ParamScalar(long(split + 2));
  if (r > 0) t += (euler_x(vs, split + 1, vs.n) - euler_y(vs, split + 1, vs.n)) * ParamScalar(long(split));
  return t;
}

}  // namespace heisverma
