#include "heisverma/fischer.hpp"

#include <stdexcept>

#include "heisverma/linalg.hpp"

namespace heisverma {

namespace {

void compositions(unsigned total, unsigned parts, std::vector<unsigned>& cur,
                  std::vector<std::vector<unsigned>>& out) {
  if (parts == 1) {
    cur.push_back(total);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (unsigned v = total + 1; v-- > 0;) {
    cur.push_back(v);
    compositions(total - v, parts - 1, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<unsigned>> compositions(unsigned total, unsigned parts) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> cur;
  compositions(total, parts, cur, out);
  return out;
}

std::pair<unsigned, unsigned> block_bidegree(const VarSet& vs, const Exponent& e, unsigned lo, unsigned hi) {
  unsigned a = 0, b = 0;
  for (unsigned i = lo; i <= hi; ++i) {
    a += e[vs.x(i)];
    b += e[vs.y(i)];
  }
  return {a, b};
}

// Binomial coefficient C(top, k) with a polynomial top.
ParamScalar param_binomial(const ParamScalar& top, unsigned k) {
  ParamScalar out(1);
  for (unsigned i = 0; i < k; ++i) out = out * (top - ParamScalar(long(i))) * Rational(1, long(i) + 1);
  return out;
}

}  // namespace

std::vector<Exponent> block_monomials(VarSet vs, unsigned lo, unsigned hi, unsigned a, unsigned b) {
  const unsigned m = hi + 1 - lo;
  std::vector<Exponent> out;
  const auto xs = compositions(a, m);
  const auto ys = compositions(b, m);
  for (const auto& cx : xs)
    for (const auto& cy : ys) {
      Exponent e(vs.slots(), 0);
      for (unsigned t = 0; t < m; ++t) {
        e[vs.x(lo + t)] = static_cast<std::uint8_t>(cx[t]);
        e[vs.y(lo + t)] = static_cast<std::uint8_t>(cy[t]);
      }
      out.push_back(e);
    }
  return out;
}

HarmonicSpace harmonic_basis(VarSet vs, unsigned lo, unsigned hi, unsigned a, unsigned b) {
  if (lo < 1 || hi > vs.n || lo > hi) throw std::invalid_argument("harmonic_basis: bad block");
  HarmonicSpace hs{a, b, vs, lo, hi, {}};
  const auto cols = block_monomials(vs, lo, hi, a, b);
  if (a == 0 || b == 0) {
    for (const auto& e : cols) hs.basis.push_back(PolyVector::monomial(vs, e, ParamScalar(1)));
    return hs;
  }
  const WeylElement bx = box(vs, lo, hi);
  std::map<Exponent, std::uint32_t, GrlexLess> row_of;
  for (const auto& e : block_monomials(vs, lo, hi, a - 1, b - 1)) row_of.emplace(e, std::uint32_t(row_of.size()));
  std::vector<std::vector<std::pair<std::uint32_t, Rational>>> rows(row_of.size());
  for (std::uint32_t c = 0; c < cols.size(); ++c) {
    const PolyVector img = apply(bx, PolyVector::monomial(vs, cols[c], ParamScalar(1)));
    for (const auto& [e, v] : img.terms()) rows[row_of.at(e)].emplace_back(c, v.as_rational());
  }
  std::vector<SparseVec> mat;
  for (auto& r : rows) mat.push_back(make_sparse(std::move(r)));
  for (const auto& vec : nullspace(mat, cols.size())) {
    PolyVector p(vs);
    for (const auto& [c, v] : vec) p.add_term(cols[c], ParamScalar(v));
    hs.basis.push_back(std::move(p));
  }
  return hs;
}

HarmonicSpace harmonic_basis(unsigned a, unsigned b, unsigned n_vars) {
  return harmonic_basis(VarSet{n_vars, Side::dual}, 1, n_vars, a, b);
}

Rational harmonic_dimension(unsigned a, unsigned b, unsigned n) {
  Rational d = binomial(a + n - 1, n - 1) * binomial(b + n - 1, n - 1);
  if (a >= 1 && b >= 1) d -= binomial(a + n - 2, n - 1) * binomial(b + n - 2, n - 1);
  return d;
}

std::vector<std::pair<unsigned, PolyVector>> fischer_project(const PolyVector& f, unsigned lo, unsigned hi) {
  const VarSet vs = f.varset();
  if (lo < 1 || hi > vs.n || lo > hi) throw std::invalid_argument("fischer_project: bad block");
  const long nb = long(hi + 1 - lo);
  const PolyVector q = q_poly(vs, lo, hi);
  const WeylElement bx = box(vs, lo, hi);

  std::map<std::pair<unsigned, unsigned>, PolyVector> groups;
  for (const auto& [e, c] : f.terms()) {
    auto [it, ins] = groups.try_emplace(block_bidegree(vs, e, lo, hi), vs);
    it->second.add_term(e, c);
  }

  std::map<unsigned, PolyVector> result;
  for (const auto& [deg, g] : groups) {
    const auto [a, b] = deg;
    const unsigned kmax = std::min(a, b);
    std::vector<PolyVector> h(kmax + 1, PolyVector(vs));
    for (unsigned k = kmax + 1; k-- > 0;) {
      PolyVector rest = g;
      for (unsigned kk = k + 1; kk <= kmax; ++kk) rest -= q.pow(kk) * h[kk];
      for (unsigned j = 0; j < k; ++j) rest = apply(bx, rest);
      // box^k (q^k h) = prod_{j=1}^k j (n + j - 1 + a + b - 2k) h for harmonic h
      Rational norm(1);
      for (unsigned j = 1; j <= k; ++j) norm *= Rational(long(j) * (nb + long(j) - 1 + long(a + b) - 2 * long(k)));
      h[k] = rest * ParamScalar(norm.inverse());
    }
    for (unsigned k = 0; k <= kmax; ++k) {
      if (h[k].is_zero()) continue;
      auto [it, ins] = result.try_emplace(k, vs);
      it->second += h[k];
    }
  }
  std::vector<std::pair<unsigned, PolyVector>> out;
  for (auto& [k, p] : result)
    if (!p.is_zero()) out.emplace_back(k, std::move(p));
  return out;
}

// ---------------------------------------------------------------- RadialPoly

RadialPoly RadialPoly::monomial(unsigned i, unsigned j, unsigned k, const ParamScalar& c) {
  RadialPoly p;
  p.add_term({i, j, k}, c);
  return p;
}

void RadialPoly::add_term(const Key& k, const ParamScalar& c) {
  if (c.is_zero()) return;
  auto [it, ins] = terms_.try_emplace(k, c);
  if (!ins) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

RadialPoly& RadialPoly::operator+=(const RadialPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

RadialPoly operator*(RadialPoly a, const ParamScalar& c) {
  if (c.is_zero()) return {};
  for (auto& [k, v] : a.terms_) v *= c;
  return a;
}

PolyVector RadialPoly::materialize(VarSet vs, unsigned r) const {
  const unsigned split = vs.n - r;
  const PolyVector qp = q_poly(vs, 1, split);
  const PolyVector qpp = r > 0 ? q_poly(vs, split + 1, vs.n) : PolyVector(vs);
  const PolyVector z = PolyVector::variable(vs, vs.z());
  PolyVector out(vs);
  for (const auto& [k, c] : terms_) {
    if (r == 0 && k[1] > 0) throw std::invalid_argument("RadialPoly: q'' power with r = 0");
    out += qp.pow(k[0]) * qpp.pow(k[1]) * z.pow(k[2]) * c;
  }
  return out;
}

std::string RadialPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [k, c] = *it;
    if (!out.empty()) out += " + ";
    out += "(" + c.str() + ")";
    const char* names[] = {"q'", "q''", "z"};
    for (int v = 0; v < 3; ++v)
      if (k[v]) out += std::string("*") + names[v] + (k[v] > 1 ? "^" + std::to_string(k[v]) : "");
  }
  return out;
}

RadialPoly QOperator::apply(const RadialPoly& u) const {
  RadialPoly out;
  const ParamScalar np = ParamScalar(long(n) - long(r)) + alpha;
  const ParamScalar npp = ParamScalar(long(r)) + beta;
  for (const auto& [k, c] : u.terms()) {
    const long i = k[0], j = k[1];
    if (i > 0) out.add_term({k[0] - 1, k[1], k[2]}, c * ParamScalar(i) * (ParamScalar(i - 1) + np));
    if (j > 0) out.add_term({k[0], k[1] - 1, k[2]}, c * ParamScalar(j) * (ParamScalar(j - 1) + npp));
  }
  return out;
}

std::vector<RadialPoly> solve_S(unsigned l, unsigned s, const Rational& l1, const Rational& l2, unsigned n,
                                unsigned r) {
  const QOperator q{ParamScalar(Rational(-long(s)) + l1 + l2 + Rational(2)), ParamScalar(long(s) - 2 * long(l)), n, r};
  std::vector<RadialPoly> cols;
  if (r == 0) {
    cols.push_back(RadialPoly::monomial(l, 0, 0, ParamScalar(1)));
  } else {
    for (unsigned i = 0; i <= l; ++i) cols.push_back(RadialPoly::monomial(i, l - i, 0, ParamScalar(1)));
  }
  if (l == 0) return cols;
  // rows indexed by the q'-exponent of the degree l-1 image
  std::vector<std::vector<std::pair<std::uint32_t, Rational>>> rows(l);
  for (std::uint32_t c = 0; c < cols.size(); ++c) {
    const RadialPoly img = q.apply(cols[c]);
    for (const auto& [k, v] : img.terms()) rows[k[0]].emplace_back(c, v.as_rational());
  }
  std::vector<SparseVec> mat;
  for (auto& row : rows) mat.push_back(make_sparse(std::move(row)));
  std::vector<RadialPoly> out;
  for (const auto& vec : nullspace(mat, cols.size())) {
    RadialPoly p;
    for (const auto& [c, v] : vec) p += cols[c] * ParamScalar(v);
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<ParamScalar> t_coeffs(const ParamScalar& r1, const ParamScalar& r2, const ParamScalar& l1,
                                  const ParamScalar& l2, unsigned K) {
  const ParamScalar diff = r1 - r2 - l1 + l2;
  const ParamScalar sum = r1 + r2 - l1 - l2 - ParamScalar(2);
  std::vector<ParamScalar> a{ParamScalar(1)};
  if (K >= 1) a.push_back(diff);
  for (unsigned k = 0; k + 2 <= K; ++k)
    a.push_back((diff * a[k + 1] - (sum - ParamScalar(long(k))) * a[k]) * Rational(1, long(k) + 2));
  return a;
}

std::vector<ParamScalar> t_coeffs_series(const ParamScalar& r1, const ParamScalar& r2, const ParamScalar& l1,
                                         const ParamScalar& l2, unsigned K) {
  const ParamScalar A = r1 - l1 - ParamScalar(1);
  const ParamScalar B = r2 - l2 - ParamScalar(1);
  std::vector<ParamScalar> ca, cb;
  for (unsigned k = 0; k <= K; ++k) {
    ca.push_back(param_binomial(A, k));
    cb.push_back(param_binomial(B, k) * Rational(k % 2 ? -1 : 1));
  }
  std::vector<ParamScalar> out;
  for (unsigned k = 0; k <= K; ++k) {
    ParamScalar c;
    for (unsigned j = 0; j <= k; ++j) c += ca[j] * cb[k - j];
    out.push_back(c);
  }
  return out;
}

TOperator TOperator::make(unsigned r1, unsigned r2, const ParamScalar& l1, const ParamScalar& l2) {
  return make(r1, r2, l1, l2, (r1 + r2) / 2);
}

TOperator TOperator::make(unsigned r1, unsigned r2, const ParamScalar& l1, const ParamScalar& l2, unsigned K) {
  return {r1, r2, l1, l2, t_coeffs(ParamScalar(long(r1)), ParamScalar(long(r2)), l1, l2, K)};
}

namespace {

// sum_k alpha_k / 2^k z^k D_{q'}^k on one radial monomial.
template <class Emit>
void t_monomial(const TOperator& t, const RadialPoly::Key& key, Emit&& emit) {
  Rational scale(1);
  for (unsigned k = 0; k < t.alpha.size() && k <= key[0]; ++k) {
    // scale = i (i-1) ... (i-k+1) / 2^k
    emit(RadialPoly::Key{key[0] - k, key[1], key[2] + k}, t.alpha[k] * scale);
    scale = scale * Rational(long(key[0] - k)) / Rational(2);
  }
}

}  // namespace

RadialPoly TOperator::apply(const RadialPoly& u) const {
  RadialPoly out;
  for (const auto& [key, c] : u.terms())
    t_monomial(*this, key, [&](const RadialPoly::Key& k, const ParamScalar& w) { out.add_term(k, c * w); });
  return out;
}

FischerElement FischerElement::decompose(const PolyVector& f, unsigned r) {
  const VarSet vs = f.varset();
  if (r >= vs.n) throw std::invalid_argument("FischerElement: need r < n");
  const unsigned split = vs.n - r;
  FischerElement out{vs, r, {}};
  const auto zs = f.z_expansion();
  for (unsigned k = 0; k < zs.size(); ++k) {
    if (zs[k].is_zero()) continue;
    for (const auto& [i, hp] : fischer_project(zs[k], 1, split)) {
      std::vector<std::pair<unsigned, PolyVector>> inner;
      if (r > 0) inner = fischer_project(hp, split + 1, vs.n);
      else inner.emplace_back(0, hp);
      for (auto& [j, h] : inner) {
        auto [it, ins] = out.parts.try_emplace(RadialPoly::Key{i, j, k}, vs);
        it->second += h;
      }
    }
  }
  return out;
}

PolyVector FischerElement::materialize() const {
  PolyVector out(vs);
  for (const auto& [key, h] : parts) out += RadialPoly::monomial(key[0], key[1], key[2], ParamScalar(1)).materialize(vs, r) * h;
  return out;
}

PolyVector t_apply(const TOperator& t, const PolyVector& f, unsigned r) {
  const FischerElement fe = FischerElement::decompose(f, r);
  FischerElement res{fe.vs, r, {}};
  for (const auto& [key, h] : fe.parts)
    t_monomial(t, key, [&](const RadialPoly::Key& k, const ParamScalar& w) {
      auto [it, ins] = res.parts.try_emplace(k, fe.vs);
      it->second += h * w;
    });
  return res.materialize();
}

}  // namespace heisverma
