#include "heisverma/lie.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace heisverma {

RatMatrix zero_matrix(std::size_t dim) { return RatMatrix(dim, std::vector<Rational>(dim, Rational(0))); }

LieBasisElement LieBasisElement::HMat(RatMatrix m) {
  Rational tr(0);
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i].size() != m.size()) throw std::invalid_argument("HMat: matrix is not square");
    tr += m[i][i];
  }
  if (!tr.is_zero()) throw std::invalid_argument("HMat: matrix is not traceless");
  return {LieKind::hmat, 0, std::move(m)};
}

LieBasisElement LieBasisElement::HElem(unsigned n, unsigned i, unsigned j) {
  if (i == j || i < 1 || j < 1 || i > n || j > n) throw std::out_of_range("HElem: bad indices");
  RatMatrix m = zero_matrix(n);
  m[i - 1][j - 1] = 1;
  return HMat(std::move(m));
}

LieBasisElement LieBasisElement::HDiff(unsigned n, unsigned j) {
  if (j < 1 || j >= n) throw std::out_of_range("HDiff: bad index");
  RatMatrix m = zero_matrix(n);
  m[j - 1][j - 1] = 1;
  m[j][j] = -1;
  return HMat(std::move(m));
}

std::string LieBasisElement::name() const {
  switch (kind) {
    case LieKind::f: return "f" + std::to_string(i);
    case LieKind::g: return "g" + std::to_string(i);
    case LieKind::c: return "c";
    case LieKind::d: return "d" + std::to_string(i);
    case LieKind::e: return "e" + std::to_string(i);
    case LieKind::a: return "a";
    case LieKind::h1: return "h1";
    case LieKind::h2: return "h2";
    case LieKind::hmat: break;
  }
  // recognise the spanning-set elements
  const std::size_t n = m.size();
  std::vector<std::pair<std::size_t, std::size_t>> nz;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (!m[r][c].is_zero()) nz.emplace_back(r, c);
  if (nz.size() == 1 && nz[0].first != nz[0].second && m[nz[0].first][nz[0].second].is_one())
    return "hE" + std::to_string(nz[0].first + 1) + std::to_string(nz[0].second + 1);
  if (nz.size() == 2 && nz[0].first == nz[0].second && nz[1].first == nz[0].first + 1 &&
      nz[1].second == nz[1].first && m[nz[0].first][nz[0].first].is_one() &&
      m[nz[1].first][nz[1].first] == Rational(-1))
    return "hD" + std::to_string(nz[0].first + 1);
  return "hM";
}

int LieBasisElement::grade() const {
  switch (kind) {
    case LieKind::c: return -2;
    case LieKind::f:
    case LieKind::g: return -1;
    case LieKind::d:
    case LieKind::e: return 1;
    case LieKind::a: return 2;
    default: return 0;
  }
}

int block_of(unsigned n, unsigned idx) {
  if (idx == 0) return 0;
  if (idx == n + 1) return 2;
  return 1;
}

LieElement::LieElement(unsigned n, RatMatrix mat) : n_(n), mat_(std::move(mat)) {
  if (mat_.size() != n + 2) throw std::invalid_argument("LieElement: wrong matrix size");
  Rational tr(0);
  for (std::size_t i = 0; i < mat_.size(); ++i) {
    if (mat_[i].size() != n + 2) throw std::invalid_argument("LieElement: matrix is not square");
    tr += mat_[i][i];
  }
  if (!tr.is_zero()) throw std::invalid_argument("LieElement: matrix is not traceless");
}

LieElement::LieElement(unsigned n, const LieBasisElement& b) : n_(n), mat_(zero_matrix(n + 2)) {
  auto check = [&] {
    if (b.i < 1 || b.i > n) throw std::out_of_range("LieElement: basis index out of range");
  };
  const unsigned last = n + 1;
  switch (b.kind) {
    case LieKind::f: check(); mat_[b.i][0] = 1; break;
    case LieKind::g: check(); mat_[last][b.i] = 1; break;
    case LieKind::c: mat_[last][0] = 1; break;
    case LieKind::d: check(); mat_[0][b.i] = 1; break;
    case LieKind::e: check(); mat_[b.i][last] = 1; break;
    case LieKind::a: mat_[0][last] = 1; break;
    case LieKind::h1:
      mat_[0][0] = 1;
      mat_[last][last] = -1;
      break;
    case LieKind::h2:
      mat_[0][0] = 1;
      mat_[last][last] = 1;
      for (unsigned k = 1; k <= n; ++k) mat_[k][k] = Rational(-2, long(n));
      break;
    case LieKind::hmat:
      if (b.m.size() != n) throw std::invalid_argument("LieElement: hmat block has wrong size");
      for (unsigned r = 0; r < n; ++r)
        for (unsigned c = 0; c < n; ++c) mat_[r + 1][c + 1] = b.m[r][c];
      break;
  }
}

bool LieElement::is_zero() const {
  for (const auto& row : mat_)
    for (const auto& v : row)
      if (!v.is_zero()) return false;
  return true;
}

LieElement& LieElement::operator+=(const LieElement& o) {
  if (n_ != o.n_) throw std::invalid_argument("LieElement: size mismatch");
  for (std::size_t r = 0; r < mat_.size(); ++r)
    for (std::size_t c = 0; c < mat_.size(); ++c) mat_[r][c] += o.mat_[r][c];
  return *this;
}

LieElement& LieElement::operator-=(const LieElement& o) {
  if (n_ != o.n_) throw std::invalid_argument("LieElement: size mismatch");
  for (std::size_t r = 0; r < mat_.size(); ++r)
    for (std::size_t c = 0; c < mat_.size(); ++c) mat_[r][c] -= o.mat_[r][c];
  return *this;
}

LieElement& LieElement::operator*=(const Rational& k) {
  for (auto& row : mat_)
    for (auto& v : row) v *= k;
  return *this;
}

const std::vector<LieBasisElement>& canonical_basis(unsigned n) {
  static std::mutex mu;
  static std::map<unsigned, std::unique_ptr<std::vector<LieBasisElement>>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[n];
  if (!slot) {
    auto v = std::make_unique<std::vector<LieBasisElement>>();
    for (unsigned i = 1; i <= n; ++i) v->push_back(LieBasisElement::F(i));
    for (unsigned i = 1; i <= n; ++i) v->push_back(LieBasisElement::G(i));
    v->push_back(LieBasisElement::C());
    for (unsigned i = 1; i <= n; ++i) v->push_back(LieBasisElement::D(i));
    for (unsigned i = 1; i <= n; ++i) v->push_back(LieBasisElement::E(i));
    v->push_back(LieBasisElement::A());
    v->push_back(LieBasisElement::H1());
    v->push_back(LieBasisElement::H2());
    for (unsigned i = 1; i <= n; ++i)
      for (unsigned j = 1; j <= n; ++j)
        if (i != j) v->push_back(LieBasisElement::HElem(n, i, j));
    for (unsigned j = 1; j < n; ++j) v->push_back(LieBasisElement::HDiff(n, j));
    slot = std::move(v);
  }
  return *slot;
}

std::size_t canonical_index(unsigned n, const LieBasisElement& b) {
  const std::size_t hm = 4 * n + 4;  // first hmat position
  switch (b.kind) {
    case LieKind::f: return b.i - 1;
    case LieKind::g: return n + b.i - 1;
    case LieKind::c: return 2 * n;
    case LieKind::d: return 2 * n + b.i;
    case LieKind::e: return 3 * n + b.i;
    case LieKind::a: return 4 * n + 1;
    case LieKind::h1: return 4 * n + 2;
    case LieKind::h2: return 4 * n + 3;
    case LieKind::hmat: break;
  }
  const auto& basis = canonical_basis(n);
  for (std::size_t k = hm; k < basis.size(); ++k)
    if (basis[k] == b) return k;
  throw std::invalid_argument("canonical_index: hmat element is not in the spanning set");
}

std::vector<LieBasisElement> nbar_basis(unsigned n) {
  const auto& b = canonical_basis(n);
  return {b.begin(), b.begin() + 2 * n + 1};
}

std::vector<Rational> LieElement::coordinates() const {
  const unsigned n = n_;
  const unsigned last = n + 1;
  std::vector<Rational> out;
  out.reserve(canonical_basis(n).size());
  for (unsigned i = 1; i <= n; ++i) out.push_back(mat_[i][0]);
  for (unsigned i = 1; i <= n; ++i) out.push_back(mat_[last][i]);
  out.push_back(mat_[last][0]);
  for (unsigned i = 1; i <= n; ++i) out.push_back(mat_[0][i]);
  for (unsigned i = 1; i <= n; ++i) out.push_back(mat_[i][last]);
  out.push_back(mat_[0][last]);
  const Rational d0 = mat_[0][0], dl = mat_[last][last];
  const Rational alpha = (d0 - dl) / Rational(2);
  const Rational beta = (d0 + dl) / Rational(2);
  out.push_back(alpha);
  out.push_back(beta);
  for (unsigned i = 1; i <= n; ++i)
    for (unsigned j = 1; j <= n; ++j)
      if (i != j) out.push_back(mat_[i][j]);
  // traceless middle diagonal after removing the h2 contribution
  Rational running(0);
  const Rational shift = Rational(2) * beta / Rational(long(n));
  for (unsigned j = 1; j < n; ++j) {
    running += mat_[j][j] + shift;
    out.push_back(running);
  }
  return out;
}

std::vector<std::pair<LieBasisElement, Rational>> LieElement::decompose() const {
  const auto coords = coordinates();
  const auto& basis = canonical_basis(n_);
  std::vector<std::pair<LieBasisElement, Rational>> out;
  for (std::size_t k = 0; k < coords.size(); ++k)
    if (!coords[k].is_zero()) out.emplace_back(basis[k], coords[k]);
  return out;
}

namespace {

LieElement grade_filter(const LieElement& x, int lo, int hi) {
  const unsigned n = x.n();
  RatMatrix m = zero_matrix(n + 2);
  for (unsigned r = 0; r < n + 2; ++r)
    for (unsigned c = 0; c < n + 2; ++c) {
      const int g = block_of(n, c) - block_of(n, r);
      if (g >= lo && g <= hi) m[r][c] = x.matrix()[r][c];
    }
  return LieElement(n, std::move(m));
}

}  // namespace

LieElement LieElement::part_nbar() const { return grade_filter(*this, -2, -1); }
LieElement LieElement::part_levi() const { return grade_filter(*this, 0, 0); }
LieElement LieElement::part_nil() const { return grade_filter(*this, 1, 2); }
LieElement LieElement::part_parabolic() const { return grade_filter(*this, 0, 2); }

std::string LieElement::str() const {
  const auto parts = decompose();
  if (parts.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [b, c] : parts) {
    const bool neg = c.sign() < 0;
    out += neg ? "-" : (first ? "" : "+");
    if (!c.abs().is_one()) out += c.abs().str() + "*";
    out += b.name();
    first = false;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const LieElement& x) { return os << x.str(); }

LieElement bracket(const LieElement& x, const LieElement& y) {
  if (x.n() != y.n()) throw std::invalid_argument("bracket: size mismatch");
  const unsigned d = x.n() + 2;
  const auto& a = x.matrix();
  const auto& b = y.matrix();
  RatMatrix m = zero_matrix(d);
  for (unsigned r = 0; r < d; ++r)
    for (unsigned k = 0; k < d; ++k) {
      if (a[r][k].is_zero() && b[r][k].is_zero()) continue;
      for (unsigned c = 0; c < d; ++c) {
        if (!a[r][k].is_zero() && !b[k][c].is_zero()) m[r][c] += a[r][k] * b[k][c];
        if (!b[r][k].is_zero() && !a[k][c].is_zero()) m[r][c] -= b[r][k] * a[k][c];
      }
    }
  return LieElement(x.n(), std::move(m));
}

LieElement embed_sub(unsigned n, unsigned r, const LieElement& x) {
  if (r >= n) throw std::out_of_range("embed_sub: need r < n");
  if (x.n() != n - r) throw std::invalid_argument("embed_sub: element is not in sl(n-r+2)");
  const unsigned small = n - r + 2;
  auto place = [&](unsigned k) { return k + 1 == small ? n + 1 : k; };
  RatMatrix m = zero_matrix(n + 2);
  for (unsigned i = 0; i < small; ++i)
    for (unsigned j = 0; j < small; ++j) m[place(i)][place(j)] = x.matrix()[i][j];
  return LieElement(n, std::move(m));
}

std::pair<LieElement, LieElement> center_basis(unsigned n, unsigned r) {
  if (r >= n) throw std::out_of_range("center_basis: need r < n");
  LieElement h1(n, LieBasisElement::H1());
  LieElement h2(n, LieBasisElement::H2());
  if (r == 0) return {h1, h2};
  RatMatrix a = zero_matrix(n);
  const Rational lead = Rational(-2 * long(r)) / Rational(long(n) * long(n - r));
  for (unsigned k = 0; k < n; ++k) a[k][k] = k < n - r ? lead : Rational(2, long(n));
  return {h1, h2 + LieElement(n, LieBasisElement::HMat(std::move(a)))};
}

std::vector<LieBasisElement> nilradical_basis(unsigned n, unsigned r) {
  if (r >= n) throw std::out_of_range("nilradical_basis: need r < n");
  std::vector<LieBasisElement> out;
  for (unsigned i = 1; i <= n - r; ++i) out.push_back(LieBasisElement::D(i));
  for (unsigned i = 1; i <= n - r; ++i) out.push_back(LieBasisElement::E(i));
  out.push_back(LieBasisElement::A());
  return out;
}

Character Character::rho(unsigned n) {
  const Rational h(long(n + 1), 2);
  return {n, ParamScalar(h), ParamScalar(h)};
}

ParamScalar Character::pairing(const LieElement& x) const {
  if (x.n() != n) throw std::invalid_argument("Character::pairing: size mismatch");
  const auto& m = x.matrix();
  return l1 * m[0][0] - l2 * m[n + 1][n + 1];
}

Character operator+(const Character& a, const Character& b) {
  if (a.n != b.n) throw std::invalid_argument("Character: size mismatch");
  return {a.n, a.l1 + b.l1, a.l2 + b.l2};
}

}  // namespace heisverma
