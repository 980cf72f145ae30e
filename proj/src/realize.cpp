#include "heisverma/realize.hpp"

#include <stdexcept>

namespace heisverma {

namespace {

// Shorthand builders over a fixed VarSet.
struct Ops {
  VarSet vs;

  WeylElement k(const ParamScalar& c) const { return WeylElement::constant(vs, c); }
  WeylElement x(unsigned i) const { return WeylElement::variable(vs, vs.x(i)); }
  WeylElement y(unsigned i) const { return WeylElement::variable(vs, vs.y(i)); }
  WeylElement z() const { return WeylElement::variable(vs, vs.z()); }
  WeylElement dx(unsigned i) const { return WeylElement::derivative(vs, vs.x(i)); }
  WeylElement dy(unsigned i) const { return WeylElement::derivative(vs, vs.y(i)); }
  WeylElement dz() const { return WeylElement::derivative(vs, vs.z()); }
  WeylElement ex() const { return euler_x(vs); }
  WeylElement ey() const { return euler_y(vs); }
  WeylElement ez() const { return euler_z(vs); }
  WeylElement q() const { return WeylElement::from_poly(q_poly(vs)); }
  WeylElement bx() const { return box(vs); }
};

const Rational kHalf(1, 2);

}  // namespace

Realization::Realization(unsigned n, ParamScalar mu1, ParamScalar mu2)
    : n_(n), mu1_(std::move(mu1)), mu2_(std::move(mu2)) {
  if (n < 1) throw std::invalid_argument("Realization: n must be positive");
  const auto& basis = canonical_basis(n);
  pi_.reserve(basis.size());
  pi_hat_.reserve(basis.size());
  for (const auto& b : basis) {
    pi_.push_back(build_pi(b));
    pi_hat_.push_back(build_pi_hat(b));
  }
}

Realization Realization::generic(unsigned n) {
  return Realization(n, ParamScalar::lambda1(), ParamScalar::lambda2());
}

Realization Realization::for_verma(const Character& lambda) {
  const Character mu = lambda + Character::rho(lambda.n);
  return Realization(lambda.n, mu.l1, mu.l2);
}

WeylElement Realization::build_pi(const LieBasisElement& b) const {
  const Ops o{hatted()};
  const ParamScalar n = ParamScalar(long(n_));
  const ParamScalar half_np1(Rational(long(n_ + 1), 2));
  const ParamScalar ratio(Rational(1) + Rational(2, long(n_)));
  switch (b.kind) {
    case LieKind::f: return -o.dx(b.i) + o.y(b.i) * o.dz() * kHalf;
    case LieKind::g: return -o.dy(b.i) - o.x(b.i) * o.dz() * kHalf;
    case LieKind::c: return -o.dz();
    case LieKind::h1: return o.ex() + o.ey() + o.ez() * ParamScalar(2) + o.k(mu1_ + mu2_ + n + ParamScalar(1));
    case LieKind::h2: return (o.ex() - o.ey()) * ratio + o.k(mu1_ - mu2_);
    case LieKind::hmat: {
      WeylElement out(o.vs);
      for (unsigned i = 1; i <= n_; ++i)
        for (unsigned j = 1; j <= n_; ++j) {
          const Rational& a = b.m.at(i - 1).at(j - 1);
          if (a.is_zero()) continue;
          out -= (o.x(j) * o.dx(i) - o.y(i) * o.dy(j)) * a;
        }
      return out;
    }
    case LieKind::d: {
      const unsigned i = b.i;
      return o.z() * o.dy(i) + o.x(i) * (o.ex() + o.ez() * kHalf + o.k(mu1_ + half_np1)) -
             o.q() * (o.dy(i) - o.x(i) * o.dz() * kHalf) * kHalf;
    }
    case LieKind::e: {
      const unsigned i = b.i;
      return -(o.z() * o.dx(i)) + o.y(i) * (o.ey() + o.ez() * kHalf + o.k(mu2_ + half_np1)) -
             o.q() * (o.dx(i) + o.y(i) * o.dz() * kHalf) * kHalf;
    }
    case LieKind::a:
      return o.z() * (o.ex() + o.ey() + o.ez() + o.k(mu1_ + mu2_ + n + ParamScalar(1))) +
             o.q() * (o.ex() - o.ey() + o.k(mu1_ - mu2_) + o.q() * o.dz() * kHalf) * kHalf;
  }
  throw std::logic_error("build_pi: unknown kind");
}

WeylElement Realization::build_pi_hat(const LieBasisElement& b) const {
  const Ops o{dual()};
  const ParamScalar n = ParamScalar(long(n_));
  const ParamScalar half_nm1(Rational(long(n_) - 1, 2));
  const ParamScalar ratio(Rational(1) + Rational(2, long(n_)));
  switch (b.kind) {
    case LieKind::f: return -o.x(b.i) - o.z() * o.dy(b.i) * kHalf;
    case LieKind::g: return -o.y(b.i) + o.z() * o.dx(b.i) * kHalf;
    case LieKind::c: return -o.z();
    case LieKind::h1:
      return -(o.ex() + o.ey() + o.ez() * ParamScalar(2)) + o.k(mu1_ + mu2_ - n - ParamScalar(1));
    case LieKind::h2: return (o.ey() - o.ex()) * ratio + o.k(mu1_ - mu2_);
    case LieKind::hmat: {
      WeylElement out(o.vs);
      for (unsigned i = 1; i <= n_; ++i)
        for (unsigned j = 1; j <= n_; ++j) {
          const Rational& a = b.m.at(i - 1).at(j - 1);
          if (a.is_zero()) continue;
          out += (o.x(i) * o.dx(j) - o.y(j) * o.dy(i)) * a;
        }
      return out;
    }
    case LieKind::d: {
      const unsigned i = b.i;
      return -(o.y(i) * o.dz()) + o.dx(i) * (o.ex() + o.ez() * kHalf + o.k(half_nm1 - mu1_)) -
             (o.y(i) + o.z() * o.dx(i) * kHalf) * o.bx() * kHalf;
    }
    case LieKind::e: {
      const unsigned i = b.i;
      return o.x(i) * o.dz() + o.dy(i) * (o.ey() + o.ez() * kHalf + o.k(half_nm1 - mu2_)) -
             (o.x(i) - o.z() * o.dy(i) * kHalf) * o.bx() * kHalf;
    }
    case LieKind::a:
      return o.dz() * (o.ex() + o.ey() + o.ez() + o.k(n - mu1_ - mu2_)) -
             (o.ex() - o.ey() + o.k(mu2_ - mu1_) - o.z() * o.bx() * kHalf) * o.bx() * kHalf;
  }
  throw std::logic_error("build_pi_hat: unknown kind");
}

WeylElement Realization::pi(const LieBasisElement& x) const {
  if (x.kind != LieKind::hmat) return pi_.at(canonical_index(n_, x));
  return pi(LieElement(n_, x));
}

WeylElement Realization::pi_hat(const LieBasisElement& x) const {
  if (x.kind != LieKind::hmat) return pi_hat_.at(canonical_index(n_, x));
  return pi_hat(LieElement(n_, x));
}

WeylElement Realization::pi(const LieElement& x) const {
  if (x.n() != n_) throw std::invalid_argument("Realization::pi: size mismatch");
  WeylElement out(hatted());
  const auto coords = x.coordinates();
  for (std::size_t k = 0; k < coords.size(); ++k)
    if (!coords[k].is_zero()) out += pi_[k] * coords[k];
  return out;
}

WeylElement Realization::pi_hat(const LieElement& x) const {
  if (x.n() != n_) throw std::invalid_argument("Realization::pi_hat: size mismatch");
  WeylElement out(dual());
  const auto coords = x.coordinates();
  for (std::size_t k = 0; k < coords.size(); ++k)
    if (!coords[k].is_zero()) out += pi_hat_[k] * coords[k];
  return out;
}

namespace {

// Applies the letters of a PBW word right to left, using the operator table
// ops indexed like canonical_basis.
template <class Step>
void for_word_letters(unsigned n, const PbwVector::Word& w, Step&& step) {
  for (unsigned k = 0; k < w[2 * n]; ++k) step(std::size_t(2 * n));
  for (unsigned i = n; i >= 1; --i)
    for (unsigned k = 0; k < w[n + i - 1]; ++k) step(std::size_t(n + i - 1));
  for (unsigned i = n; i >= 1; --i)
    for (unsigned k = 0; k < w[i - 1]; ++k) step(std::size_t(i - 1));
}

}  // namespace

PolyVector Realization::phi(const PbwVector& v) const {
  if (v.n() != n_ && !v.is_zero()) throw std::invalid_argument("Realization::phi: size mismatch");
  PolyVector out(dual());
  const PolyVector one = PolyVector::constant(dual(), ParamScalar(1));
  for (const auto& [w, c] : v.terms()) {
    PolyVector cur = one;
    for_word_letters(n_, w, [&](std::size_t idx) { cur = apply(pi_hat_[idx], cur); });
    out += cur * c;
  }
  return out;
}

PolyVector Realization::phi_hatted(const PbwVector& v) const {
  if (v.n() != n_ && !v.is_zero()) throw std::invalid_argument("Realization::phi_hatted: size mismatch");
  WeylElement acc(hatted());
  for (const auto& [w, c] : v.terms()) {
    WeylElement cur = WeylElement::constant(hatted(), ParamScalar(1));
    // reducing after each step keeps the representative small
    for_word_letters(n_, w, [&](std::size_t idx) { cur = reduce_mod_Ie(pi_[idx] * cur); });
    acc += cur * c;
  }
  const WeylElement dual_op = fourier(acc);
  return apply(dual_op, PolyVector::constant(dual(), ParamScalar(1)));
}

WeylElement reduce_mod_Ie(const WeylElement& p) {
  if (p.varset().side != Side::hatted) throw std::invalid_argument("reduce_mod_Ie: expects a hatted-side element");
  // Per slot, x^a D^b = sum_k (-1)^k C(a,k) C(b,k) k! D^{b-k} x^{a-k}; only
  // k = a survives evaluation at 0, giving (-1)^a b!/(b-a)! D^{b-a}.
  WeylElement out(p.varset());
  const unsigned s = p.varset().slots();
  const Exponent zero(s, 0);
  for (const auto& [key, c] : p.terms()) {
    const Exponent alpha = p.alpha_of(key), beta = p.beta_of(key);
    Exponent nb(s, 0);
    Rational w(1);
    bool ok = true;
    for (unsigned i = 0; i < s; ++i) {
      if (alpha[i] > beta[i]) {
        ok = false;
        break;
      }
      for (unsigned j = 0; j < alpha[i]; ++j) w *= Rational(-long(beta[i] - j));
      nb[i] = static_cast<std::uint8_t>(beta[i] - alpha[i]);
    }
    if (ok) out.add_term(zero, nb, c * w);
  }
  return out;
}

PbwVector poly_to_pbw(const PolyVector& r) {
  const unsigned n = r.varset().n;
  PbwVector out(n);
  for (const auto& [e, c] : r.terms()) {
    const long sign = total_degree(e) % 2 ? -1 : 1;
    out += symmetrize(n, e) * (c * Rational(sign));
  }
  return out;
}

// ------------------------------------------------------------- pi_generic

namespace {

using PolyMatrix = std::vector<std::vector<PolyVector>>;

PolyMatrix poly_zero(VarSet vs, unsigned d) {
  return PolyMatrix(d, std::vector<PolyVector>(d, PolyVector(vs)));
}

PolyMatrix from_rational(VarSet vs, const RatMatrix& m) {
  PolyMatrix out = poly_zero(vs, unsigned(m.size()));
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t c = 0; c < m.size(); ++c)
      if (!m[r][c].is_zero()) out[r][c] = PolyVector::constant(vs, ParamScalar(m[r][c]));
  return out;
}

PolyMatrix poly_bracket(const PolyMatrix& a, const PolyMatrix& b, VarSet vs) {
  const std::size_t d = a.size();
  PolyMatrix out = poly_zero(vs, unsigned(d));
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t k = 0; k < d; ++k)
      for (std::size_t c = 0; c < d; ++c) {
        if (!a[r][k].is_zero() && !b[k][c].is_zero()) out[r][c] += a[r][k] * b[k][c];
        if (!b[r][k].is_zero() && !a[k][c].is_zero()) out[r][c] -= b[r][k] * a[k][c];
      }
  return out;
}

PolyMatrix poly_scaled_sum(const PolyMatrix& a, const PolyMatrix& b, const Rational& s) {
  PolyMatrix out = a;
  for (std::size_t r = 0; r < a.size(); ++r)
    for (std::size_t c = 0; c < a.size(); ++c)
      if (!b[r][c].is_zero()) out[r][c] += b[r][c] * ParamScalar(s);
  return out;
}

}  // namespace

WeylElement pi_generic(const LieElement& x, const Character& nu) {
  const unsigned n = x.n();
  const VarSet vs{n, Side::hatted};
  const unsigned d = n + 2, last = n + 1;

  // u = sum x_i f_i + y_i g_i + z c
  PolyMatrix u = poly_zero(vs, d);
  for (unsigned i = 1; i <= n; ++i) {
    u[i][0] = PolyVector::variable(vs, vs.x(i));
    u[last][i] = PolyVector::variable(vs, vs.y(i));
  }
  u[last][0] = PolyVector::variable(vs, vs.z());

  // W = exp(-ad u) X, exact at order 4
  PolyMatrix term = from_rational(vs, x.matrix());
  PolyMatrix w = term;
  Rational coeff(1);
  for (unsigned k = 1; k <= 4; ++k) {
    term = poly_bracket(u, term, vs);
    coeff = coeff / Rational(-long(k));
    w = poly_scaled_sum(w, term, coeff);
  }

  // split W into its ū and p parts by block grade
  PolyMatrix wbar = poly_zero(vs, d);
  PolyMatrix wp = poly_zero(vs, d);
  for (unsigned r = 0; r < d; ++r)
    for (unsigned c = 0; c < d; ++c) {
      const int g = block_of(n, c) - block_of(n, r);
      (g < 0 ? wbar : wp)[r][c] = w[r][c];
    }

  // V = (ad u / (1 - exp(-ad u))) W_ū = W_ū + 1/2 [u, W_ū]; higher terms vanish on ū
  const PolyMatrix v = poly_scaled_sum(wbar, poly_bracket(u, wbar, vs), kHalf);

  WeylElement out(vs);
  auto add_coord = [&](const PolyVector& coeff_poly, unsigned slot) {
    if (coeff_poly.is_zero()) return;
    out -= WeylElement::from_poly(coeff_poly) * WeylElement::derivative(vs, slot);
  };
  for (unsigned i = 1; i <= n; ++i) {
    add_coord(v[i][0], vs.x(i));
    add_coord(v[last][i], vs.y(i));
  }
  add_coord(v[last][0], vs.z());

  // nu(W_p) = nu1 W_00 - nu2 W_{n+1,n+1}
  out += WeylElement::from_poly(wp[0][0] * nu.l1 - wp[last][last] * nu.l2);
  return out;
}

CertificationReport certify_homomorphism(const Realization& real) {
  const unsigned n = real.n();
  const auto& basis = canonical_basis(n);
  CertificationReport rep;
  rep.n = n;
  std::vector<LieElement> elems;
  for (const auto& b : basis) elems.emplace_back(n, b);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (!(fourier(real.pi(i)) == real.pi_hat(i))) rep.failures.push_back("fourier " + basis[i].name());
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const LieElement br = bracket(elems[i], elems[j]);
      const std::string pair = "[" + basis[i].name() + ", " + basis[j].name() + "]";
      if (!(commutator(real.pi(i), real.pi(j)) == real.pi(br))) rep.failures.push_back("pi " + pair);
      if (!(commutator(real.pi_hat(i), real.pi_hat(j)) == real.pi_hat(br))) rep.failures.push_back("pi_hat " + pair);
      ++rep.pairs;
    }
  }
  return rep;
}

}  // namespace heisverma
