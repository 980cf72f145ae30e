#include "heisverma/verma.hpp"

#include <stdexcept>

namespace heisverma {

VermaModule::VermaModule(Character lambda)
    : lambda_(std::move(lambda)), real_(Realization::for_verma(lambda_)), nbar_dim_(2 * lambda_.n + 1) {
  const unsigned n = lambda_.n;
  const auto& basis = canonical_basis(n);
  char_values_.reserve(basis.size());
  ad_.resize(basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const LieElement bk(n, basis[k]);
    char_values_.push_back(k < nbar_dim_ ? ParamScalar() : lambda_.pairing(bk.part_levi()));
    if (k < nbar_dim_) continue;
    ad_[k].resize(nbar_dim_);
    for (std::size_t l = 0; l < nbar_dim_; ++l) {
      const auto coords = bracket(bk, LieElement(n, basis[l])).coordinates();
      for (std::size_t j = 0; j < coords.size(); ++j)
        if (!coords[j].is_zero()) ad_[k][l].emplace_back(j, coords[j]);
    }
  }
}

const PbwVector& VermaModule::act_word(std::size_t k, const PbwVector::Word& w) const {
  const auto key = std::make_pair(k, w);
  {
    std::lock_guard lock(memo_mu_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }
  const unsigned n = lambda_.n;
  const auto& basis = canonical_basis(n);
  PbwVector res(n);
  if (k < nbar_dim_) {
    res = PbwVector::word(n, w, ParamScalar(1)).left_mul(basis[k]);
  } else if (total_degree(w) == 0) {
    res = PbwVector::vacuum(n) * char_values_[k];
  } else {
    // X L w' = L (X w') + [X, L] w' with L the leftmost letter of w
    std::size_t l = 0;
    while (w[l] == 0) ++l;
    PbwVector::Word rest = w;
    --rest[l];
    res = act_word(k, rest).left_mul(basis[l]);
    for (const auto& [j, c] : ad_[k][l]) res += act_word(j, rest) * ParamScalar(c);
  }
  std::lock_guard lock(memo_mu_);
  // std::map never invalidates references, so handing one out is safe
  return memo_.try_emplace(key, std::move(res)).first->second;
}

PbwVector VermaModule::act(std::size_t k, const PbwVector& v) const {
  PbwVector out(n());
  if (v.is_zero()) return out;
  if (v.n() != n()) throw std::invalid_argument("VermaModule::act: size mismatch");
  for (const auto& [w, c] : v.terms()) out += act_word(k, w) * c;
  return out;
}

PbwVector VermaModule::act(const LieBasisElement& x, const PbwVector& v) const {
  if (x.kind != LieKind::hmat) return act(canonical_index(n(), x), v);
  return act(LieElement(n(), x), v);
}

PbwVector VermaModule::act(const LieElement& x, const PbwVector& v) const {
  PbwVector out(n());
  const auto coords = x.coordinates();
  for (std::size_t k = 0; k < coords.size(); ++k)
    if (!coords[k].is_zero()) out += act(k, v) * ParamScalar(coords[k]);
  return out;
}

bool VermaModule::is_singular(const PbwVector& v, unsigned r) const {
  if (r >= n()) throw std::invalid_argument("is_singular: need r < n");
  for (unsigned i = 1; i <= n() - r; ++i) {
    if (!act(LieBasisElement::D(i), v).is_zero()) return false;
    if (!act(LieBasisElement::E(i), v).is_zero()) return false;
  }
  return true;
}

bool VermaModule::crosscheck_phi(const PbwVector& v) const {
  const PolyVector base = real_.phi(v);
  if (!(real_.phi_hatted(v) == base)) return false;
  const auto& basis = canonical_basis(n());
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const PbwVector xv = act(k, v);
    if (!(real_.phi_hatted(xv) == apply(real_.pi_hat(k), base))) return false;
  }
  return true;
}

// ------------------------------------------------------------------ catalog

namespace {

PbwVector letter_product(unsigned n, const std::vector<LieBasisElement>& letters) {
  // letters[0] is leftmost
  PbwVector v = PbwVector::vacuum(n);
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) v = v.left_mul(*it);
  return v;
}

}  // namespace

PbwVector casimir_like(unsigned n, const ParamScalar& s) {
  PbwVector v(n);
  for (unsigned i = 1; i <= n; ++i) v += letter_product(n, {LieBasisElement::F(i), LieBasisElement::G(i)});
  v += PbwVector::letter(n, LieBasisElement::C()) * s;
  return v;
}

PbwVector example_r0_quadratic(const Character& lambda) { return conjecture_vector(lambda, 1); }

PbwVector example_r0_quartic(const Character& lambda) { return conjecture_vector(lambda, 2); }

PbwVector example_r0_mixed(unsigned n) {
  return letter_product(n, {LieBasisElement::F(1), LieBasisElement::G(n)});
}

PbwVector conjecture_vector(const Character& lambda, unsigned a) {
  const unsigned n = lambda.n;
  PbwVector v = PbwVector::vacuum(n);
  // multiply from the right so that j = 0 ends up leftmost
  for (unsigned jj = a; jj-- > 0;) {
    const ParamScalar s = (lambda.l1 - lambda.l2 + ParamScalar(long(n) - long(a) + 2 * long(jj) + 1)) *
                          Rational(1, 2);
    v = casimir_like(n, s) * v;
  }
  return v;
}

PbwVector example_r1(unsigned which, const Character& lambda, unsigned a) {
  const unsigned n = lambda.n;
  PbwVector fna(n), gna(n);
  {
    PbwVector::Word w(2 * n + 1, 0);
    w[n - 1] = static_cast<std::uint8_t>(a);
    fna = PbwVector::word(n, w, ParamScalar(1));
    PbwVector::Word u(2 * n + 1, 0);
    u[2 * n - 1] = static_cast<std::uint8_t>(a);
    gna = PbwVector::word(n, u, ParamScalar(1));
  }
  const ParamScalar ratio =
      (lambda.l1 + lambda.l2 + ParamScalar(long(n) - 1 - long(a))) * Rational(1, long(a) + 1);
  switch (which) {
    case 1: return fna;
    case 2: return gna;
    case 3: {
      // (sum_{i<n} g_i f_i + (l1 - a) c - ratio g_n f_n) f_n^a
      PbwVector op(n);
      for (unsigned i = 1; i < n; ++i) op += letter_product(n, {LieBasisElement::G(i), LieBasisElement::F(i)});
      op += PbwVector::letter(n, LieBasisElement::C()) * (lambda.l1 - ParamScalar(long(a)));
      op -= letter_product(n, {LieBasisElement::G(n), LieBasisElement::F(n)}) * ratio;
      return op * fna;
    }
    case 4: {
      // (sum_{i<n} f_i g_i - (l2 - a) c - ratio f_n g_n) g_n^a
      PbwVector op(n);
      for (unsigned i = 1; i < n; ++i) op += letter_product(n, {LieBasisElement::F(i), LieBasisElement::G(i)});
      op -= PbwVector::letter(n, LieBasisElement::C()) * (lambda.l2 - ParamScalar(long(a)));
      op -= letter_product(n, {LieBasisElement::F(n), LieBasisElement::G(n)}) * ratio;
      return op * gna;
    }
    default: throw std::invalid_argument("example_r1: family must be 1..4");
  }
}

std::vector<ExampleVector> example_catalog(unsigned n_r0, unsigned n_r1, unsigned a_max) {
  std::vector<ExampleVector> out;
  const long n0 = long(n_r0);
  {
    // l1 + l2 + n = 0
    Character lam{n_r0, ParamScalar(-1), ParamScalar(1 - n0)};
    out.push_back({"r0-quadratic", n_r0, 0, lam, example_r0_quadratic(lam).evaluate(Rational(-1), Rational(1 - n0))});
  }
  {
    // l1 + l2 + n = 1
    Character lam{n_r0, ParamScalar(0), ParamScalar(1 - n0)};
    out.push_back({"r0-quartic", n_r0, 0, lam, example_r0_quartic(lam).evaluate(Rational(0), Rational(1 - n0))});
  }
  {
    Character lam{n_r0, ParamScalar(0), ParamScalar(0)};
    out.push_back({"r0-mixed", n_r0, 0, lam, example_r0_mixed(n_r0)});
  }
  const Character gen = Character::generic(n_r1);
  for (unsigned which = 1; which <= 4; ++which)
    for (unsigned a = 0; a <= a_max; ++a)
      out.push_back({"r1-family" + std::to_string(which) + "-a" + std::to_string(a), n_r1, 1, gen,
                     example_r1(which, gen, a)});
  return out;
}

}  // namespace heisverma
