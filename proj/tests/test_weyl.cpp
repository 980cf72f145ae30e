#include <doctest.h>

#include <random>
#include <stdexcept>

#include "heisverma/weyl.hpp"

using namespace heisverma;

namespace {

const VarSet kDual{3, Side::dual};
const VarSet kHat{3, Side::hatted};

WeylElement random_weyl(std::mt19937& rng, VarSet vs) {
  std::uniform_int_distribution<int> slot(0, int(vs.slots()) - 1), len(0, 2), num(-3, 3), terms(1, 3);
  WeylElement w(vs);
  for (int k = terms(rng); k > 0; --k) {
    Exponent a(vs.slots(), 0), b(vs.slots(), 0);
    for (int j = len(rng); j > 0; --j) ++a[slot(rng)];
    for (int j = len(rng); j > 0; --j) ++b[slot(rng)];
    w.add_term(a, b, ParamScalar(Rational(num(rng), 2)));
  }
  return w;
}

PolyVector random_poly(std::mt19937& rng, VarSet vs) {
  std::uniform_int_distribution<int> slot(0, int(vs.slots()) - 1), len(0, 3), num(-3, 3), terms(1, 4);
  PolyVector p(vs);
  for (int k = terms(rng); k > 0; --k) {
    Exponent e(vs.slots(), 0);
    for (int j = len(rng); j > 0; --j) ++e[slot(rng)];
    p.add_term(e, ParamScalar(num(rng)) + ParamScalar::lambda1() * Rational(num(rng)));
  }
  return p;
}

}  // namespace

TEST_CASE("canonical commutation relations") {
  for (unsigned s = 0; s < kDual.slots(); ++s)
    for (unsigned t = 0; t < kDual.slots(); ++t) {
      const WeylElement c = commutator(WeylElement::derivative(kDual, s), WeylElement::variable(kDual, t));
      CHECK(c == (s == t ? WeylElement::constant(kDual, ParamScalar(1)) : WeylElement(kDual)));
      CHECK(commutator(WeylElement::variable(kDual, s), WeylElement::variable(kDual, t)).is_zero());
    }
}

TEST_CASE("product is associative and apply is an action") {
  std::mt19937 rng(1);
  for (int s = 0; s < 60; ++s) {
    const WeylElement a = random_weyl(rng, kDual), b = random_weyl(rng, kDual), c = random_weyl(rng, kDual);
    CHECK((a * b) * c == a * (b * c));
    const PolyVector f = random_poly(rng, kDual);
    CHECK(apply(a * b, f) == apply(a, apply(b, f)));
  }
}

TEST_CASE("Fourier transform is an algebra isomorphism") {
  std::mt19937 rng(2);
  const unsigned s = kHat.x(2);
  CHECK(fourier(WeylElement::variable(kHat, s)) == -WeylElement::derivative(kDual, s));
  CHECK(fourier(WeylElement::derivative(kHat, s)) == WeylElement::variable(kDual, s));
  for (int k = 0; k < 60; ++k) {
    const WeylElement a = random_weyl(rng, kHat), b = random_weyl(rng, kHat);
    CHECK(fourier(a * b) == fourier(a) * fourier(b));
    CHECK(fourier_inverse(fourier(a)) == a);
  }
}

TEST_CASE("polynomial arithmetic") {
  std::mt19937 rng(3);
  for (int k = 0; k < 60; ++k) {
    const PolyVector f = random_poly(rng, kDual), g = random_poly(rng, kDual);
    // Leibniz rule as an oracle for derivative and product
    CHECK((f * g).derivative(kDual.y(1)) == f.derivative(kDual.y(1)) * g + f * g.derivative(kDual.y(1)));
    PolyVector back(kDual);
    const auto zs = f.z_expansion();
    const PolyVector z = PolyVector::variable(kDual, kDual.z());
    for (unsigned j = 0; j < zs.size(); ++j) back += z.pow(j) * zs[j];
    CHECK(back == f);
    CHECK(f.pow(2) == f * f);
  }
  const PolyVector q = q_poly(kDual);
  CHECK(q.str() == "x1*y1+x2*y2+x3*y3");
  CHECK(q.weighted_degree() == 2);
  CHECK(PolyVector::variable(kDual, kDual.z()).weighted_degree() == 2);
  CHECK(PolyVector(kDual).weighted_degree() == -1);
  // box q^k = k (n + k - 1) q^{k-1}
  CHECK(apply(box(kDual), q.pow(2)) == q * ParamScalar(2 * (3 + 1)));
}

TEST_CASE("exponent cap is enforced") {
  Exponent e(kDual.slots(), 0);
  e[0] = kMaxExponent;
  const PolyVector p = PolyVector::monomial(kDual, e, ParamScalar(1));
  CHECK_THROWS_AS(p * PolyVector::variable(kDual, 0), std::overflow_error);
}

TEST_CASE("Euler operators measure the bidegree") {
  std::mt19937 rng(4);
  const VarSet vs{4, Side::dual};
  for (unsigned r = 0; r < 4; ++r)
    for (int k = 0; k < 20; ++k) {
      const PolyVector f = random_poly(rng, vs);
      for (const auto& [m, t, comp] : euler_bidegree(f, r)) {
        CHECK(apply(euler_m(vs), comp) == comp * ParamScalar(m));
        CHECK(apply(euler_t(vs, r), comp) == comp * ParamScalar(t));
      }
    }
  CHECK_THROWS_AS(euler_bidegree(PolyVector(vs), 4), std::invalid_argument);
}

TEST_CASE("rendering") {
  const WeylElement w = WeylElement::variable(kDual, kDual.x(1)) * WeylElement::derivative(kDual, kDual.z()) -
                        WeylElement::constant(kDual, ParamScalar::lambda1() + ParamScalar(1));
  CHECK(w.str() == "x1*Dz-(l1+1)");
  CHECK(WeylElement(kDual).str() == "0");
  CHECK(kDual.slot_name(kDual.y(3)) == "y3");
}
