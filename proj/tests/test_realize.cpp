#include <doctest.h>

#include <random>

#include "heisverma/realize.hpp"

using namespace heisverma;

TEST_CASE("homomorphism certificate for n = 2, 3") {
  for (unsigned n : {2u, 3u}) {
    const auto rep = certify_homomorphism(Realization::generic(n));
    CHECK(rep.pairs == ((n + 2) * (n + 2) - 1) * ((n + 2) * (n + 2) - 1));
    CHECK(rep.ok());
  }
  // also at a numeric parameter
  CHECK(certify_homomorphism(Realization(3, ParamScalar(Rational(1, 2)), ParamScalar(-7))).ok());
}

TEST_CASE("closed forms at known points") {
  const Realization real = Realization::generic(3);
  CHECK(real.pi_hat(LieBasisElement::C()).str() == "-z");
  const Realization zero(3, ParamScalar(0), ParamScalar(0));
  // pi(h1) carries the constant mu1 + mu2 + n + 1
  const WeylElement h1 = zero.pi(LieBasisElement::H1());
  CHECK(h1.str().substr(h1.str().size() - 2) == "+4");
  CHECK(Realization::for_verma(Character{3, ParamScalar(0), ParamScalar(0)}).mu1() == ParamScalar(2));
}

TEST_CASE("exponential-coordinate oracle agrees with the closed forms") {
  for (unsigned n = 1; n <= 3; ++n) {
    const Realization real = Realization::generic(n);
    const Character nu = Character::generic(n) + Character::rho(n);
    const auto& basis = canonical_basis(n);
    for (std::size_t k = 0; k < basis.size(); ++k) CHECK(pi_generic(LieElement(n, basis[k]), nu) == real.pi(k));
  }
}

TEST_CASE("reduction modulo the coordinate ideal") {
  const VarSet vs{2, Side::hatted};
  const WeylElement x = WeylElement::variable(vs, vs.x(1)), d = WeylElement::derivative(vs, vs.x(1));
  // x D = D x - 1 and D x lies in the ideal
  CHECK(reduce_mod_Ie(x * d) == WeylElement::constant(vs, ParamScalar(-1)));
  CHECK(reduce_mod_Ie(d * x).is_zero());
  CHECK(reduce_mod_Ie(d) == d);
}

TEST_CASE("phi on a quadratic vector and the two routes agree") {
  const Character lam{3, ParamScalar(-1), ParamScalar(-2)};
  const Realization real = Realization::for_verma(lam);
  PbwVector v(3);
  for (unsigned i = 1; i <= 3; ++i)
    v += PbwVector::letter(3, LieBasisElement::G(i)).left_mul(LieBasisElement::F(i));
  v += PbwVector::letter(3, LieBasisElement::C()) * ParamScalar(2);
  CHECK(real.phi(v).str() == "x1*y1+x2*y2+x3*y3-1/2*z");
  CHECK(real.phi_hatted(v) == real.phi(v));
}

TEST_CASE("poly_to_pbw inverts phi") {
  std::mt19937 rng(8);
  const unsigned n = 2;
  const Realization real = Realization::generic(n);
  const VarSet vs{n, Side::dual};
  std::uniform_int_distribution<int> slot(0, int(vs.slots()) - 1), len(0, 4), num(-3, 3);
  for (int s = 0; s < 40; ++s) {
    PolyVector p(vs);
    for (int k = 0; k < 3; ++k) {
      Exponent e(vs.slots(), 0);
      for (int j = len(rng); j > 0; --j) ++e[slot(rng)];
      p.add_term(e, ParamScalar(num(rng)));
    }
    CHECK(real.phi(poly_to_pbw(p)) == p);
  }
}
