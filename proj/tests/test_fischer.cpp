#include <doctest.h>

#include <random>

#include "heisverma/fischer.hpp"

using namespace heisverma;

TEST_CASE("harmonic dimensions match the binomial formula") {
  for (unsigned nv = 1; nv <= 3; ++nv)
    for (unsigned a = 0; a <= 3; ++a)
      for (unsigned b = 0; b <= 3; ++b) {
        const auto hs = harmonic_basis(a, b, nv);
        CHECK(Rational(long(hs.dim())) == harmonic_dimension(a, b, nv));
        for (const auto& h : hs.basis) CHECK(apply(box(hs.vs, hs.lo, hs.hi), h).is_zero());
      }
  // one pair of variables: x^a y^b is harmonic iff a b = 0
  CHECK(harmonic_dimension(2, 3, 1).is_zero());
  CHECK(harmonic_dimension(0, 3, 1) == Rational(1));
}

TEST_CASE("Fischer decomposition on a block reconstructs") {
  std::mt19937 rng(12);
  const VarSet vs{4, Side::dual};
  std::uniform_int_distribution<int> idx(1, 4), deg(0, 2), num(-3, 3);
  for (int s = 0; s < 20; ++s) {
    PolyVector f(vs);
    for (int k = 0; k < 4; ++k) {
      Exponent e(vs.slots(), 0);
      for (int j = deg(rng); j > 0; --j) ++e[vs.x(idx(rng))];
      for (int j = deg(rng); j > 0; --j) ++e[vs.y(idx(rng))];
      e[vs.z()] = deg(rng) / 2;
      f.add_term(e, ParamScalar(num(rng)));
    }
    // first block only; outside variables act as coefficients
    PolyVector back(vs);
    for (const auto& [k, h] : fischer_project(f, 1, 2)) {
      CHECK(apply(box(vs, 1, 2), h).is_zero());
      back += q_poly(vs, 1, 2).pow(k) * h;
    }
    CHECK(back == f);
    CHECK(FischerElement::decompose(f, 2).materialize() == f);
  }
}

TEST_CASE("S spaces") {
  // r = 0 with s = 2l: q^l lies in S iff l = 0 or l = l1 + l2 + n + 1
  CHECK(solve_S(0, 0, Rational(-1), Rational(-2), 3, 0).size() == 1);
  CHECK(solve_S(1, 2, Rational(-1), Rational(-2), 3, 0).size() == 1);
  CHECK(solve_S(2, 4, Rational(-1), Rational(-2), 3, 0).empty());
  CHECK(solve_S(2, 4, Rational(-1), Rational(-1), 3, 0).size() == 1);
  CHECK(solve_S(2, 4, Rational(1, 2), Rational(0), 3, 0).empty());
  // r > 0: l + 1 unknowns against l equations
  for (unsigned l = 0; l <= 3; ++l)
    for (const auto& u : solve_S(l, 2 * l + 1, Rational(1, 3), Rational(2), 4, 1)) {
      const QOperator q{ParamScalar(Rational(-long(2 * l + 1)) + Rational(1, 3) + Rational(2) + Rational(2)),
                        ParamScalar(1), 4, 1};
      CHECK(q.apply(u).is_zero());
    }
}

TEST_CASE("T coefficients: recurrence equals the generating series") {
  std::mt19937 rng(13);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 4);
  for (int s = 0; s < 20; ++s) {
    const ParamScalar r1(Rational(num(rng), den(rng))), r2(Rational(num(rng), den(rng)));
    CHECK(t_coeffs(r1, r2, ParamScalar::lambda1(), ParamScalar::lambda2(), 8) ==
          t_coeffs_series(r1, r2, ParamScalar::lambda1(), ParamScalar::lambda2(), 8));
  }
  // symbolic specialization agrees with numeric construction
  const auto sym = TOperator::make(3, 1, ParamScalar::lambda1(), ParamScalar::lambda2());
  const auto num_t = TOperator::make(3, 1, ParamScalar(Rational(1, 2)), ParamScalar(-2));
  const RadialPoly u = RadialPoly::monomial(2, 0, 0, ParamScalar(1));
  RadialPoly evaluated;
  const RadialPoly image = sym.apply(u);
  for (const auto& [k, c] : image.terms())
    evaluated.add_term(k, ParamScalar(c.evaluate(Rational(1, 2), Rational(-2))));
  CHECK(evaluated == num_t.apply(u));
}

TEST_CASE("T is the identity on the Case 1 line") {
  // r1 = l1 + 1 and r2 = l2 + 1 kill every alpha_k with k >= 1
  const auto t = TOperator::make(3, 2, ParamScalar(2), ParamScalar(1));
  for (std::size_t k = 1; k < t.alpha.size(); ++k) CHECK(t.alpha[k].is_zero());
  const RadialPoly u = RadialPoly::monomial(1, 1, 0, ParamScalar(1));
  CHECK(t.apply(u) == u);
  const VarSet vs{4, Side::dual};
  const PolyVector f = u.materialize(vs, 1);
  CHECK(t_apply(t, f, 1) == f);
}
