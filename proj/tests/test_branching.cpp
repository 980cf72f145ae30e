#include <doctest.h>

#include <cstdlib>

#include "heisverma/branching.hpp"
#include "heisverma/verma.hpp"

using namespace heisverma;

namespace {

PolyVector one(unsigned n) { return PolyVector::constant({n, Side::dual}, ParamScalar(1)); }

bool same_line(const PolyVector& a, const PolyVector& b) { return span_rank({a, b}) == 1 && !a.is_zero(); }

}  // namespace

TEST_CASE("multiplicities") {
  CHECK(multiplicity(3, 0, 1) == 1);
  CHECK(multiplicity(2, 5, 1) == 1);
  CHECK(multiplicity(1, 1, 2) == 4);
  CHECK(multiplicity(2, 1, 2) == 6);
  CHECK(multiplicity(1, 1, 3) == 9);
  CHECK_THROWS_AS(multiplicity(1, 1, 0), std::invalid_argument);
}

TEST_CASE("case constraints") {
  CHECK(classify_case(0, 0, 2, 1, Rational(1, 2), Rational(1, 3)) == CaseTag::case4);
  CHECK(classify_case(2, 0, 0, 0, Rational(1), Rational(1, 3)) == CaseTag::case2);
  CHECK_FALSE(classify_case(2, 0, 0, 0, Rational(0), Rational(0)).has_value());
  CHECK(classify_case(0, 1, 0, 1, Rational(1, 2), Rational(1)) == CaseTag::case3);
  CHECK(classify_case(1, 1, 0, 0, Rational(0), Rational(0)) == CaseTag::case1);
  CHECK_FALSE(classify_case(1, 1, 0, 0, Rational(0), Rational(1)).has_value());
  CHECK(to_string(CaseTag::case3) == "Case3");
  const ComponentDescriptor c{1, 0, 2, 1, CaseTag::case2, Rational(2), Rational(0), 4, 1};
  CHECK(c.m() == 4);
  CHECK(c.t() == 5 * 1 + 3 * 1);
  CHECK(c.label() == "V(1,0,2,1)");
}

TEST_CASE("theorem lists agree with the case constraints over a grid") {
  const std::vector<Rational> values{Rational(-5), Rational(-3), Rational(-2), Rational(-1), Rational(0),
                                     Rational(1),  Rational(2),  Rational(1, 2), Rational(-7, 3)};
  for (const auto& [n, r] : std::vector<std::pair<unsigned, unsigned>>{{3, 0}, {4, 0}, {4, 1}, {5, 2}})
    for (const auto& l1 : values)
      for (const auto& l2 : values) {
        INFO("n=" << n << " r=" << r << " l=" << l1.str() << "," << l2.str());
        CHECK(enumerate_components(l1, l2, n, r, 4) == enumerate_by_cases(l1, l2, n, r, 4));
      }
}

TEST_CASE("r = 0 lists") {
  // generic lambda: only the trivial component
  const auto generic = enumerate_components(Rational(1, 2), Rational(1, 3), 3, 0, 6);
  REQUIRE(generic.size() == 1);
  CHECK(generic[0].m() == 0);
  // l1 + l2 + n = 0 adds the q-power component of degree 2
  const auto sing = enumerate_components(Rational(-1), Rational(-2), 3, 0, 2);
  bool has_q = false;
  for (const auto& c : sing) has_q = has_q || (c.a0 == 0 && c.b0 == 0 && c.c0 == 1 && c.d0 == 1);
  CHECK(has_q);
  CHECK_THROWS_AS(enumerate_components(Rational(0), Rational(0), 4, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_by_cases(Rational(0), Rational(0), 2, 0, 2), std::invalid_argument);
}

TEST_CASE("build_R") {
  SUBCASE("trivial component gives the vacuum") {
    const ComponentDescriptor c{0, 0, 0, 0, CaseTag::case4, Rational(1, 2), Rational(1, 3), 4, 1};
    const auto v = build_R(c, one(4), one(4), RadialPoly::monomial(0, 0, 0, ParamScalar(1)));
    CHECK(v.polynomial == one(4));
    CHECK(v.pbw == PbwVector::vacuum(4));
  }
  SUBCASE("r = 0, l = 1 reproduces the quadratic example") {
    const Character lam{3, ParamScalar(-1), ParamScalar(-2)};
    const ComponentDescriptor c{0, 0, 1, 1, CaseTag::case4, Rational(-1), Rational(-2), 3, 0};
    const auto v = build_R(c, one(3), one(3), RadialPoly::monomial(1, 0, 0, ParamScalar(1)));
    CHECK(same_line(v.polynomial, VermaModule(lam).to_polynomial(example_r0_quadratic(lam))));
    CHECK(VermaModule(lam).is_singular(v.pbw, 0));
  }
  SUBCASE("the (0,0,a,0) component is the line of x_n^a") {
    for (unsigned a = 1; a <= 3; ++a) {
      const ComponentDescriptor c{0, 0, a, 0, CaseTag::case4, Rational(1, 2), Rational(1, 3), 4, 1};
      const auto vs = component_vectors(c);
      REQUIRE(vs.size() == 1);
      Exponent e(9, 0);
      e[VarSet{4, Side::dual}.x(4)] = static_cast<std::uint8_t>(a);
      CHECK(same_line(vs[0].polynomial, PolyVector::monomial({4, Side::dual}, e, ParamScalar(1))));
    }
  }
  SUBCASE("inputs outside their spaces are rejected") {
    const VarSet vs{4, Side::dual};
    const ComponentDescriptor c{1, 1, 0, 0, CaseTag::case1, Rational(0), Rational(0), 4, 1};
    CHECK_THROWS_AS(build_R(c, q_poly(vs, 1, 3), one(4), RadialPoly::monomial(0, 0, 0, ParamScalar(1))),
                    std::invalid_argument);
    CHECK_THROWS_AS(build_R(c, PolyVector::variable(vs, vs.x(1)) * PolyVector::variable(vs, vs.y(2)), one(4),
                            RadialPoly::monomial(1, 0, 0, ParamScalar(1))),
                    std::invalid_argument);
  }
}

TEST_CASE("z-recurrences and annihilation") {
  const Character lam{3, ParamScalar(Rational(1, 2)), ParamScalar(Rational(1, 3))};
  CHECK(recurrence_check(one(3), lam, 0));
  CHECK(is_annihilated(one(3), lam, 0));
  const PolyVector q = q_poly({3, Side::dual});
  CHECK_FALSE(recurrence_check(q, lam, 0));
  CHECK_FALSE(is_annihilated(q, lam, 0));
  // every vector produced by a component passes both tests
  for (const auto& c : enumerate_components(Rational(0), Rational(0), 4, 1, 3))
    for (const auto& v : component_vectors(c)) {
      CHECK(recurrence_check(v));
      CHECK(is_annihilated(v.polynomial, c.lambda(), c.r));
    }
}

TEST_CASE("slices and the brute-force kernel") {
  std::size_t total = 0;
  for (unsigned m = 0; m <= 4; ++m)
    for (long t : admissible_t(4, 1, m)) {
      CHECK_FALSE(slice_monomials(4, 1, m, t).empty());
      total += brute_force_solve(Rational(1, 2), Rational(1, 3), 4, 1, m, t).size();
    }
  // non-integral lambda, r = 1: (0,0,c,d) has dimension 1 for every c, d
  CHECK(total == 1 + 2 + 3 + 4 + 5);
  CHECK(brute_force_solve(Rational(-1), Rational(-2), 3, 0, 2, 0).size() == 1);
  CHECK(brute_force_solve(Rational(1, 2), Rational(1, 3), 3, 0, 2, 0).empty());
}

TEST_CASE("highest weight filter") {
  const VarSet vs{3, Side::dual};
  const PolyVector x1 = PolyVector::variable(vs, vs.x(1)), x2 = PolyVector::variable(vs, vs.x(2));
  CHECK(highest_weight_filter({one(3)}, 3, 0).size() == 1);
  CHECK(highest_weight_filter({x1}, 3, 0).size() == 1);
  CHECK(highest_weight_filter({x2}, 3, 0).empty());
  CHECK(highest_weight_filter({x1, x2}, 3, 0).size() == 1);
  Exponent e(vs.slots(), 0);
  e[vs.x(1)] = 2;
  e[vs.y(3)] = 1;
  CHECK(block_weight(vs, 0, e) == std::vector<long>{2, 0, -1});
}

TEST_CASE("cross-validation on small cases") {
  for (const auto& rep : cross_validate(Rational(-1), Rational(-2), 3, 0, 4)) {
    INFO("m=" << rep.m << " t=" << rep.t);
    CHECK(rep.match());
  }
  for (const auto& rep : cross_validate(Rational(1), Rational(-1), 4, 1, 3)) {
    INFO("m=" << rep.m << " t=" << rep.t);
    CHECK(rep.match());
  }
}

TEST_CASE("product conjecture for a <= 2") {
  for (unsigned n : {3u, 4u})
    for (unsigned a = 1; a <= 2; ++a) {
      const Rational l1(1), l2 = Rational(long(a) - 1 - long(n)) - l1;
      const auto v = factorization_check(l1, l2, a, n);
      CHECK(v.verdict);
      CHECK(v.pbw_verdict);
    }
  CHECK_THROWS_AS(factorization_check(Rational(0), Rational(0), 1, 3), std::invalid_argument);
}

TEST_CASE("thread count honours the environment") {
  setenv("HEISVERMA_THREADS", "2", 1);
  CHECK(thread_count() == 2);
  unsetenv("HEISVERMA_THREADS");
  CHECK(thread_count() >= 1);
  std::vector<int> hits(50, 0);
  parallel_for(hits.size(), [&](std::size_t i) { hits[i] += 1; });
  CHECK(std::count(hits.begin(), hits.end(), 1) == 50);
  CHECK_THROWS_AS(parallel_for(4, [](std::size_t i) {
                    if (i == 2) throw std::runtime_error("x");
                  }),
                  std::runtime_error);
}
