#include <doctest.h>

#include <random>
#include <stdexcept>

#include "heisverma/param_scalar.hpp"

using heisverma::ParamScalar;
using heisverma::Rational;

namespace {

ParamScalar random_scalar(std::mt19937& rng) {
  std::uniform_int_distribution<int> deg(0, 2), num(-4, 4), den(1, 3), terms(0, 3);
  ParamScalar s;
  for (int k = terms(rng); k > 0; --k)
    s += ParamScalar::monomial({unsigned(deg(rng)), unsigned(deg(rng))}, Rational(num(rng), den(rng)));
  return s;
}

}  // namespace

TEST_CASE("parse and render") {
  const ParamScalar l1 = ParamScalar::lambda1(), l2 = ParamScalar::lambda2();
  CHECK(ParamScalar::parse("l1+l2+4") == l1 + l2 + ParamScalar(4));
  CHECK((l1 + l2 + ParamScalar(4)).str() == "l1+l2+4");
  CHECK((l1 * Rational(-1, 2)).str() == "-1/2*l1");
  CHECK(ParamScalar().str() == "0");
  CHECK(ParamScalar::parse("l1^2-1/2*l2+3") == l1 * l1 - l2 * Rational(1, 2) + ParamScalar(3));
  CHECK_THROWS_AS(ParamScalar::parse("l3"), std::invalid_argument);
  CHECK_THROWS_AS(ParamScalar::parse("l1+"), std::invalid_argument);
}

TEST_CASE("constants") {
  CHECK(ParamScalar(Rational(5, 2)).as_rational() == Rational(5, 2));
  CHECK(ParamScalar().as_rational().is_zero());
  CHECK_THROWS_AS(ParamScalar::lambda1().as_rational(), std::domain_error);
  CHECK((ParamScalar::lambda1() - ParamScalar::lambda1()).is_zero());
}

TEST_CASE("ring axioms and evaluation is a homomorphism") {
  std::mt19937 rng(11);
  for (int s = 0; s < 200; ++s) {
    const ParamScalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a - a == ParamScalar());
    CHECK(ParamScalar::parse(a.str()) == a);
    const Rational v1(s % 7 - 3, 2), v2(s % 5 - 1, 3);
    CHECK((a * b + c).evaluate(v1, v2) == a.evaluate(v1, v2) * b.evaluate(v1, v2) + c.evaluate(v1, v2));
    // substituting constants agrees with evaluation
    CHECK(a.substitute(ParamScalar(v1), ParamScalar(v2)) == ParamScalar(a.evaluate(v1, v2)));
  }
}
