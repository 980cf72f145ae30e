#include <doctest.h>

#include <stdexcept>

#include "heisverma/rational.hpp"

using heisverma::Rational;

TEST_CASE("parse and render") {
  CHECK(Rational::parse("6/4").str() == "3/2");
  CHECK(Rational::parse("-10/5").str() == "-2");
  CHECK(Rational::parse("+7").str() == "7");
  CHECK(Rational::parse("0/9").is_zero());
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("--1"), std::invalid_argument);
}

TEST_CASE("field operations") {
  const Rational a(1, 2), b(-2, 3);
  CHECK(a + b == Rational(-1, 6));
  CHECK(a * b == Rational(-1, 3));
  CHECK(a / b == Rational(-3, 4));
  CHECK(b.inverse() == Rational(-3, 2));
  CHECK(b.abs() == Rational(2, 3));
  CHECK(-a == Rational(-1, 2));
  CHECK(b < a);
  CHECK_THROWS(Rational(0).inverse());
  CHECK_THROWS(a / Rational(0));
}

TEST_CASE("predicates") {
  CHECK(Rational(3).is_natural());
  CHECK(Rational(0).is_natural());
  CHECK_FALSE(Rational(-1).is_natural());
  CHECK_FALSE(Rational(1, 2).is_natural());
  CHECK(Rational(12).to_long() == 12);
  CHECK_THROWS(Rational(1, 3).to_long());
}

TEST_CASE("binomials agree with Pascal's triangle") {
  std::vector<std::vector<long>> pascal(12);
  for (unsigned n = 0; n < 12; ++n) {
    pascal[n].assign(n + 1, 1);
    for (unsigned k = 1; k < n; ++k) pascal[n][k] = pascal[n - 1][k - 1] + pascal[n - 1][k];
  }
  for (unsigned n = 0; n < 12; ++n) {
    for (unsigned k = 0; k <= n; ++k) {
      CHECK(heisverma::binomial(n, k) == Rational(pascal[n][k]));
      CHECK(heisverma::binomial(Rational(long(n)), k) == Rational(pascal[n][k]));
    }
    CHECK(heisverma::binomial(n, n + 1).is_zero());
  }
  // (1 + w)^{-1/2}: C(-1/2, 2) = 3/8
  CHECK(heisverma::binomial(Rational(-1, 2), 2) == Rational(3, 8));
  CHECK(heisverma::factorial(6) == Rational(720));
}
