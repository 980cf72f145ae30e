#include <doctest.h>

#include <random>

#include "heisverma/serialize.hpp"

using namespace heisverma;

TEST_CASE("scalars") {
  CHECK(to_json(Rational(-3, 4)) == "-3/4");
  CHECK(rational_from_json(Json("-3/4")) == Rational(-3, 4));
  CHECK(rational_from_json(Json(7)) == Rational(7));
  const ParamScalar s = ParamScalar::lambda1() * Rational(1, 2) + ParamScalar(3);
  CHECK(param_from_json(to_json(s)) == s);
  CHECK_THROWS_AS(rational_from_json(Json(1.5)), std::invalid_argument);
  CHECK_THROWS(rational_from_json(Json("1/0")));
}

TEST_CASE("polynomials and operators round trip") {
  std::mt19937 rng(4);
  std::uniform_int_distribution<int> num(-5, 5), deg(0, 3);
  for (unsigned n = 1; n <= 3; ++n) {
    const VarSet vs{n, n % 2 ? Side::dual : Side::hatted};
    PolyVector p(vs);
    WeylElement w(vs);
    for (int k = 0; k < 5; ++k) {
      Exponent a(vs.slots(), 0), b(vs.slots(), 0);
      for (unsigned s = 0; s < vs.slots(); ++s) {
        a[s] = static_cast<std::uint8_t>(deg(rng) / 2);
        b[s] = static_cast<std::uint8_t>(deg(rng) / 3);
      }
      p.add_term(a, ParamScalar(Rational(num(rng), 3)) + ParamScalar::lambda2());
      w.add_term(a, b, ParamScalar(num(rng)));
    }
    CHECK(poly_from_json(to_json(p)) == p);
    CHECK(weyl_from_json(to_json(w)) == w);
    CHECK(poly_from_json(Json::parse(to_json(p).dump())) == p);
  }
}

TEST_CASE("PBW vectors and Lie basis elements round trip") {
  const unsigned n = 2;
  PbwVector v = PbwVector::letter(n, LieBasisElement::G(1)).left_mul(LieBasisElement::F(1));
  v += PbwVector::letter(n, LieBasisElement::C()) * ParamScalar::lambda1();
  CHECK(pbw_from_json(to_json(v)) == v);
  for (const auto& b : canonical_basis(3)) CHECK(lie_from_json(to_json(b)) == b);
  const Json f = to_json(LieBasisElement::F(2));
  CHECK(f.dump() == R"({"kind":"f","i":2})");
}

TEST_CASE("malformed input is rejected") {
  CHECK_THROWS_AS(poly_from_json(Json::parse(R"({"n":2})")), std::invalid_argument);
  CHECK_THROWS_AS(poly_from_json(Json::parse(R"({"n":2,"side":"left","terms":[]})")), std::invalid_argument);
  CHECK_THROWS_AS(poly_from_json(Json::parse(R"({"n":1,"side":"dual","terms":[[[1,0],"1"]]})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(poly_from_json(Json::parse(R"({"n":1,"side":"dual","terms":[[[1,0,-1],"1"]]})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(weyl_from_json(Json::parse(R"({"n":1,"side":"dual","terms":[[[0,0,0],"1"]]})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(pbw_from_json(Json::parse(R"({"n":0,"terms":[]})")), std::invalid_argument);
  CHECK_THROWS_AS(lie_from_json(Json::parse(R"({"kind":"q"})")), std::invalid_argument);
  CHECK_THROWS_AS(lie_from_json(Json::parse(R"({"kind":"f","i":0})")), std::invalid_argument);
}
