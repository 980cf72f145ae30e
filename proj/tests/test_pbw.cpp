#include <doctest.h>

#include <random>

#include "heisverma/pbw.hpp"

using namespace heisverma;

namespace {

PbwVector::Word word(unsigned n, std::initializer_list<std::pair<unsigned, unsigned>> slots) {
  PbwVector::Word w(2 * n + 1, 0);
  for (auto [s, k] : slots) w[s] = static_cast<std::uint8_t>(k);
  return w;
}

PbwVector random_vector(std::mt19937& rng, unsigned n) {
  std::uniform_int_distribution<int> letter(0, int(2 * n)), len(0, 3), num(-3, 3), terms(1, 3);
  PbwVector v(n);
  for (int k = terms(rng); k > 0; --k) {
    PbwVector::Word w(2 * n + 1, 0);
    for (int j = len(rng); j > 0; --j) ++w[letter(rng)];
    v.add_term(w, ParamScalar(num(rng)));
  }
  return v;
}

}  // namespace

TEST_CASE("straightening g f = f g + c") {
  const unsigned n = 2;
  const PbwVector f1 = PbwVector::letter(n, LieBasisElement::F(1));
  const PbwVector gf = f1.left_mul(LieBasisElement::G(1));
  CHECK(gf == PbwVector::word(n, word(n, {{0, 1}, {2, 1}}), ParamScalar(1)) + PbwVector::letter(n, LieBasisElement::C()));
  CHECK(gf.str() == "f1 g1 . v + c . v");
  // letters of different index commute
  CHECK(f1.left_mul(LieBasisElement::G(2)) == PbwVector::word(n, word(n, {{0, 1}, {3, 1}}), ParamScalar(1)));
  CHECK(PbwVector::vacuum(n).str() == "v");
  // g f^a = f^a g + a f^{a-1} c
  PbwVector f3 = PbwVector::word(n, word(n, {{0, 3}}), ParamScalar(1));
  CHECK(f3.left_mul(LieBasisElement::G(1)) == PbwVector::word(n, word(n, {{0, 3}, {2, 1}}), ParamScalar(1)) +
                                                  PbwVector::word(n, word(n, {{0, 2}, {4, 1}}), ParamScalar(3)));
}

TEST_CASE("U(nbar) product is associative with the vacuum as unit") {
  std::mt19937 rng(21);
  for (int s = 0; s < 40; ++s) {
    const unsigned n = 1 + s % 3;
    const PbwVector a = random_vector(rng, n), b = random_vector(rng, n), c = random_vector(rng, n);
    CHECK((a * b) * c == a * (b * c));
    CHECK(PbwVector::vacuum(n) * a == a);
    CHECK(a * PbwVector::vacuum(n) == a);
  }
}

TEST_CASE("closed-form symmetrization equals the average over orderings") {
  for (unsigned n = 1; n <= 2; ++n)
    for (unsigned a = 0; a <= 3; ++a)
      for (unsigned b = 0; b <= 3; ++b)
        for (unsigned c = 0; c <= 1; ++c) {
          if (a + b + c > 5) continue;
          PbwVector::Word w(2 * n + 1, 0);
          w[0] = a;
          w[n] = b;
          w[2 * n] = c;
          if (n == 2) w[1] = 1;
          CHECK(symmetrize(n, w) == symmetrize_by_permutations(n, w));
        }
}

TEST_CASE("degree and evaluation") {
  const unsigned n = 2;
  PbwVector v = PbwVector::word(n, word(n, {{0, 2}, {4, 1}}), ParamScalar::lambda1());
  CHECK(v.degree() == 3);
  CHECK(v.evaluate(Rational(2), Rational(0)) == PbwVector::word(n, word(n, {{0, 2}, {4, 1}}), ParamScalar(2)));
  CHECK(PbwVector(n).degree() < 0);
}
