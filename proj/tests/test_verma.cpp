#include <doctest.h>

#include <random>

#include "heisverma/verma.hpp"

using namespace heisverma;

namespace {

PbwVector random_vector(std::mt19937& rng, unsigned n, int max_len) {
  std::uniform_int_distribution<int> letter(0, int(2 * n)), len(0, max_len), num(-4, 4);
  PbwVector v(n);
  for (int k = 0; k < 3; ++k) {
    PbwVector::Word w(2 * n + 1, 0);
    for (int j = len(rng); j > 0; --j) ++w[letter(rng)];
    v.add_term(w, ParamScalar(num(rng)));
  }
  return v;
}

}  // namespace

TEST_CASE("vacuum is a highest weight vector") {
  const unsigned n = 3;
  const Character lam = Character::generic(n);
  const VermaModule M(lam);
  const PbwVector v = PbwVector::vacuum(n);
  for (unsigned i = 1; i <= n; ++i) {
    CHECK(M.act(LieBasisElement::D(i), v).is_zero());
    CHECK(M.act(LieBasisElement::E(i), v).is_zero());
  }
  CHECK(M.act(LieBasisElement::A(), v).is_zero());
  CHECK(M.act(LieBasisElement::H1(), v) == v * lam.pairing(LieElement(n, LieBasisElement::H1())));
  CHECK(M.is_singular(v, 0));
  CHECK_FALSE(M.is_singular(PbwVector::letter(n, LieBasisElement::F(1)), 0));
}

TEST_CASE("letters of the nilpotent part act by left multiplication") {
  std::mt19937 rng(5);
  const unsigned n = 2;
  const VermaModule M(Character::generic(n));
  for (int s = 0; s < 20; ++s) {
    const PbwVector v = random_vector(rng, n, 3);
    for (const auto& x : {LieBasisElement::F(1), LieBasisElement::G(2), LieBasisElement::C()})
      CHECK(M.act(x, v) == PbwVector::letter(n, x) * v);
  }
}

TEST_CASE("action axiom on random vectors") {
  std::mt19937 rng(6);
  const unsigned n = 2;
  const VermaModule M(Character::generic(n));
  const auto& basis = canonical_basis(n);
  for (int s = 0; s < 5; ++s) {
    const PbwVector v = random_vector(rng, n, 2);
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = 0; j < basis.size(); ++j) {
        const LieElement x(n, basis[i]), y(n, basis[j]);
        CHECK(M.act(i, M.act(j, v)) - M.act(j, M.act(i, v)) == M.act(bracket(x, y), v));
      }
  }
}

TEST_CASE("singularity depends on lambda") {
  const Character good{3, ParamScalar(-1), ParamScalar(-2)};
  const Character bad{3, ParamScalar(0), ParamScalar(0)};
  CHECK(VermaModule(good).is_singular(example_r0_quadratic(good), 0));
  CHECK_FALSE(VermaModule(bad).is_singular(example_r0_quadratic(bad), 0));
  // f_1 g_n v is singular at lambda = 0
  CHECK(VermaModule(bad).is_singular(example_r0_mixed(3), 0));
}

TEST_CASE("example catalogue entries are singular") {
  for (const auto& ex : example_catalog(3, 4, 1)) {
    INFO(ex.name);
    CHECK(VermaModule(ex.lambda).is_singular(ex.vector, ex.r));
  }
}

TEST_CASE("module action agrees with the operator realization") {
  std::mt19937 rng(9);
  for (unsigned n : {1u, 2u, 3u}) {
    const VermaModule M(Character::generic(n));
    for (int s = 0; s < 8; ++s) CHECK(M.crosscheck_phi(random_vector(rng, n, 3)));
  }
}
