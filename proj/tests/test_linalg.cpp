#include <doctest.h>

#include <random>

#include "heisverma/linalg.hpp"

using namespace heisverma;

namespace {

Rational dot(const SparseVec& a, const SparseVec& b) {
  Rational s(0);
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].first == b[j].first) s += a[i++].second * b[j++].second;
    else if (a[i].first < b[j].first) ++i;
    else ++j;
  }
  return s;
}

}  // namespace

TEST_CASE("make_sparse merges and drops zeros") {
  const SparseVec v = make_sparse({{3, Rational(1)}, {1, Rational(2)}, {3, Rational(-1)}, {0, Rational(0)}});
  REQUIRE(v.size() == 1);
  CHECK(v[0].first == 1);
  CHECK(axpy(v, Rational(-1), v).empty());
}

TEST_CASE("rank-nullity and kernel membership on random matrices") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> val(-2, 2), dims(1, 7);
  for (int s = 0; s < 100; ++s) {
    const std::size_t rows = dims(rng), cols = dims(rng);
    std::vector<SparseVec> m;
    for (std::size_t r = 0; r < rows; ++r) {
      std::vector<std::pair<std::uint32_t, Rational>> e;
      for (std::uint32_t c = 0; c < cols; ++c) e.emplace_back(c, Rational(val(rng)));
      m.push_back(make_sparse(e));
    }
    const auto ker = nullspace(m, cols);
    CHECK(rank_of(m, cols) + ker.size() == cols);
    CHECK(rank_of(ker, cols) == ker.size());
    for (const auto& k : ker)
      for (const auto& row : m) CHECK(dot(k, row).is_zero());
  }
}

TEST_CASE("Echelon span queries") {
  Echelon e(3);
  CHECK(e.add(make_sparse({{0, Rational(1)}, {1, Rational(1)}})));
  CHECK_FALSE(e.add(make_sparse({{0, Rational(2)}, {1, Rational(2)}})));
  CHECK(e.contains(make_sparse({{0, Rational(-3)}, {1, Rational(-3)}})));
  CHECK_FALSE(e.contains(make_sparse({{2, Rational(1)}})));
  CHECK(e.rank() == 1);
  CHECK(e.nullspace().size() == 2);
}
