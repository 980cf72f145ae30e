#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "heisverma/rational.hpp"

namespace heisverma {

/// Sparse vector over Q: (column, value) pairs, strictly increasing columns, no zeros.
using SparseVec = std::vector<std::pair<std::uint32_t, Rational>>;

/// Builds a SparseVec from unsorted entries, merging duplicates and dropping zeros.
SparseVec make_sparse(std::vector<std::pair<std::uint32_t, Rational>> entries);

/// Returns a + s*b.
SparseVec axpy(const SparseVec& a, const Rational& s, const SparseVec& b);

/// Incrementally maintained row-echelon form of a set of vectors in Q^ncols.
/// Adding a vector reduces it against the stored pivots; the span, its rank
/// and the nullspace of the stacked matrix are then available exactly.
class Echelon {
 public:
  explicit Echelon(std::size_t ncols) : ncols_(ncols) {}

  std::size_t ncols() const { return ncols_; }
  std::size_t rank() const { return pivots_.size(); }

  /// Adds a vector; returns true when it enlarged the span.
  bool add(const SparseVec& v);
  /// True when v lies in the current span.
  bool contains(const SparseVec& v) const;
  /// Basis of {x : r.x = 0 for every added row r}, one vector per free column,
  /// with a 1 in that free column.
  std::vector<SparseVec> nullspace() const;

 private:
  std::size_t ncols_;
  // pivot column -> row whose leading entry is 1 at that column
  std::map<std::uint32_t, SparseVec> pivots_;
};

/// Exact nullspace of the matrix whose rows are given.
std::vector<SparseVec> nullspace(const std::vector<SparseVec>& rows, std::size_t ncols);

/// Rank of a set of vectors.
std::size_t rank_of(const std::vector<SparseVec>& rows, std::size_t ncols);

}  // namespace heisverma
