#include "heisverma/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace heisverma {

SparseVec make_sparse(std::vector<std::pair<std::uint32_t, Rational>> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVec out;
  out.reserve(entries.size());
  for (auto& [col, val] : entries) {
    if (!out.empty() && out.back().first == col) {
      out.back().second += val;
      if (out.back().second.is_zero()) out.pop_back();
    } else if (!val.is_zero()) {
      out.emplace_back(col, std::move(val));
    }
  }
  return out;
}

SparseVec axpy(const SparseVec& a, const Rational& s, const SparseVec& b) {
  if (s.is_zero()) return a;
  SparseVec out;
  out.reserve(a.size() + b.size());
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
      out.push_back(*ia++);
    } else if (ia == a.end() || ib->first < ia->first) {
      out.emplace_back(ib->first, s * ib->second);
      ++ib;
    } else {
      Rational v = ia->second + s * ib->second;
      if (!v.is_zero()) out.emplace_back(ia->first, std::move(v));
      ++ia;
      ++ib;
    }
  }
  return out;
}

bool Echelon::add(const SparseVec& v) {
  for (const auto& [col, val] : v)
    if (col >= ncols_) throw std::out_of_range("Echelon::add: column out of range");
  // Only the leading entry needs to be a non-pivot column for echelon form.
  SparseVec r = v;
  while (!r.empty()) {
    auto it = pivots_.find(r.front().first);
    if (it == pivots_.end()) break;
    r = axpy(r, -r.front().second, it->second);
  }
  if (r.empty()) return false;
  const Rational inv = r.front().second.inverse();
  for (auto& e : r) e.second *= inv;
  pivots_.emplace(r.front().first, std::move(r));
  return true;
}

bool Echelon::contains(const SparseVec& v) const {
  SparseVec r = v;
  while (!r.empty()) {
    auto it = pivots_.find(r.front().first);
    if (it == pivots_.end()) return false;
    r = axpy(r, -r.front().second, it->second);
  }
  return true;
}

std::vector<SparseVec> Echelon::nullspace() const {
  // Back-substitute to reduced row-echelon form, highest pivot first.
  std::map<std::uint32_t, SparseVec> rref;
  for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
    SparseVec row = it->second;
    for (std::size_t k = 1; k < row.size();) {
      auto p = rref.find(row[k].first);
      if (p == rref.end()) {
        ++k;
        continue;
      }
      row = axpy(row, -row[k].second, p->second);
      // the eliminated entry is gone; entries before k are untouched
    }
    rref.emplace(it->first, std::move(row));
  }

  // Transpose: for each free column f, collect the pivots whose row mentions f.
  std::map<std::uint32_t, std::vector<std::pair<std::uint32_t, Rational>>> by_free;
  for (const auto& [pc, row] : rref)
    for (std::size_t k = 1; k < row.size(); ++k) by_free[row[k].first].emplace_back(pc, -row[k].second);

  std::vector<SparseVec> out;
  for (std::uint32_t f = 0; f < ncols_; ++f) {
    if (pivots_.count(f)) continue;
    std::vector<std::pair<std::uint32_t, Rational>> entries{{f, Rational(1)}};
    auto it = by_free.find(f);
    if (it != by_free.end()) entries.insert(entries.end(), it->second.begin(), it->second.end());
    out.push_back(make_sparse(std::move(entries)));
  }
  return out;
}

std::vector<SparseVec> nullspace(const std::vector<SparseVec>& rows, std::size_t ncols) {
  Echelon e(ncols);
  for (const auto& r : rows) e.add(r);
  return e.nullspace();
}

std::size_t rank_of(const std::vector<SparseVec>& rows, std::size_t ncols) {
  Echelon e(ncols);
  for (const auto& r : rows) e.add(r);
  return e.rank();
}

}  // namespace heisverma
