#pragma once

#include <map>
#include <utility>
#include <vector>

#include "knotwork/algebra/numeric.hpp"

namespace knotwork {

/// Sparse integer row: (column, nonzero coefficient), columns increasing.
using SparseRow = std::vector<std::pair<int, Integer>>;

inline SparseRow make_sparse_row(const std::map<int, Integer>& entries) {
  SparseRow r;
  for (const auto& [c, v] : entries)
    if (v != 0) r.emplace_back(c, v);
  return r;
}

namespace detail {

// a*x + b*y, dropping zeros.
inline SparseRow combine(const SparseRow& x, const Integer& a, const SparseRow& y, const Integer& b) {
  SparseRow out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.emplace_back(x[i].first, a * x[i].second);
      ++i;
    } else if (i == x.size() || y[j].first < x[i].first) {
      out.emplace_back(y[j].first, b * y[j].second);
      ++j;
    } else {
      Integer v = a * x[i].second + b * y[j].second;
      if (v != 0) out.emplace_back(x[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

inline void make_primitive(SparseRow& r) {
  if (r.empty()) return;
  Integer g = 0;
  for (const auto& [c, v] : r) {
    g = gcd_int(g, v);
    if (g == 1) break;
  }
  if (r.front().second < 0) g = -g;
  if (g != 1)
    for (auto& [c, v] : r) v /= g;
}

}  // namespace detail

/// Row echelon form over the integers, built one row at a time. Each row is
/// reduced against the stored pivots by cross-multiplication and kept
/// primitive, so entries stay small on the sparse, mostly +-1 inputs this is
/// used for. The rank is the rank over the rationals.
class SparseEchelon {
 public:
  /// Returns true when the row was independent of the rows seen so far.
  bool insert(SparseRow r) {
    detail::make_primitive(r);
    while (!r.empty()) {
      auto it = pivots_.find(r.front().first);
      if (it == pivots_.end()) {
        pivots_.emplace(r.front().first, std::move(r));
        return true;
      }
      const SparseRow& p = it->second;
      Integer g = gcd_int(p.front().second, r.front().second);
      Integer a = p.front().second / g, b = r.front().second / g;
      r = detail::combine(r, a, p, -b);
      detail::make_primitive(r);
    }
    return false;
  }

  std::size_t rank() const { return pivots_.size(); }

 private:
  std::map<int, SparseRow> pivots_;
};

inline std::size_t sparse_rank(const std::vector<SparseRow>& rows) {
  SparseEchelon e;
  for (const auto& r : rows) e.insert(r);
  return e.rank();
}

}  // namespace knotwork
