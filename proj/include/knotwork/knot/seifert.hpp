#pragma once

#include <cstdint>
#include <cstdlib>
#include <string>
#include <vector>

#include "knotwork/algebra/linalg.hpp"
#include "knotwork/knot/braid.hpp"

namespace knotwork {

/// Seifert matrix of a knot: 2g x 2g integer matrix V with det(V - V^T) = 1.
class SeifertMatrix {
 public:
  using Rows = std::vector<std::vector<std::int64_t>>;

  SeifertMatrix() = default;

  /// Validates shape and unimodularity of V - V^T.
  explicit SeifertMatrix(Rows rows) : v_(std::move(rows)) {
    for (const auto& r : v_)
      if (r.size() != v_.size()) throw PreconditionError("Seifert matrix is not square");
    if (v_.size() % 2 != 0) throw PreconditionError("Seifert matrix has odd size");
    if (intersection_determinant() != 1) throw PreconditionError("det(V - V^T) != 1");
  }

  std::size_t size() const { return v_.size(); }
  int genus() const { return static_cast<int>(v_.size() / 2); }
  const Rows& rows() const { return v_; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return v_[i][j]; }

  Integer intersection_determinant() const {
    IntegerMatrix a(v_.size(), std::vector<Integer>(v_.size()));
    for (std::size_t i = 0; i < v_.size(); ++i)
      for (std::size_t j = 0; j < v_.size(); ++j) a[i][j] = v_[i][j] - v_[j][i];
    return determinant(a);
  }

  friend bool operator==(const SeifertMatrix&, const SeifertMatrix&) = default;

 private:
  Rows v_;
};

/// Block-diagonal sum.
inline SeifertMatrix connected_sum(const SeifertMatrix& a, const SeifertMatrix& b) {
  std::size_t n = a.size(), m = b.size();
  SeifertMatrix::Rows r(n + m, std::vector<std::int64_t>(n + m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r[i][j] = a(i, j);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) r[n + i][n + j] = b(i, j);
  return SeifertMatrix(std::move(r));
}

/// Mirror image: -V^T.
inline SeifertMatrix mirror(const SeifertMatrix& a) {
  SeifertMatrix::Rows r(a.size(), std::vector<std::int64_t>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) r[i][j] = -a(j, i);
  return SeifertMatrix(std::move(r));
}

/// Seifert matrix of a braid closure via Seifert's algorithm: the Seifert
/// circles are the strands, each letter is a half-twisted band. For each
/// generator, consecutive occurrences bound one basis loop; loops are ordered
/// by generator index and then by position.
inline SeifertMatrix seifert_matrix_from_braid(const BraidWord& b) {
  b.validate();
  if (!closure_is_knot(b)) throw PreconditionError("closure is a link");
  std::vector<int> seen(b.strands, 0);
  for (int e : b.letters) seen[std::abs(e)] = 1;
  for (int i = 1; i < b.strands; ++i)
    if (!seen[i]) throw PreconditionError("disconnected Seifert surface (generator " + std::to_string(i) + " unused)");

  struct Loop {
    int gen;
    std::size_t from, to;  // positions of the two bounding bands
  };
  std::vector<Loop> loops;
  for (int i = 1; i < b.strands; ++i) {
    std::size_t prev = b.letters.size();
    for (std::size_t k = 0; k < b.letters.size(); ++k) {
      if (std::abs(b.letters[k]) != i) continue;
      if (prev != b.letters.size()) loops.push_back({i, prev, k});
      prev = k;
    }
  }
  const auto& w = b.letters;
  std::size_t n = loops.size();
  SeifertMatrix::Rows v(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t x = 0; x < n; ++x) {
    const Loop& lx = loops[x];
    bool pos_a = w[lx.from] > 0, pos_b = w[lx.to] > 0;
    v[x][x] = (pos_a && pos_b) ? -1 : ((!pos_a && !pos_b) ? 1 : 0);
    for (std::size_t y = 0; y < n; ++y) {
      const Loop& ly = loops[y];
      if (ly.gen == lx.gen && ly.from == lx.to) {
        // consecutive loops sharing the band at lx.to
        if (w[lx.to] > 0)
          v[x][y] = 1;
        else
          v[y][x] = -1;
      } else if (ly.gen == lx.gen + 1) {
        // loops on neighbouring generators meet on the shared Seifert circle
        if (lx.from < ly.from && ly.from < lx.to && lx.to < ly.to)
          v[x][y] = 1;
        else if (ly.from < lx.from && lx.from < ly.to && ly.to < lx.to)
          v[x][y] = -1;
      }
    }
  }
  return SeifertMatrix(std::move(v));
}

}  // namespace knotwork
