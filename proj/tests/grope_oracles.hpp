#pragma once

// Reference constructions for the grope and Magnus checks: bracket shapes,
// Hall basic commutators, and brackets read as Lie polynomials.

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "knotwork/grope/magnus.hpp"

namespace oracle {

using knotwork::grope::Bracket;

// Noncommutative polynomial: word (0-based letters) -> coefficient.
using NcPoly = std::map<std::vector<int>, long long>;

inline NcPoly nc_mul(const NcPoly& a, const NcPoly& b) {
  NcPoly out;
  for (const auto& [u, x] : a)
    for (const auto& [v, y] : b) {
      std::vector<int> w = u;
      w.insert(w.end(), v.begin(), v.end());
      out[w] += x * y;
    }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

inline NcPoly nc_sub(NcPoly a, const NcPoly& b) {
  for (const auto& [w, c] : b) a[w] -= c;
  std::erase_if(a, [](const auto& kv) { return kv.second == 0; });
  return a;
}

// The bracket read in the free Lie algebra: [u, v] = uv - vu.
inline NcPoly lie_polynomial(const Bracket& b, const std::string& alphabet) {
  if (b.is_generator()) return {{{static_cast<int>(alphabet.find(b.name()))}, 1}};
  NcPoly l = lie_polynomial(b.left(), alphabet), r = lie_polynomial(b.right(), alphabet);
  return nc_sub(nc_mul(l, r), nc_mul(r, l));
}

inline Bracket gen(int k) { return Bracket::generator(static_cast<char>('a' + k)); }

// Binary tree shapes with n leaves, each encoded as the left subtree sizes in
// preorder.
inline std::vector<std::vector<int>> bracket_shapes(int n) {
  if (n == 1) return {{}};
  std::vector<std::vector<int>> out;
  for (int l = 1; l < n; ++l)
    for (const auto& a : bracket_shapes(l))
      for (const auto& b : bracket_shapes(n - l)) {
        std::vector<int> s{l};
        s.insert(s.end(), a.begin(), a.end());
        s.insert(s.end(), b.begin(), b.end());
        out.push_back(std::move(s));
      }
  return out;
}

// Fills the shape's leaves left to right with generators labels[0], labels[1], ...
inline Bracket build_bracket(const std::vector<int>& shape, const std::vector<int>& labels) {
  std::size_t pos = 0, leaf = 0;
  std::function<Bracket(int)> go = [&](int m) -> Bracket {
    if (m == 1) return gen(labels[leaf++]);
    int l = shape[pos++];
    Bracket left = go(l);
    Bracket right = go(m - l);
    return Bracket::commutator(std::move(left), std::move(right));
  };
  return go(static_cast<int>(labels.size()));
}

// Every bracket of weight 2..max_w over `rank` generators; returns the count.
inline long long for_each_bracket(int rank, int max_w, const std::function<void(const Bracket&)>& f) {
  long long n_seen = 0;
  for (int n = 2; n <= max_w; ++n)
    for (const auto& shape : bracket_shapes(n)) {
      std::vector<int> labels(n, 0);
      while (true) {
        f(build_bracket(shape, labels));
        ++n_seen;
        int k = 0;
        while (k < n && labels[k] == rank - 1) labels[k++] = 0;
        if (k == n) break;
        ++labels[k];
      }
    }
  return n_seen;
}

// Marshall Hall basic commutators on `rank` generators up to weight max_w,
// ordered by weight and then by construction.
inline std::vector<Bracket> hall_basis(int rank, int max_w) {
  std::vector<Bracket> basic;
  std::vector<int> w;
  for (int k = 0; k < rank; ++k) {
    basic.push_back(gen(k));
    w.push_back(1);
  }
  auto index_of = [&](const Bracket& b) {
    for (std::size_t i = 0; i < basic.size(); ++i)
      if (basic[i] == b) return static_cast<int>(i);
    return -1;
  };
  for (int target = 2; target <= max_w; ++target) {
    std::size_t n = basic.size();
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = 0; v < u; ++v) {
        if (w[u] + w[v] != target) continue;
        const Bracket& bu = basic[u];
        if (!bu.is_generator() && index_of(bu.right()) > static_cast<int>(v)) continue;
        basic.push_back(Bracket::commutator(bu, basic[v]));
        w.push_back(target);
      }
  }
  return basic;
}

// Number of basic commutators of weight n on r generators.
inline long long witt(int r, int n) {
  auto mobius = [](int k) {
    int m = 1;
    for (int p = 2; p * p <= k; ++p)
      if (k % p == 0) {
        k /= p;
        if (k % p == 0) return 0;
        m = -m;
      }
    return k > 1 ? -m : m;
  };
  long long s = 0;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) {
      long long p = 1;
      for (int j = 0; j < n / d; ++j) p *= r;
      s += mobius(d) * p;
    }
  return s / n;
}

// Weight-w part of the Magnus expansion equals the Lie polynomial and
// nothing lower survives.
inline bool magnus_matches_lie(const Bracket& b, const std::string& alphabet, int cutoff = 8) {
  using namespace knotwork::grope;
  int w = weight(b);
  MagnusSeries s = magnus_expansion(bracket_word(b, alphabet), cutoff);
  for (int d = 1; d < w; ++d)
    if (!s.homogeneous_part(d).empty()) return false;
  NcPoly got;
  for (const auto& [word, c] : s.homogeneous_part(w)) got[word] = static_cast<long long>(c);
  NcPoly lie = lie_polynomial(b, alphabet);
  return !lie.empty() && got == lie;
}

}  // namespace oracle
