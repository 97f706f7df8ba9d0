#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "knotwork/jacobi/diagram.hpp"

namespace knotwork::jacobi {

/// The isomorphism-relevant skeleton of a diagram: trivalent vertices
/// 0..t-1 with their leg and loop counts, and edge multiplicities between
/// distinct trivalent vertices. Legs are interchangeable, so they are
/// recorded only as counts. t == 0 is the strut.
struct Core {
  int t = 0;
  int u = 0;
  std::vector<int> leaves, loops;
  std::vector<std::vector<int>> mult;

  static Core empty(int t) {
    Core c;
    c.t = t;
    c.leaves.assign(t, 0);
    c.loops.assign(t, 0);
    c.mult.assign(t, std::vector<int>(t, 0));
    return c;
  }

  int degree(int v) const {
    int d = leaves[v] + 2 * loops[v];
    for (int w = 0; w < t; ++w) d += mult[v][w];
    return d;
  }
};

struct CanonicalForm {
  std::string key;
  int sign = 1;
  /// True when the diagram has an orientation-reversing automorphism, so AS
  /// forces d = -d. The sign of such a diagram is still deterministic for a
  /// given input but carries no invariant meaning.
  bool vanishing = false;
};

namespace detail {

// Canonical colour refinement: a vertex's new colour is the rank of
// (old colour, sorted multiset of (neighbour colour, multiplicity)).
inline std::vector<int> refine(const Core& c, std::vector<int> color) {
  int classes = -1;
  while (true) {
    std::vector<std::vector<int>> sig(c.t);
    for (int v = 0; v < c.t; ++v) {
      std::vector<std::pair<int, int>> nb;
      for (int w = 0; w < c.t; ++w)
        if (w != v && c.mult[v][w] > 0) nb.emplace_back(color[w], c.mult[v][w]);
      std::sort(nb.begin(), nb.end());
      sig[v].push_back(color[v]);
      for (auto [a, b] : nb) {
        sig[v].push_back(a);
        sig[v].push_back(b);
      }
    }
    std::vector<std::vector<int>> distinct = sig;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (int v = 0; v < c.t; ++v)
      color[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), sig[v]) - distinct.begin());
    int now = static_cast<int>(distinct.size());
    if (now == classes) return color;
    classes = now;
  }
}

inline std::vector<int> code_of(const Core& c, const std::vector<int>& pos) {
  std::vector<int> inv(c.t);
  for (int v = 0; v < c.t; ++v) inv[pos[v]] = v;
  std::vector<int> code;
  code.reserve(2 * c.t + c.t * c.t / 2);
  for (int p = 0; p < c.t; ++p) {
    code.push_back(c.leaves[inv[p]]);
    code.push_back(c.loops[inv[p]]);
  }
  for (int p = 0; p < c.t; ++p)
    for (int q = p + 1; q < c.t; ++q) code.push_back(c.mult[inv[p]][inv[q]]);
  return code;
}

// Individualisation-refinement search. Collects every discrete labelling
// that attains the lexicographically least code.
inline void search(const Core& c, std::vector<int> color, std::vector<int>& best,
                   std::vector<std::vector<int>>& winners) {
  color = refine(c, std::move(color));
  std::vector<int> size(c.t, 0);
  for (int x : color) ++size[x];
  int target = -1;
  for (int k = 0; k < c.t; ++k)
    if (size[k] > 1) {
      target = k;
      break;
    }
  if (target < 0) {
    std::vector<int> code = code_of(c, color);
    if (winners.empty() || code < best) {
      best = std::move(code);
      winners.assign(1, color);
    } else if (code == best) {
      winners.push_back(color);
    }
    return;
  }
  for (int v = 0; v < c.t; ++v) {
    if (color[v] != target) continue;
    std::vector<int> next(c.t);
    for (int w = 0; w < c.t; ++w) next[w] = 2 * color[w] + (color[w] == target && w != v ? 1 : 0);
    search(c, std::move(next), best, winners);
  }
}

inline std::vector<std::vector<int>> minimal_labellings(const Core& c, std::vector<int>* best_code = nullptr) {
  std::vector<int> color(c.t);
  std::vector<std::pair<int, int>> init(c.t);
  for (int v = 0; v < c.t; ++v) init[v] = {c.leaves[v], c.loops[v]};
  std::vector<std::pair<int, int>> distinct = init;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  for (int v = 0; v < c.t; ++v)
    color[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), init[v]) - distinct.begin());
  std::vector<int> best;
  std::vector<std::vector<int>> winners;
  search(c, color, best, winners);
  if (best_code) *best_code = best;
  return winners;
}

inline std::string key_from_code(const Core& c, const std::vector<int>& code) {
  if (c.t == 0) return "t0u2|strut";
  std::string s = "t" + std::to_string(c.t) + "u" + std::to_string(c.u) + "|L";
  for (int p = 0; p < c.t; ++p) s += std::to_string(code[2 * p]);
  s += "|O";
  for (int p = 0; p < c.t; ++p) s += std::to_string(code[2 * p + 1]);
  s += "|E";
  std::size_t k = 2 * c.t;
  bool first = true;
  for (int p = 0; p < c.t; ++p)
    for (int q = p + 1; q < c.t; ++q, ++k)
      if (code[k] > 0) {
        if (!first) s += ",";
        first = false;
        s += std::to_string(p) + "-" + std::to_string(q);
        if (code[k] > 1) s += "x" + std::to_string(code[k]);
      }
  return s;
}

inline int permutation_parity3(const std::array<int, 3>& p) {
  int inv = (p[0] > p[1]) + (p[0] > p[2]) + (p[1] > p[2]);
  return inv % 2 == 0 ? 1 : -1;
}

}  // namespace detail

/// Core of a graph, plus the core index of every trivalent vertex (-1 for
/// univalent ones).
inline Core core_of(const UniTrivalentGraph& g, std::vector<int>* index = nullptr) {
  std::vector<int> idx(g.num_vertices(), -1);
  int t = 0;
  for (int v = 0; v < g.num_vertices(); ++v)
    if (!g.is_univalent(v)) idx[v] = t++;
  Core c = Core::empty(t);
  c.u = g.num_univalent();
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (idx[v] < 0) continue;
    for (int h : g.rotation[v]) {
      int w = g.owner[g.mate[h]];
      if (g.is_univalent(w))
        ++c.leaves[idx[v]];
      else if (w == v)
        ++c.loops[idx[v]];  // counted from both half-edges
      else
        ++c.mult[idx[v]][idx[w]];
    }
    c.loops[idx[v]] /= 2;
  }
  if (index) *index = std::move(idx);
  return c;
}

/// A graph realising the core; trivalent vertices keep their indices and
/// legs are appended after them.
inline UniTrivalentGraph core_graph(const Core& c) {
  if (c.t == 0) return diagrams::strut();
  std::vector<std::pair<int, int>> edges;
  int next = c.t;
  for (int v = 0; v < c.t; ++v) {
    for (int k = 0; k < c.loops[v]; ++k) edges.emplace_back(v, v);
    for (int w = v + 1; w < c.t; ++w)
      for (int k = 0; k < c.mult[v][w]; ++k) edges.emplace_back(v, w);
    for (int k = 0; k < c.leaves[v]; ++k) edges.emplace_back(v, next++);
  }
  return UniTrivalentGraph::from_edges(next, edges);
}

/// Isomorphism key of a core (orientation-blind).
inline std::string core_key(const Core& c) {
  if (c.t == 0) return detail::key_from_code(c, {});
  std::vector<int> code;
  detail::minimal_labellings(c, &code);
  return detail::key_from_code(c, code);
}

/// Canonical key and orientation sign. The sign compares the rotation at
/// each trivalent vertex with the order induced by the canonical labelling;
/// the product over vertices is the sign relating the input to the
/// canonical representative under AS.
inline CanonicalForm canonical_form(const UniTrivalentGraph& g) {
  g.validate(true);
  std::vector<int> idx;
  Core c = core_of(g, &idx);
  CanonicalForm out;
  if (c.t == 0) {
    out.key = core_key(c);
    return out;
  }
  std::vector<int> code;
  auto winners = detail::minimal_labellings(c, &code);
  out.key = detail::key_from_code(c, code);

  for (int v = 0; v < c.t; ++v)
    if (c.leaves[v] >= 2 || c.loops[v] >= 1) out.vanishing = true;

  auto sign_for = [&](const std::vector<int>& pos) {
    int sign = 1;
    for (int v = 0; v < g.num_vertices(); ++v) {
      if (idx[v] < 0) continue;
      const auto& rot = g.rotation[v];
      std::array<std::array<int, 3>, 3> label{};
      for (int k = 0; k < 3; ++k) {
        int h = rot[k];
        int w = g.owner[g.mate[h]];
        if (g.is_univalent(w))
          label[k] = {0, 0, h};
        else if (w == v)
          label[k] = {1, 0, h};
        else
          label[k] = {2, pos[idx[w]], std::min(h, g.mate[h])};
      }
      std::array<int, 3> order{0, 1, 2};
      std::sort(order.begin(), order.end(), [&](int a, int b) { return label[a] < label[b]; });
      std::array<int, 3> rank{};
      for (int k = 0; k < 3; ++k) rank[order[k]] = k;
      sign *= detail::permutation_parity3(rank);
    }
    return sign;
  };

  out.sign = sign_for(winners.front());
  for (std::size_t k = 1; k < winners.size() && !out.vanishing; ++k)
    if (sign_for(winners[k]) != out.sign) out.vanishing = true;
  return out;
}

}  // namespace knotwork::jacobi
