#pragma once

#include <map>
#include <string>
#include <vector>

#include "knotwork/jacobi/canonical.hpp"

namespace knotwork::jacobi {

/// One isomorphism class of diagrams with a representative graph.
struct Diagram {
  std::string key;
  Core core;
  UniTrivalentGraph graph;

  int trivalent() const { return core.t; }
  int univalent() const { return core.u; }
  int grope_degree() const { return core.t + 1; }
  int vassiliev_degree() const { return (core.t + core.u) / 2; }
  bool has_tadpole() const {
    for (int x : core.loops)
      if (x > 0) return true;
    return false;
  }
};

struct EnumerationOptions {
  bool allow_tadpoles = false;
};

namespace detail {

inline bool core_connected(const Core& c) {
  if (c.t == 0) return true;
  std::vector<char> seen(c.t, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int n = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w = 0; w < c.t; ++w)
      if (c.mult[v][w] > 0 && !seen[w]) {
        seen[w] = 1;
        ++n;
        stack.push_back(w);
      }
  }
  return n == c.t;
}

// Connected closed cubic multigraphs (loops allowed) on t vertices, one per
// isomorphism class.
inline void closed_cubic(int t, std::map<std::string, Core>& out) {
  if (t <= 0 || t % 2) return;
  Core c = Core::empty(t);
  std::vector<std::pair<int, int>> slots;  // (v, v) means a loop at v
  for (int v = 0; v < t; ++v)
    for (int w = v; w < t; ++w) slots.emplace_back(v, w);
  std::vector<int> deg(t, 0);
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == slots.size()) {
      for (int v = 0; v < t; ++v)
        if (deg[v] != 3) return;
      if (core_connected(c)) out.emplace(core_key(c), c);
      return;
    }
    auto [v, w] = slots[k];
    // vertex v gets no further slots after its last pair (v, t-1)
    for (int m = 0;; ++m) {
      int dv = v == w ? 2 * m : m;
      int dw = v == w ? 0 : m;
      if (deg[v] + dv > 3 || deg[w] + dw > 3) break;
      if (w == t - 1 && deg[v] + dv != 3) continue;
      deg[v] += dv;
      deg[w] += dw;
      if (v == w)
        c.loops[v] = m;
      else
        c.mult[v][w] = c.mult[w][v] = m;
      self(self, k + 1);
      deg[v] -= dv;
      deg[w] -= dw;
    }
    if (v == w)
      c.loops[v] = 0;
    else
      c.mult[v][w] = c.mult[w][v] = 0;
  };
  rec(rec, 0);
}

inline Core grow(const Core& c) {
  Core d = Core::empty(c.t + 1);
  d.u = c.u;
  for (int v = 0; v < c.t; ++v) {
    d.leaves[v] = c.leaves[v];
    d.loops[v] = c.loops[v];
    for (int w = 0; w < c.t; ++w) d.mult[v][w] = c.mult[v][w];
  }
  return d;
}

// Every way of subdividing one edge of c by a new trivalent vertex carrying
// a new leg.
inline std::vector<Core> insert_leg(const Core& c) {
  std::vector<Core> out;
  int n = c.t;
  if (c.t == 0) {  // the strut becomes the Y
    Core y = Core::empty(1);
    y.u = 3;
    y.leaves[0] = 3;
    out.push_back(y);
    return out;
  }
  for (int v = 0; v < c.t; ++v) {
    if (c.leaves[v] > 0) {
      Core d = grow(c);
      --d.leaves[v];
      d.mult[v][n] = d.mult[n][v] = 1;
      d.leaves[n] = 2;
      d.u = c.u + 1;
      out.push_back(d);
    }
    if (c.loops[v] > 0) {
      Core d = grow(c);
      --d.loops[v];
      d.mult[v][n] = d.mult[n][v] = 2;
      d.leaves[n] = 1;
      d.u = c.u + 1;
      out.push_back(d);
    }
    for (int w = v + 1; w < c.t; ++w) {
      if (c.mult[v][w] == 0) continue;
      Core d = grow(c);
      --d.mult[v][w];
      --d.mult[w][v];
      d.mult[v][n] = d.mult[n][v] = 1;
      d.mult[w][n] = d.mult[n][w] = 1;
      d.leaves[n] = 1;
      d.u = c.u + 1;
      out.push_back(d);
    }
  }
  return out;
}

}  // namespace detail

/// All connected cores with 0..t_max trivalent vertices, including closed
/// ones and ones with loops, indexed by trivalent count. Removing a leg and
/// smoothing its vertex always leads back to a strut, a circle with one leg
/// or a closed cubic graph, so growing those seeds by leg insertion reaches
/// every class.
inline std::vector<std::map<std::string, Core>> enumerate_cores(int t_max) {
  std::vector<std::map<std::string, Core>> level(t_max + 1);
  {
    Core s = Core::empty(0);
    s.u = 2;
    level[0].emplace(core_key(s), s);
  }
  if (t_max >= 1) {
    Core tad = Core::empty(1);
    tad.u = 1;
    tad.leaves[0] = 1;
    tad.loops[0] = 1;
    level[1].emplace(core_key(tad), tad);
  }
  for (int t = 1; t <= t_max; ++t) {
    detail::closed_cubic(t, level[t]);
    for (const auto& [key, c] : level[t - 1])
      for (Core& d : detail::insert_leg(c)) {
        std::string k = core_key(d);
        level[t].emplace(std::move(k), std::move(d));
      }
  }
  return level;
}

inline Diagram make_diagram(const std::string& key, const Core& c) { return Diagram{key, c, core_graph(c)}; }

/// Diagrams with t trivalent vertices and at least one leg, sorted by key.
inline std::vector<Diagram> diagrams_with_trivalent(const std::map<std::string, Core>& level,
                                                    const EnumerationOptions& opt) {
  std::vector<Diagram> out;
  for (const auto& [key, c] : level) {
    if (c.u == 0) continue;
    Diagram d = make_diagram(key, c);
    if (!opt.allow_tadpoles && d.has_tadpole()) continue;
    out.push_back(std::move(d));
  }
  return out;
}

/// Canonical representatives of grope degree i (= trivalent count + 1).
inline std::vector<Diagram> enumerate_diagrams(int i, const EnumerationOptions& opt = {}) {
  if (i < 2) throw PreconditionError("below grading range");
  auto levels = enumerate_cores(i - 1);
  return diagrams_with_trivalent(levels[i - 1], opt);
}

/// One line per diagram: key, then edges "a-b" in half-edge order, then
/// the rotation at every trivalent vertex.
inline std::string dump(const Diagram& d) {
  const auto& g = d.graph;
  std::string s = d.key + "  edges:";
  for (int h = 0; h < g.num_half_edges(); h += 2)
    s += " " + std::to_string(g.owner[h]) + "-" + std::to_string(g.owner[h + 1]);
  s += "  rot:";
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (g.is_univalent(v)) continue;
    s += " " + std::to_string(v) + "(";
    for (int k = 0; k < 3; ++k) s += (k ? "," : "") + std::to_string(g.rotation[v][k]);
    s += ")";
  }
  return s;
}

}  // namespace knotwork::jacobi
