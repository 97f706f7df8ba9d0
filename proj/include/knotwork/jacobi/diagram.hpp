#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "knotwork/error.hpp"

namespace knotwork::jacobi {

/// A uni-trivalent graph stored as half-edges. Half-edge h sits at vertex
/// owner[h] and is glued to mate[h]; rotation[v] lists the half-edges at v in
/// cyclic order (one entry for a univalent vertex, three for a trivalent one).
struct UniTrivalentGraph {
  std::vector<int> owner;
  std::vector<int> mate;
  std::vector<std::vector<int>> rotation;

  int num_vertices() const { return static_cast<int>(rotation.size()); }
  int num_half_edges() const { return static_cast<int>(owner.size()); }
  int num_edges() const { return num_half_edges() / 2; }

  int num_trivalent() const {
    int n = 0;
    for (const auto& r : rotation) n += r.size() == 3;
    return n;
  }
  int num_univalent() const { return num_vertices() - num_trivalent(); }

  bool is_univalent(int v) const { return rotation[v].size() == 1; }

  /// Builds a graph from an edge list; half-edges 2k and 2k+1 belong to edge k
  /// and the rotation at each vertex follows the order in which its
  /// half-edges appear.
  static UniTrivalentGraph from_edges(int vertices, const std::vector<std::pair<int, int>>& edges) {
    UniTrivalentGraph g;
    g.rotation.resize(vertices);
    for (const auto& [a, b] : edges) {
      if (a < 0 || b < 0 || a >= vertices || b >= vertices) throw PreconditionError("edge endpoint out of range");
      int h = g.num_half_edges();
      g.owner.push_back(a);
      g.owner.push_back(b);
      g.mate.push_back(h + 1);
      g.mate.push_back(h);
      g.rotation[a].push_back(h);
      g.rotation[b].push_back(h + 1);
    }
    return g;
  }

  /// Reverses the cyclic order at trivalent vertex v (one AS move).
  void reverse(int v) {
    auto& r = rotation.at(v);
    if (r.size() == 3) std::swap(r[1], r[2]);
  }

  bool has_tadpole() const {
    for (int h = 0; h < num_half_edges(); ++h)
      if (owner[h] == owner[mate[h]]) return true;
    return false;
  }

  bool connected() const {
    if (rotation.empty()) return false;
    std::vector<char> seen(rotation.size(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int h : rotation[v]) {
        int w = owner[mate[h]];
        if (!seen[w]) {
          seen[w] = 1;
          ++count;
          stack.push_back(w);
        }
      }
    }
    return count == num_vertices();
  }

  /// Checks the structural invariants; tadpoles are rejected unless allowed.
  void validate(bool allow_tadpoles = false) const {
    if (owner.size() != mate.size()) throw PreconditionError("half-edge arrays differ in size");
    std::vector<int> seen(owner.size(), 0);
    for (int v = 0; v < num_vertices(); ++v) {
      if (rotation[v].size() != 1 && rotation[v].size() != 3)
        throw PreconditionError("vertex " + std::to_string(v) + " has degree " + std::to_string(rotation[v].size()));
      for (int h : rotation[v]) {
        if (h < 0 || h >= num_half_edges() || owner[h] != v) throw PreconditionError("rotation lists a foreign half-edge");
        ++seen[h];
      }
    }
    for (int h = 0; h < num_half_edges(); ++h) {
      if (seen[h] != 1) throw PreconditionError("half-edge not in exactly one rotation");
      if (mate[h] == h || mate[mate[h]] != h) throw PreconditionError("mate is not a fixed-point-free involution");
    }
    if (!connected()) throw PreconditionError("diagram is not connected");
    if (num_univalent() == 0) throw PreconditionError("diagram has no univalent vertex");
    if (!allow_tadpoles && has_tadpole()) throw PreconditionError("diagram has a tadpole");
  }
};

/// Half the number of vertices.
inline int vassiliev_degree(const UniTrivalentGraph& g) { return g.num_vertices() / 2; }

/// First Betti number E - V + 1 (the graph is connected).
inline int first_betti(const UniTrivalentGraph& g) { return g.num_edges() - g.num_vertices() + 1; }

/// Vassiliev degree plus first Betti number; equals #trivalent + 1.
inline int grope_degree(const UniTrivalentGraph& g) { return vassiliev_degree(g) + first_betti(g); }

namespace diagrams {

inline UniTrivalentGraph strut() { return UniTrivalentGraph::from_edges(2, {{0, 1}}); }

/// One trivalent vertex (0) with three legs.
inline UniTrivalentGraph y() { return UniTrivalentGraph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}}); }

/// Two trivalent vertices joined by an edge, two legs on each.
inline UniTrivalentGraph h_tree() {
  return UniTrivalentGraph::from_edges(6, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}});
}

/// Two trivalent vertices joined by a double edge, one leg on each.
inline UniTrivalentGraph theta_with_legs() {
  return UniTrivalentGraph::from_edges(4, {{0, 1}, {0, 1}, {0, 2}, {1, 3}});
}

}  // namespace diagrams

}  // namespace knotwork::jacobi
