#pragma once

#include <map>
#include <string>
#include <vector>

#include "knotwork/algebra/sparse_rank.hpp"
#include "knotwork/jacobi/enumerate.hpp"

namespace knotwork::jacobi {

/// Grope degree encoded in a canonical key ("t<t>u<u>|...").
inline int key_grope_degree(const std::string& key) { return std::stoi(key.substr(1)) + 1; }

inline int key_vassiliev_degree(const std::string& key) {
  auto upos = key.find('u');
  int t = std::stoi(key.substr(1));
  int u = std::stoi(key.substr(upos + 1));
  return (t + u) / 2;
}

/// Element of the diagram space: canonical key -> rational coefficient,
/// tagged with the grope degree every term must carry.
struct DiagramVector {
  int degree = 0;
  std::map<std::string, Rational> terms;

  void add(const std::string& key, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = terms.emplace(key, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms.erase(it);
    }
  }

  bool empty() const { return terms.empty(); }

  /// Number of terms whose key disagrees with the degree tag.
  std::size_t degree_violations() const {
    std::size_t bad = 0;
    for (const auto& [k, c] : terms) bad += key_grope_degree(k) != degree;
    return bad;
  }
};

struct JacobiOptions {
  bool allow_tadpoles = false;
  /// Whether the strut counts as a generator in Vassiliev degree 1.
  bool include_strut = true;
  int grope_budget = 7;
  int vassiliev_budget = 4;
};

struct RelationMatrix {
  std::vector<std::string> columns;
  std::vector<DiagramVector> rows;
  std::size_t as_rows = 0;
  std::size_t ihx_rows = 0;

  std::vector<SparseRow> sparse() const {
    std::map<std::string, int> col;
    for (std::size_t k = 0; k < columns.size(); ++k) col.emplace(columns[k], static_cast<int>(k));
    std::vector<SparseRow> out;
    out.reserve(rows.size());
    for (const auto& r : rows) {
      std::map<int, Integer> e;
      for (const auto& [key, c] : r.terms) {
        auto it = col.find(key);
        if (it == col.end()) throw std::logic_error("relation term outside the column set: " + key);
        if (denom(c) != 1) throw std::logic_error("non-integral relation coefficient");
        e[it->second] = numer(c);
      }
      out.push_back(make_sparse_row(e));
    }
    return out;
  }
};

/// The three IHX terms at the internal edge through half-edge `ha`. With the
/// rotations read from the edge, a = (e, x, y) and b = (e, z, r), the terms
/// keep r at b and cycle which of x, y, z joins it; their sum vanishes.
inline std::array<UniTrivalentGraph, 3> ihx_terms(const UniTrivalentGraph& g, int ha) {
  int hb = g.mate[ha];
  int a = g.owner[ha], b = g.owner[hb];
  auto from = [&](int v, int h) {
    const auto& rot = g.rotation[v];
    int k = static_cast<int>(std::find(rot.begin(), rot.end(), h) - rot.begin());
    return std::array<int, 3>{rot[k], rot[(k + 1) % 3], rot[(k + 2) % 3]};
  };
  auto ra = from(a, ha), rb = from(b, hb);
  int x = ra[1], y = ra[2], z = rb[1], r = rb[2];
  auto rewire = [&](int p, int q, int join) {
    UniTrivalentGraph t = g;
    t.rotation[a] = {ha, p, q};
    t.rotation[b] = {hb, join, r};
    t.owner[p] = t.owner[q] = a;
    t.owner[join] = b;
    return t;
  };
  return {rewire(x, y, z), rewire(y, z, x), rewire(z, x, y)};
}

/// AS and IHX relations among the given diagrams (all of one grading).
/// AS contributes 2d for each diagram with an orientation-reversing
/// automorphism; IHX contributes one row per internal edge of each
/// representative. Terms with a tadpole are dropped unless tadpoles are
/// enabled, since AS makes them rationally zero.
inline RelationMatrix relation_matrix(const std::vector<Diagram>& ds, const JacobiOptions& opt = {}) {
  RelationMatrix m;
  for (const auto& d : ds) m.columns.push_back(d.key);
  for (const auto& d : ds) {
    CanonicalForm cf = canonical_form(d.graph);
    if (cf.vanishing) {
      DiagramVector v;
      v.degree = d.grope_degree();
      v.add(d.key, 2);
      m.rows.push_back(std::move(v));
      ++m.as_rows;
    }
  }
  for (const auto& d : ds) {
    const auto& g = d.graph;
    for (int h = 0; h < g.num_half_edges(); ++h) {
      int k = g.mate[h];
      if (h > k) continue;
      int a = g.owner[h], b = g.owner[k];
      if (a == b || g.is_univalent(a) || g.is_univalent(b)) continue;
      DiagramVector v;
      v.degree = d.grope_degree();
      for (const auto& term : ihx_terms(g, h)) {
        if (!opt.allow_tadpoles && term.has_tadpole()) continue;
        CanonicalForm c = canonical_form(term);
        v.add(c.key, c.sign);
      }
      if (!v.empty()) {
        m.rows.push_back(std::move(v));
        ++m.ihx_rows;
      }
    }
  }
  return m;
}

inline RelationMatrix relation_matrix(int i, const JacobiOptions& opt = {}) {
  if (i < 2) return {};
  return relation_matrix(enumerate_diagrams(i, {opt.allow_tadpoles}), opt);
}

struct DimensionRow {
  std::string grading;
  int degree = 0;
  std::size_t num_diagrams = 0;
  std::size_t num_relations = 0;
  std::size_t dimension = 0;
};

inline DimensionRow dimension_of(const std::vector<Diagram>& ds, const JacobiOptions& opt) {
  RelationMatrix m = relation_matrix(ds, opt);
  DimensionRow row;
  row.num_diagrams = ds.size();
  row.num_relations = m.rows.size();
  row.dimension = ds.size() - sparse_rank(m.sparse());
  return row;
}

inline DimensionRow dim_Bg_row(int i, const JacobiOptions& opt = {}) {
  if (i < 2) throw PreconditionError("below grading range");
  if (i > opt.grope_budget)
    throw BudgetError("grope degree " + std::to_string(i) + " exceeds budget " + std::to_string(opt.grope_budget));
  DimensionRow row = dimension_of(enumerate_diagrams(i, {opt.allow_tadpoles}), opt);
  row.grading = "grope";
  row.degree = i;
  return row;
}

/// Rational dimension of the grope-degree-i part.
inline std::size_t dim_Bg(int i, const JacobiOptions& opt = {}) { return dim_Bg_row(i, opt).dimension; }

/// Diagrams of Vassiliev degree n: t trivalent and u = 2n - t legs with
/// 1 <= u <= t + 2. Relations never mix different t, so the blocks are
/// handled separately.
inline DimensionRow dim_B_by_vassiliev_row(int n, const JacobiOptions& opt = {}) {
  if (n < 0) throw PreconditionError("negative Vassiliev degree");
  if (n > opt.vassiliev_budget)
    throw BudgetError("Vassiliev degree " + std::to_string(n) + " exceeds budget " +
                      std::to_string(opt.vassiliev_budget));
  DimensionRow total;
  total.grading = "vassiliev";
  total.degree = n;
  if (n == 0) return total;
  auto levels = enumerate_cores(2 * n - 1);
  for (int t = n - 1; t <= 2 * n - 1; ++t) {
    std::vector<Diagram> block;
    for (auto& d : diagrams_with_trivalent(levels[t], {opt.allow_tadpoles}))
      if (d.univalent() == 2 * n - t) block.push_back(std::move(d));
    if (t == 0 && !opt.include_strut) block.clear();
    if (block.empty()) continue;
    DimensionRow r = dimension_of(block, opt);
    total.num_diagrams += r.num_diagrams;
    total.num_relations += r.num_relations;
    total.dimension += r.dimension;
  }
  return total;
}

inline std::size_t dim_B_by_vassiliev(int n, const JacobiOptions& opt = {}) {
  return dim_B_by_vassiliev_row(n, opt).dimension;
}

}  // namespace knotwork::jacobi
