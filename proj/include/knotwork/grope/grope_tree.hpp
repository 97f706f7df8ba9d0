#pragma once

#include <algorithm>
#include <cmath>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "knotwork/error.hpp"

namespace knotwork::grope {

struct GropeTree;

/// A slot of a dual pair: either bare (no stage attached) or a sub-grope.
struct Slot {
  std::shared_ptr<const GropeTree> child;

  static Slot bare() { return {}; }
  static Slot of(GropeTree t);
  bool is_bare() const { return child == nullptr; }
};

/// One surface stage of genus pairs.size() and the stages attached to its
/// symplectic basis curves.
struct GropeTree {
  std::vector<std::pair<Slot, Slot>> pairs;

  int genus() const { return static_cast<int>(pairs.size()); }

  static GropeTree surface(int genus) {
    if (genus < 1) throw PreconditionError("genus must be at least 1");
    GropeTree t;
    t.pairs.assign(genus, {Slot::bare(), Slot::bare()});
    return t;
  }

  void validate() const {
    if (pairs.empty()) throw PreconditionError("grope stage with genus 0");
    for (const auto& [a, b] : pairs) {
      if (!a.is_bare()) a.child->validate();
      if (!b.is_bare()) b.child->validate();
    }
  }
};

inline Slot Slot::of(GropeTree t) { return {std::make_shared<const GropeTree>(std::move(t))}; }

/// Heights are half-integers; this stores twice the height.
struct Height {
  int halves = 0;

  static Height from_double(double h) {
    double twice = 2 * h;
    if (std::floor(twice) != twice || twice < 2 || twice > 1e6)
      throw PreconditionError("height must be a half-integer >= 1");
    return {static_cast<int>(twice)};
  }

  bool integral() const { return halves % 2 == 0; }
  double value() const { return halves / 2.0; }
  std::string str() const { return integral() ? std::to_string(halves / 2) : std::to_string(halves / 2) + ".5"; }

  friend bool operator==(Height a, Height b) { return a.halves == b.halves; }
};

inline constexpr const char* kHalfHeightConvention =
    "height m+0.5: one slot of each dual pair carries height m, its dual carries height m-1 (height 0 = bare)";

inline long long slot_class(const Slot& s);

/// Class: a bare slot counts 1, an attached grope counts its class, and a
/// stage takes the minimum over its dual pairs of the two slot values.
inline long long class_of(const GropeTree& t) {
  long long best = -1;
  for (const auto& [a, b] : t.pairs) {
    long long c = slot_class(a) + slot_class(b);
    if (best < 0 || c < best) best = c;
  }
  return best;
}

inline long long slot_class(const Slot& s) { return s.is_bare() ? 1 : class_of(*s.child); }

inline Slot symmetric_slot(int height, int genus);

inline GropeTree symmetric_grope(Height h, int genus = 1) {
  if (h.halves < 2) throw PreconditionError("height must be a half-integer >= 1");
  if (genus < 1) throw PreconditionError("genus must be at least 1");
  GropeTree t;
  int m = h.halves / 2;
  for (int k = 0; k < genus; ++k) {
    if (h.integral())
      t.pairs.emplace_back(symmetric_slot(m - 1, genus), symmetric_slot(m - 1, genus));
    else
      t.pairs.emplace_back(symmetric_slot(m, genus), symmetric_slot(m - 1, genus));
  }
  return t;
}

inline GropeTree symmetric_grope(double h, int genus = 1) { return symmetric_grope(Height::from_double(h), genus); }

inline Slot symmetric_slot(int height, int genus) {
  if (height == 0) return Slot::bare();
  return Slot::of(symmetric_grope(Height{2 * height}, genus));
}

namespace detail {
// Integer height of a slot (bare = 0), or nothing when the slot is not a
// symmetric grope of integer height.
inline std::optional<int> integral_slot_height(const Slot& s);
}  // namespace detail

/// Height h when t matches the symmetric template of height h (genera may
/// vary from stage to stage, pairs in any order); nothing otherwise.
inline std::optional<Height> height_of(const GropeTree& t) {
  std::vector<std::pair<int, int>> hs;
  for (const auto& [a, b] : t.pairs) {
    auto ha = detail::integral_slot_height(a), hb = detail::integral_slot_height(b);
    if (!ha || !hb) return std::nullopt;
    hs.emplace_back(*ha, *hb);
  }
  if (hs.empty()) return std::nullopt;
  int k = hs.front().first;
  if (std::all_of(hs.begin(), hs.end(), [&](auto p) { return p.first == k && p.second == k; }))
    return Height{2 * (k + 1)};
  int m = std::max(hs.front().first, hs.front().second);
  if (m >= 1 && std::all_of(hs.begin(), hs.end(), [&](auto p) {
        return std::max(p.first, p.second) == m && std::min(p.first, p.second) == m - 1;
      }))
    return Height{2 * m + 1};
  return std::nullopt;
}

inline std::optional<int> detail::integral_slot_height(const Slot& s) {
  if (s.is_bare()) return 0;
  auto h = height_of(*s.child);
  if (!h || !h->integral()) return std::nullopt;
  return h->halves / 2;
}

// ---- JSON: {"genus": g, "pairs": [[slot, slot], ...]}, slot = "bare" | tree

inline nlohmann::json to_json(const GropeTree& t);

inline nlohmann::json slot_to_json(const Slot& s) { return s.is_bare() ? nlohmann::json("bare") : to_json(*s.child); }

inline nlohmann::json to_json(const GropeTree& t) {
  nlohmann::json pairs = nlohmann::json::array();
  for (const auto& [a, b] : t.pairs) pairs.push_back({slot_to_json(a), slot_to_json(b)});
  return {{"genus", t.genus()}, {"pairs", pairs}};
}

inline GropeTree grope_from_json(const nlohmann::json& j);

inline Slot slot_from_json(const nlohmann::json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() != "bare") throw ParseError("slot must be \"bare\" or a grope object");
    return Slot::bare();
  }
  return Slot::of(grope_from_json(j));
}

inline GropeTree grope_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("pairs")) throw ParseError("grope needs a \"pairs\" array");
  const auto& ps = j.at("pairs");
  if (!ps.is_array() || ps.empty()) throw ParseError("\"pairs\" must be a non-empty array");
  GropeTree t;
  for (const auto& p : ps) {
    if (!p.is_array() || p.size() != 2) throw ParseError("each pair must hold exactly two slots");
    t.pairs.emplace_back(slot_from_json(p[0]), slot_from_json(p[1]));
  }
  if (j.contains("genus")) {
    if (!j.at("genus").is_number_integer() || j.at("genus").get<int>() != t.genus())
      throw ParseError("\"genus\" disagrees with the number of pairs");
  }
  return t;
}

}  // namespace knotwork::grope
