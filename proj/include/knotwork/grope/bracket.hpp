#pragma once

#include <algorithm>
#include <cctype>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "knotwork/grope/grope_tree.hpp"

namespace knotwork::grope {

/// A formal commutator: a generator name or [left, right].
class Bracket {
 public:
  static Bracket generator(char name) {
    if (name < 'a' || name > 'z') throw ParseError(std::string("generator must be a-z, got '") + name + "'");
    Bracket b;
    b.name_ = name;
    return b;
  }
  static Bracket commutator(Bracket l, Bracket r) {
    Bracket b;
    b.left_ = std::make_shared<const Bracket>(std::move(l));
    b.right_ = std::make_shared<const Bracket>(std::move(r));
    return b;
  }

  bool is_generator() const { return left_ == nullptr; }
  char name() const { return name_; }
  const Bracket& left() const { return *left_; }
  const Bracket& right() const { return *right_; }

  std::string str() const {
    if (is_generator()) return std::string(1, name_);
    return "[" + left_->str() + "," + right_->str() + "]";
  }

  friend bool operator==(const Bracket& a, const Bracket& b) {
    if (a.is_generator() != b.is_generator()) return false;
    if (a.is_generator()) return a.name_ == b.name_;
    return *a.left_ == *b.left_ && *a.right_ == *b.right_;
  }

 private:
  char name_ = 0;
  std::shared_ptr<const Bracket> left_, right_;
};

namespace detail {

struct BracketParser {
  std::string_view s;
  std::size_t i = 0;

  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("bracket: " + what + " at offset " + std::to_string(i));
  }
  void expect(char c) {
    skip();
    if (i >= s.size() || s[i] != c) fail(std::string("expected '") + c + "'");
    ++i;
  }
  Bracket parse() {
    skip();
    if (i >= s.size()) fail("unexpected end");
    if (s[i] == '[') {
      ++i;
      Bracket l = parse();
      expect(',');
      Bracket r = parse();
      expect(']');
      return Bracket::commutator(std::move(l), std::move(r));
    }
    char c = s[i];
    if (c < 'a' || c > 'z') fail(std::string("unexpected '") + c + "'");
    ++i;
    return Bracket::generator(c);
  }
};

}  // namespace detail

/// Parses "x", "[x,y]", "[[x,y],[z,w]]"; whitespace is ignored.
inline Bracket parse_bracket(std::string_view text) {
  detail::BracketParser p{text};
  Bracket b = p.parse();
  p.skip();
  if (p.i != text.size()) p.fail("trailing input");
  return b;
}

inline int weight(const Bracket& b) { return b.is_generator() ? 1 : weight(b.left()) + weight(b.right()); }

inline int derived_depth(const Bracket& b) {
  if (b.is_generator()) return 0;
  return std::min(derived_depth(b.left()), derived_depth(b.right())) + 1;
}

/// True when every commutator has two sides of equal weight and the leaves
/// all sit at the same depth.
inline bool fully_balanced(const Bracket& b) {
  if (b.is_generator()) return true;
  return fully_balanced(b.left()) && fully_balanced(b.right()) && weight(b.left()) == weight(b.right());
}

inline Slot bracket_slot(const Bracket& b);

/// Genus-1 stage whose a-slot realises the left factor and b-slot the right.
inline GropeTree bracket_to_grope(const Bracket& b) {
  if (b.is_generator()) throw PreconditionError("bracket of weight 1 has no grope");
  GropeTree t;
  t.pairs.emplace_back(bracket_slot(b.left()), bracket_slot(b.right()));
  return t;
}

inline Slot bracket_slot(const Bracket& b) { return b.is_generator() ? Slot::bare() : Slot::of(bracket_to_grope(b)); }

/// Element of a free group: letters +-(k+1) for generator k, freely reduced.
struct FreeWord {
  int rank = 0;
  std::vector<int> letters;

  FreeWord() = default;
  FreeWord(int rank_, std::vector<int> ls) : rank(rank_) {
    for (int x : ls) {
      if (x == 0 || x > rank || -x > rank) throw PreconditionError("letter outside the free group's rank");
      push(x);
    }
  }

  void push(int x) {
    if (!letters.empty() && letters.back() == -x)
      letters.pop_back();
    else
      letters.push_back(x);
  }

  FreeWord inverse() const {
    FreeWord w;
    w.rank = rank;
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) w.letters.push_back(-*it);
    return w;
  }

  friend FreeWord operator*(const FreeWord& a, const FreeWord& b) {
    FreeWord w = a;
    w.rank = std::max(a.rank, b.rank);
    for (int x : b.letters) w.push(x);
    return w;
  }

  friend bool operator==(const FreeWord& a, const FreeWord& b) { return a.letters == b.letters; }

  /// Letters as names; generator k is `names[k]`, inverses get "^-1".
  std::string str(const std::string& names) const {
    std::string s;
    for (int x : letters) {
      if (!s.empty()) s += ' ';
      int k = (x > 0 ? x : -x) - 1;
      s += k < static_cast<int>(names.size()) ? std::string(1, names[k]) : "g" + std::to_string(k + 1);
      if (x < 0) s += "^-1";
    }
    return s;
  }
};

/// Distinct generator names of a bracket, sorted.
inline std::string bracket_alphabet(const Bracket& b) {
  std::string out;
  auto walk = [&](auto&& self, const Bracket& x) -> void {
    if (x.is_generator()) {
      if (out.find(x.name()) == std::string::npos) out += x.name();
      return;
    }
    self(self, x.left());
    self(self, x.right());
  };
  walk(walk, b);
  std::sort(out.begin(), out.end());
  return out;
}

/// Expands [l, r] as l r l^-1 r^-1. Generator k of the word is the k-th
/// letter of `alphabet` (default: the bracket's own sorted alphabet).
inline FreeWord bracket_word(const Bracket& b, const std::string& alphabet) {
  if (b.is_generator()) {
    auto k = alphabet.find(b.name());
    if (k == std::string::npos) throw PreconditionError(std::string("generator '") + b.name() + "' not in alphabet");
    return FreeWord(static_cast<int>(alphabet.size()), {static_cast<int>(k) + 1});
  }
  FreeWord l = bracket_word(b.left(), alphabet), r = bracket_word(b.right(), alphabet);
  return l * r * l.inverse() * r.inverse();
}

inline FreeWord bracket_word(const Bracket& b) { return bracket_word(b, bracket_alphabet(b)); }

/// Parses whitespace-separated letters "x", "x^-1", "X" (capital = inverse)
/// or "x⁻¹". Generators are numbered by the sorted set of names used.
inline FreeWord parse_free_word(std::string_view text, std::string* alphabet_out = nullptr) {
  std::vector<std::pair<char, int>> raw;
  std::size_t i = 0;
  auto fail = [&](const std::string& why) -> void {
    throw ParseError("word: " + why + " at offset " + std::to_string(i));
  };
  while (i < text.size()) {
    unsigned char c = static_cast<unsigned char>(text[i]);
    if (std::isspace(c) || c == '*' || c == '.') {
      ++i;
      continue;
    }
    if (c == '1' && raw.empty() && text.find_first_not_of(" \t", i + 1) == std::string_view::npos) {
      ++i;  // "1" is the identity
      continue;
    }
    if (!std::isalpha(c)) fail(std::string("unexpected '") + text[i] + "'");
    char name = static_cast<char>(std::tolower(c));
    int sign = std::isupper(c) ? -1 : 1;
    ++i;
    if (text.substr(i, 3) == "^-1") {
      sign = -sign;
      i += 3;
    } else if (text.substr(i, 5) == "⁻¹") {
      sign = -sign;
      i += 5;
    }
    raw.emplace_back(name, sign);
  }
  std::string alphabet;
  for (auto [n, s] : raw)
    if (alphabet.find(n) == std::string::npos) alphabet += n;
  std::sort(alphabet.begin(), alphabet.end());
  std::vector<int> letters;
  for (auto [n, s] : raw) letters.push_back(s * (static_cast<int>(alphabet.find(n)) + 1));
  if (alphabet_out) *alphabet_out = alphabet;
  return FreeWord(static_cast<int>(alphabet.size()), letters);
}

}  // namespace knotwork::grope
