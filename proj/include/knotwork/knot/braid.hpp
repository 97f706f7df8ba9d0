#pragma once

#include <cctype>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "knotwork/error.hpp"

namespace knotwork {

/// Braid word on `strands` strands. Letter e stands for the generator
/// sigma_|e| with crossing sign sign(e).
struct BraidWord {
  int strands = 1;
  std::vector<int> letters;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

  void validate() const {
    if (strands < 1) throw PreconditionError("braid needs at least one strand");
    for (int e : letters)
      if (e == 0 || std::abs(e) > strands - 1)
        throw PreconditionError("generator index " + std::to_string(std::abs(e)) + " out of range for " +
                                std::to_string(strands) + " strands");
  }

  /// Strand permutation of the closure: perm[i] is where strand i ends up.
  std::vector<int> permutation() const {
    std::vector<int> pos(strands);
    std::iota(pos.begin(), pos.end(), 0);
    // track which strand sits at each position
    for (int e : letters) std::swap(pos[std::abs(e) - 1], pos[std::abs(e)]);
    std::vector<int> perm(strands);
    for (int p = 0; p < strands; ++p) perm[pos[p]] = p;
    return perm;
  }

  std::string str() const {
    std::string s = "n=" + std::to_string(strands) + ";";
    for (int e : letters) s += " " + std::to_string(e);
    return s;
  }
};

/// Parses "n=3; 1 -2 1 -2". Tokens may be separated by spaces or commas.
inline BraidWord parse_braid(std::string_view text) {
  std::string s(text);
  auto semi = s.find(';');
  std::string head = s.substr(0, semi);
  std::string body = semi == std::string::npos ? "" : s.substr(semi + 1);
  auto trim = [](std::string x) {
    auto b = x.find_first_not_of(" \t\r\n");
    auto e = x.find_last_not_of(" \t\r\n");
    return b == std::string::npos ? std::string() : x.substr(b, e - b + 1);
  };
  head = trim(head);
  if (head.rfind("n=", 0) != 0) throw ParseError("braid must start with 'n=<strands>;'");
  BraidWord b;
  try {
    std::size_t used = 0;
    b.strands = std::stoi(head.substr(2), &used);
    if (used != head.size() - 2) throw ParseError("malformed strand count '" + head + "'");
  } catch (const std::logic_error&) {
    throw ParseError("malformed strand count '" + head + "'");
  }
  for (char& c : body)
    if (c == ',') c = ' ';
  std::istringstream in(body);
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    int e = 0;
    try {
      e = std::stoi(tok, &used);
    } catch (const std::logic_error&) {
      throw ParseError("malformed braid token '" + tok + "'");
    }
    if (used != tok.size() || e == 0) throw ParseError("malformed braid token '" + tok + "'");
    b.letters.push_back(e);
  }
  b.validate();
  return b;
}

/// True iff the closure has one component (the permutation is an n-cycle).
inline bool closure_is_knot(const BraidWord& b) {
  std::vector<int> perm = b.permutation();
  int len = 0, x = 0;
  do {
    x = perm[x];
    ++len;
  } while (x != 0);
  return len == b.strands;
}

}  // namespace knotwork
