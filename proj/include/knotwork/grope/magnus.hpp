#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "knotwork/grope/bracket.hpp"

namespace knotwork::grope {

inline constexpr int kMaxMagnusRank = 4;
inline constexpr int kMaxMagnusCutoff = 8;

/// Truncated Magnus expansion: coefficients of all monomials of degree
/// < cutoff in the noncommuting variables X_1..X_rank. Monomials of length L
/// are stored at offset(L) + (base-rank digits of the word).
class MagnusSeries {
 public:
  using Coeff = boost::multiprecision::checked_int128_t;

  MagnusSeries(int rank, int cutoff) : rank_(rank), cutoff_(cutoff) {
    if (rank < 1 || rank > kMaxMagnusRank) throw BudgetError("rank must be between 1 and " + std::to_string(kMaxMagnusRank));
    if (cutoff < 1 || cutoff > kMaxMagnusCutoff)
      throw BudgetError("cutoff must be between 1 and " + std::to_string(kMaxMagnusCutoff));
    offset_.push_back(0);
    std::size_t p = 1;
    for (int L = 0; L < cutoff; ++L) {
      offset_.push_back(offset_.back() + p);
      pow_.push_back(p);
      p *= rank;
    }
    coef_.assign(offset_.back(), 0);
    coef_[0] = 1;
  }

  int rank() const { return rank_; }
  int cutoff() const { return cutoff_; }

  /// Multiplies on the right by the expansion of one letter:
  /// x_i -> 1 + X_i, x_i^-1 -> 1 - X_i + X_i^2 - ...
  void multiply_letter(int letter) {
    int i = (letter > 0 ? letter : -letter) - 1;
    std::vector<Coeff> next(coef_.size(), 0);
    try {
      for (int L = 0; L < cutoff_; ++L) {
        for (std::size_t w = 0; w < pow_[L]; ++w) {
          const Coeff& c = coef_[offset_[L] + w];
          if (c == 0) continue;
          std::size_t idx = w;
          for (int k = 0; L + k < cutoff_; ++k) {
            if (k > 0) idx = idx * rank_ + i;
            Coeff f = (letter < 0 && k % 2 == 1) ? Coeff(-1) : Coeff(1);
            if (letter > 0 && k > 1) break;
            next[offset_[L + k] + idx] += f * c;
          }
        }
      }
    } catch (const std::overflow_error&) {
      throw BudgetError("Magnus coefficient overflow");
    }
    coef_ = std::move(next);
  }

  /// Coefficient of the monomial X_{w[0]} X_{w[1]} ... (0-based indices).
  Coeff coefficient(const std::vector<int>& word) const {
    if (static_cast<int>(word.size()) >= cutoff_) throw PreconditionError("monomial beyond the cutoff");
    std::size_t idx = 0;
    for (int x : word) idx = idx * rank_ + x;
    return coef_[offset_[word.size()] + idx];
  }

  /// Nonzero monomials of total degree `degree`, keyed by 0-based words.
  std::map<std::vector<int>, Coeff> homogeneous_part(int degree) const {
    std::map<std::vector<int>, Coeff> out;
    for (std::size_t w = 0; w < pow_[degree]; ++w) {
      const Coeff& c = coef_[offset_[degree] + w];
      if (c == 0) continue;
      std::vector<int> word(degree);
      std::size_t x = w;
      for (int k = degree - 1; k >= 0; --k) {
        word[k] = static_cast<int>(x % rank_);
        x /= rank_;
      }
      out.emplace(std::move(word), c);
    }
    return out;
  }

  /// Least positive degree with a nonzero coefficient, or -1.
  int lowest_nontrivial_degree() const {
    for (int L = 1; L < cutoff_; ++L)
      for (std::size_t w = 0; w < pow_[L]; ++w)
        if (coef_[offset_[L] + w] != 0) return L;
    return -1;
  }

 private:
  int rank_, cutoff_;
  std::vector<std::size_t> offset_, pow_;
  std::vector<Coeff> coef_;
};

inline MagnusSeries magnus_expansion(const FreeWord& w, int cutoff) {
  MagnusSeries s(std::max(w.rank, 1), cutoff);
  for (int x : w.letters) s.multiply_letter(x);
  return s;
}

/// k when the word lies in F_k but not F_{k+1}; `at_least` marks the case
/// where the expansion is trivial below the cutoff, so only depth >= cutoff
/// is known.
struct MagnusDepth {
  int depth = 0;
  bool at_least = false;

  std::string str() const { return at_least ? ">= " + std::to_string(depth) : std::to_string(depth); }
  friend bool operator==(const MagnusDepth&, const MagnusDepth&) = default;
};

inline MagnusDepth magnus_depth(const FreeWord& w, int cutoff) {
  MagnusSeries s = magnus_expansion(w, cutoff);
  int d = s.lowest_nontrivial_degree();
  if (d < 0) return {cutoff, true};
  return {d, false};
}

}  // namespace knotwork::grope
