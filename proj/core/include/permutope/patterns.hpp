#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>

#include "permutope/permutation.hpp"
#include "permutope/rational.hpp"

namespace permutope {

enum class PatternKind { kClassical, kConsecutive };

/// Denominator used for consecutive proportions. kLength (n) is the default;
/// kWindows (n - k + 1) is the "natural" alternative.
enum class ConsecutiveDenominator { kLength, kWindows };

struct CountingOptions {
  /// Largest n for which classical counting of patterns with k >= 5 is
  /// attempted (prefix enumeration is O(n^(k-1))).
  std::size_t enumeration_max_n = 30;
  /// Largest n for classical counting with k = 4 (cubic scan).
  std::size_t k4_max_n = 2500;
  ConsecutiveDenominator denominator = ConsecutiveDenominator::kLength;
};

/// Number of subsets I of size |pi| with pat_I(sigma) = pi.
BigInt occ(const Permutation& pi, const Permutation& sigma,
           const CountingOptions& options = {});

/// Number of windows of width |pi| with pattern pi.
std::size_t cocc(const Permutation& pi, const Permutation& sigma);

/// occ for every pi in S_k at once (keys are all of S_k).
std::map<Permutation, BigInt> occ_counts(std::size_t k, const Permutation& sigma,
                                         const CountingOptions& options = {});

/// cocc for every pi in S_k at once (keys are all of S_k).
std::map<Permutation, std::size_t> cocc_counts(std::size_t k,
                                               const Permutation& sigma);

/// occ(pi, sigma) / C(n, k).
Rational occ_proportion(const Permutation& pi, const Permutation& sigma,
                        const CountingOptions& options = {});

/// cocc(pi, sigma) / n (or / (n - k + 1) under kWindows).
Rational cocc_proportion(const Permutation& pi, const Permutation& sigma,
                         const CountingOptions& options = {});

/// A vector indexed by all of S_k with exact entries in [0, 1].
class PatternVector {
 public:
  /// Zero vector over S_k.
  explicit PatternVector(std::size_t k);

  /// Validates that the keys are exactly S_k and entries lie in [0, 1].
  PatternVector(std::size_t k, std::map<Permutation, Rational> entries);

  /// Every entry equal to 1/k!.
  static PatternVector uniform(std::size_t k);

  std::size_t k() const noexcept { return k_; }
  const std::map<Permutation, Rational>& entries() const noexcept {
    return entries_;
  }
  const Rational& at(const Permutation& pi) const;
  void set(const Permutation& pi, Rational value);

  /// Entries in lexicographic order of S_k (matches overlap-graph edge ids).
  std::vector<Rational> to_vector() const;
  static PatternVector from_vector(std::size_t k, const std::vector<Rational>& values);

  Rational sum() const;

  /// {"k": k, "entries": {"123": "1/6", ...}}
  std::string to_json() const;
  static PatternVector from_json(std::string_view text);

  bool operator==(const PatternVector&) const = default;

 private:
  std::size_t k_;
  std::map<Permutation, Rational> entries_;
};

PatternVector proportion_vector(std::size_t k, const Permutation& sigma,
                                PatternKind kind,
                                const CountingOptions& options = {});

/// max_pi |a_pi - b_pi|; SizeError when k differs.
Rational linf_distance(const PatternVector& a, const PatternVector& b);

}  // namespace permutope
