#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "permutope/errors.hpp"

namespace permutope {

/// A permutation of {1..n} in one-line notation.
///
/// Values are stored 1-based exactly as written; positions are 0-based when
/// accessed through operator[] and 1-based in IndexSet.
class Permutation {
 public:
  /// Validates that `word` is a bijection of {1..n}, n >= 1.
  explicit Permutation(std::vector<int> word);

  Permutation(std::initializer_list<int> word)
      : Permutation(std::vector<int>(word)) {}

  static Permutation identity(std::size_t n);
  static Permutation decreasing(std::size_t n);

  /// Digit strings ("3142") and comma-separated words ("10,1,2,...,9").
  static Permutation parse(std::string_view text);

  std::size_t size() const noexcept { return word_.size(); }
  int operator[](std::size_t pos) const noexcept { return word_[pos]; }
  std::span<const int> word() const noexcept { return word_; }

  /// Digit string when n <= 9, comma-separated otherwise.
  std::string to_string() const;

  Permutation inverse() const;

  auto operator<=>(const Permutation&) const = default;
  bool operator==(const Permutation&) const = default;

 private:
  struct Unchecked {};
  Permutation(std::vector<int> word, Unchecked) : word_(std::move(word)) {}
  friend Permutation make_unchecked(std::vector<int> word);

  std::vector<int> word_;
};

/// Internal fast path for words already known to be bijections.
Permutation make_unchecked(std::vector<int> word);

/// Strictly increasing, non-empty set of 1-based positions.
class IndexSet {
 public:
  explicit IndexSet(std::vector<std::size_t> indices);

  /// The interval [first, first + length - 1].
  static IndexSet interval(std::size_t first, std::size_t length);

  std::span<const std::size_t> indices() const noexcept { return indices_; }
  std::size_t size() const noexcept { return indices_.size(); }
  std::size_t max() const noexcept { return indices_.back(); }
  bool is_interval() const noexcept { return interval_; }

 private:
  std::vector<std::size_t> indices_;
  bool interval_ = false;
};

/// The unique permutation order-isomorphic to `values`. Ties raise
/// DistinctnessError.
template <class T>
Permutation standardize(std::span<const T> values) {
  if (values.empty()) throw EmptyError("standardize: empty sequence");
  std::vector<std::size_t> order(values.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<int> word(values.size());
  for (std::size_t r = 0; r < order.size(); ++r) {
    if (r > 0 && !(values[order[r - 1]] < values[order[r]])) {
      throw DistinctnessError("standardize: repeated value");
    }
    word[order[r]] = static_cast<int>(r + 1);
  }
  return make_unchecked(std::move(word));
}

template <class T>
Permutation standardize(const std::vector<T>& values) {
  return standardize(std::span<const T>(values));
}

/// pat_I(sigma): standardization of the entries of `sigma` at positions I.
Permutation pattern_at(const Permutation& sigma, const IndexSet& positions);

/// Pattern of the window of `length` entries starting at 0-based `start`.
Permutation window_pattern(const Permutation& sigma, std::size_t start,
                           std::size_t length);

Permutation direct_sum(const Permutation& tau, const Permutation& sigma);

/// Direct sum of `parts` in order; EmptyError on an empty list.
Permutation direct_sum(std::span<const Permutation> parts);

/// Direct sum of `copies` copies of sigma; EmptyError when copies == 0.
Permutation repeat_sum(std::size_t copies, const Permutation& sigma);

/// theta[blocks...]: inflate point i of theta by blocks[i].
Permutation substitute(const Permutation& theta,
                       std::span<const Permutation> blocks);

/// theta[block, ..., block] without materializing |theta| copies.
Permutation substitute_uniform(const Permutation& theta, const Permutation& block);

/// All permutations of size k in lexicographic order.
std::vector<Permutation> all_permutations(std::size_t k);

/// Position of `pi` in all_permutations(|pi|).
std::size_t lex_rank(const Permutation& pi);

/// Inverse of lex_rank.
Permutation lex_unrank(std::size_t k, std::size_t rank);

}  // namespace permutope

template <>
struct std::hash<permutope::Permutation> {
  std::size_t operator()(const permutope::Permutation& p) const noexcept {
    std::size_t h = p.size();
    for (int v : p.word()) h = h * 1000003u ^ static_cast<std::size_t>(v);
    return h;
  }
};
