#include "permutope/permutation.hpp"

#include <cctype>
#include <numeric>
#include <string>

namespace permutope {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  if (word_.empty()) throw InvalidPermutationError("permutation must have size >= 1");
  std::vector<bool> seen(word_.size() + 1, false);
  for (int v : word_) {
    if (v < 1 || static_cast<std::size_t>(v) > word_.size() || seen[v]) {
      throw InvalidPermutationError("word is not a bijection of {1.." +
                                    std::to_string(word_.size()) + "}");
    }
    seen[v] = true;
  }
}

Permutation make_unchecked(std::vector<int> word) {
  return Permutation(std::move(word), Permutation::Unchecked{});
}

Permutation Permutation::identity(std::size_t n) {
  if (n == 0) throw InvalidPermutationError("permutation must have size >= 1");
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  return make_unchecked(std::move(w));
}

Permutation Permutation::decreasing(std::size_t n) {
  if (n == 0) throw InvalidPermutationError("permutation must have size >= 1");
  std::vector<int> w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = static_cast<int>(n - i);
  return make_unchecked(std::move(w));
}

Permutation Permutation::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty permutation string");
  std::vector<int> word;
  if (text.find(',') == std::string_view::npos) {
    for (char c : text) {
      if (c < '1' || c > '9') {
        throw ParseError("bad permutation digit in '" + std::string(text) + "'");
      }
      word.push_back(c - '0');
    }
    if (word.size() > 9) throw ParseError("digit form only covers n <= 9: '" + std::string(text) + "'");
  } else {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t next = text.find(',', pos);
      if (next == std::string_view::npos) next = text.size();
      std::string_view token = text.substr(pos, next - pos);
      if (token.empty() || token.size() > 9) {
        throw ParseError("bad permutation entry in '" + std::string(text) + "'");
      }
      int value = 0;
      for (char c : token) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
          throw ParseError("bad permutation entry in '" + std::string(text) + "'");
        }
        value = value * 10 + (c - '0');
      }
      word.push_back(value);
      pos = next + 1;
    }
  }
  try {
    return Permutation(std::move(word));
  } catch (const InvalidPermutationError& e) {
    throw ParseError(std::string(e.what()) + ": '" + std::string(text) + "'");
  }
}

std::string Permutation::to_string() const {
  std::string out;
  if (word_.size() <= 9) {
    for (int v : word_) out.push_back(static_cast<char>('0' + v));
    return out;
  }
  for (std::size_t i = 0; i < word_.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(word_[i]);
  }
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(word_.size());
  for (std::size_t i = 0; i < word_.size(); ++i) inv[word_[i] - 1] = static_cast<int>(i + 1);
  return make_unchecked(std::move(inv));
}

IndexSet::IndexSet(std::vector<std::size_t> indices) : indices_(std::move(indices)) {
  if (indices_.empty()) throw IndexError("index set must be non-empty");
  if (indices_.front() < 1) throw IndexError("positions are 1-based");
  for (std::size_t i = 1; i < indices_.size(); ++i) {
    if (indices_[i] <= indices_[i - 1]) throw IndexError("index set must be strictly increasing");
  }
  interval_ = indices_.back() - indices_.front() + 1 == indices_.size();
}

IndexSet IndexSet::interval(std::size_t first, std::size_t length) {
  if (length == 0) throw IndexError("index set must be non-empty");
  std::vector<std::size_t> idx(length);
  std::iota(idx.begin(), idx.end(), first);
  return IndexSet(std::move(idx));
}

Permutation pattern_at(const Permutation& sigma, const IndexSet& positions) {
  if (positions.max() > sigma.size()) {
    throw IndexError("position " + std::to_string(positions.max()) +
                     " out of range for size " + std::to_string(sigma.size()));
  }
  std::vector<int> values;
  values.reserve(positions.size());
  for (std::size_t p : positions.indices()) values.push_back(sigma[p - 1]);
  return standardize(values);
}

Permutation window_pattern(const Permutation& sigma, std::size_t start, std::size_t length) {
  if (length == 0 || start + length > sigma.size()) {
    throw IndexError("window out of range");
  }
  return standardize(std::span<const int>(sigma.word().data() + start, length));
}

Permutation direct_sum(const Permutation& tau, const Permutation& sigma) {
  std::vector<int> w(tau.word().begin(), tau.word().end());
  w.reserve(tau.size() + sigma.size());
  const int shift = static_cast<int>(tau.size());
  for (int v : sigma.word()) w.push_back(v + shift);
  return make_unchecked(std::move(w));
}

Permutation direct_sum(std::span<const Permutation> parts) {
  if (parts.empty()) throw EmptyError("direct sum of an empty list");
  std::size_t total = 0;
  for (const auto& p : parts) total += p.size();
  std::vector<int> w;
  w.reserve(total);
  int shift = 0;
  for (const auto& p : parts) {
    for (int v : p.word()) w.push_back(v + shift);
    shift += static_cast<int>(p.size());
  }
  return make_unchecked(std::move(w));
}

Permutation repeat_sum(std::size_t copies, const Permutation& sigma) {
  if (copies == 0) throw EmptyError("repeat_sum with zero copies");
  std::vector<int> w;
  w.reserve(copies * sigma.size());
  for (std::size_t c = 0; c < copies; ++c) {
    const int shift = static_cast<int>(c * sigma.size());
    for (int v : sigma.word()) w.push_back(v + shift);
  }
  return make_unchecked(std::move(w));
}

Permutation substitute(const Permutation& theta, std::span<const Permutation> blocks) {
  if (blocks.size() != theta.size()) {
    throw ArityError("substitute: theta has size " + std::to_string(theta.size()) + " but " +
                     std::to_string(blocks.size()) + " blocks were given");
  }
  // Block i receives the values just above every block whose theta-value is smaller.
  std::vector<std::size_t> size_by_value(theta.size() + 1, 0);
  for (std::size_t i = 0; i < theta.size(); ++i) size_by_value[theta[i]] = blocks[i].size();
  std::vector<std::size_t> offset_by_value(theta.size() + 1, 0);
  for (std::size_t v = 2; v <= theta.size(); ++v) {
    offset_by_value[v] = offset_by_value[v - 1] + size_by_value[v - 1];
  }
  std::vector<int> w;
  w.reserve(offset_by_value[theta.size()] + size_by_value[theta.size()]);
  for (std::size_t i = 0; i < theta.size(); ++i) {
    const int shift = static_cast<int>(offset_by_value[theta[i]]);
    for (int v : blocks[i].word()) w.push_back(v + shift);
  }
  return make_unchecked(std::move(w));
}

Permutation substitute_uniform(const Permutation& theta, const Permutation& block) {
  const std::size_t b = block.size();
  std::vector<int> w;
  w.reserve(theta.size() * b);
  for (std::size_t i = 0; i < theta.size(); ++i) {
    const int shift = static_cast<int>((theta[i] - 1) * b);
    for (int v : block.word()) w.push_back(v + shift);
  }
  return make_unchecked(std::move(w));
}

std::vector<Permutation> all_permutations(std::size_t k) {
  if (k == 0) throw SizeError("all_permutations: k must be >= 1");
  std::vector<int> w(k);
  std::iota(w.begin(), w.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(make_unchecked(w));
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

std::size_t lex_rank(const Permutation& pi) {
  const std::size_t n = pi.size();
  if (n > 20) throw SizeError("lex_rank: size exceeds 20");
  std::size_t rank = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t smaller_after = 0;
    for (std::size_t j = i + 1; j < n; ++j) smaller_after += pi[j] < pi[i];
    rank = rank * (n - i) + smaller_after;
  }
  return rank;
}

Permutation lex_unrank(std::size_t k, std::size_t rank) {
  if (k == 0 || k > 20) throw SizeError("lex_unrank: k must be in [1, 20]");
  std::vector<std::size_t> digits(k);
  for (std::size_t i = k; i-- > 0;) {
    const std::size_t base = k - i;
    digits[i] = rank % base;
    rank /= base;
  }
  if (rank != 0) throw IndexError("lex_unrank: rank out of range");
  std::vector<int> pool(k);
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<int> w;
  w.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    w.push_back(pool[digits[i]]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(digits[i]));
  }
  return make_unchecked(std::move(w));
}

}  // namespace permutope
