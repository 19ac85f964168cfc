#include "permutope/patterns.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <string>

#include <json.hpp>

namespace permutope {

namespace {

__extension__ using u128 = unsigned __int128;

BigInt to_bigint(u128 v) {
  BigInt hi = static_cast<std::uint64_t>(v >> 64);
  BigInt lo = static_cast<std::uint64_t>(v);
  return (hi << 64) | lo;
}

// Fenwick tree over values 1..n.
class Fenwick {
 public:
  explicit Fenwick(std::size_t n) : tree_(n + 1, 0) {}
  void add(std::size_t i) {
    for (; i < tree_.size(); i += i & (~i + 1)) ++tree_[i];
  }
  std::uint64_t prefix(std::size_t i) const {
    std::uint64_t s = 0;
    for (; i > 0; i -= i & (~i + 1)) s += tree_[i];
    return s;
  }

 private:
  std::vector<std::uint64_t> tree_;
};

// Lexicographic rank of the pattern formed by raw distinct values.
std::size_t raw_rank(std::span<const int> values) {
  std::size_t rank = 0;
  const std::size_t n = values.size();
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t smaller_after = 0;
    for (std::size_t j = i + 1; j < n; ++j) smaller_after += values[j] < values[i];
    rank = rank * (n - i) + smaller_after;
  }
  return rank;
}

// Counts indexed by lex rank over S_k.
std::vector<BigInt> classical_small(std::size_t k, const Permutation& sigma) {
  const std::size_t n = sigma.size();
  if (k == 1) return {BigInt(n)};
  if (k == 2) {
    Fenwick fw(n);
    u128 inversions = 0;
    for (std::size_t j = 0; j < n; ++j) {
      inversions += j - fw.prefix(static_cast<std::size_t>(sigma[j]));
      fw.add(static_cast<std::size_t>(sigma[j]));
    }
    u128 pairs = static_cast<u128>(n) * (n - 1) / 2;
    return {to_bigint(pairs - inversions), to_bigint(inversions)};
  }
  // k == 3: classify each middle / first element by left and right
  // smaller/larger counts.
  Fenwick fw(n);
  u128 c123 = 0, c321 = 0, peak = 0, valley = 0, first_min = 0, first_max = 0;
  for (std::size_t j = 0; j < n; ++j) {
    const std::uint64_t v = static_cast<std::uint64_t>(sigma[j]);
    const u128 ls = fw.prefix(v);
    const u128 ll = j - ls;
    const u128 rs = (v - 1) - ls;
    const u128 rl = (n - 1 - j) - rs;
    fw.add(v);
    c123 += ls * rl;
    c321 += ll * rs;
    peak += ls * rs;
    valley += ll * rl;
    if (rl >= 2) first_min += rl * (rl - 1) / 2;
    if (rs >= 2) first_max += rs * (rs - 1) / 2;
  }
  const u128 c132 = first_min - c123;
  const u128 c231 = peak - c132;
  const u128 c312 = first_max - c321;
  const u128 c213 = valley - c312;
  // Lexicographic order of S_3: 123 132 213 231 312 321.
  return {to_bigint(c123), to_bigint(c132), to_bigint(c213),
          to_bigint(c231), to_bigint(c312), to_bigint(c321)};
}

// For k >= 4: enumerate the first k-1 positions of an occurrence and
// count the admissible last entries per value gap with a suffix table.
std::vector<BigInt> classical_prefix_scan(std::size_t k, const Permutation& sigma) {
  const std::size_t n = sigma.size();
  const std::size_t prefix_patterns = lex_rank(Permutation::decreasing(k - 1)) + 1;
  std::vector<u128> by_prefix(prefix_patterns * k, 0);
  std::vector<std::uint32_t> below(n + 2, 0);  // suffix entries with value < v
  std::vector<int> chosen(k - 1);
  std::vector<int> sorted(k - 1);
  std::vector<std::size_t> stack(k - 2);

  std::size_t suffix_size = 0;
  for (std::size_t j = n; j-- > k - 2;) {
    if (j + 1 < n) {
      const int added = sigma[j + 1];
      for (std::size_t v = static_cast<std::size_t>(added) + 1; v <= n + 1; ++v) ++below[v];
      ++suffix_size;
    }
    if (suffix_size == 0) continue;
    chosen[k - 2] = sigma[j];
    // Iterate over (k-2)-subsets of [0, j) as a combination counter.
    const std::size_t m = k - 2;
    for (std::size_t i = 0; i < m; ++i) stack[i] = i;
    while (true) {
      for (std::size_t i = 0; i < m; ++i) chosen[i] = sigma[stack[i]];
      std::copy(chosen.begin(), chosen.end(), sorted.begin());
      std::sort(sorted.begin(), sorted.end());
      const std::size_t prefix = raw_rank(chosen);
      std::uint32_t prev = 0;
      for (std::size_t r = 0; r < k - 1; ++r) {
        const std::uint32_t upto = below[static_cast<std::size_t>(sorted[r])];
        by_prefix[prefix * k + r] += upto - prev;
        prev = upto;
      }
      by_prefix[prefix * k + (k - 1)] += suffix_size - prev;

      std::size_t i = m;
      while (i > 0 && stack[i - 1] == j - m + (i - 1)) --i;
      if (i == 0) break;
      ++stack[i - 1];
      for (std::size_t t = i; t < m; ++t) stack[t] = stack[t - 1] + 1;
    }
  }

  std::vector<BigInt> counts(prefix_patterns * k);
  std::vector<int> full(k);
  for (std::size_t p = 0; p < prefix_patterns; ++p) {
    const Permutation rho = lex_unrank(k - 1, p);
    for (std::size_t r = 0; r < k; ++r) {
      // Last entry takes value r + 1; prefix values >= r + 1 shift up.
      for (std::size_t i = 0; i < k - 1; ++i) {
        full[i] = rho[i] >= static_cast<int>(r + 1) ? rho[i] + 1 : rho[i];
      }
      full[k - 1] = static_cast<int>(r + 1);
      counts[raw_rank(full)] = to_bigint(by_prefix[p * k + r]);
    }
  }
  return counts;
}

std::vector<BigInt> classical_counts_by_rank(std::size_t k, const Permutation& sigma,
                                             const CountingOptions& options) {
  const std::size_t n = sigma.size();
  if (k == 0) throw SizeError("pattern size must be >= 1");
  if (k > n) {
    throw SizeError("pattern size " + std::to_string(k) + " exceeds permutation size " +
                    std::to_string(n));
  }
  if (k <= 3) return classical_small(k, sigma);
  if (k == n) {
    std::vector<BigInt> counts(static_cast<std::size_t>(factorial(k)), 0);
    counts[lex_rank(sigma)] = 1;
    return counts;
  }
  if (k == 4 && n > options.k4_max_n) {
    throw CapacityError("classical counting with k = 4 is capped at n <= " +
                        std::to_string(options.k4_max_n));
  }
  if (k >= 5 && n > options.enumeration_max_n) {
    throw CapacityError("classical counting with k >= 5 is capped at n <= " +
                        std::to_string(options.enumeration_max_n));
  }
  return classical_prefix_scan(k, sigma);
}

void check_sizes(const Permutation& pi, const Permutation& sigma) {
  if (pi.size() > sigma.size()) {
    throw SizeError("pattern of size " + std::to_string(pi.size()) +
                    " is larger than permutation of size " + std::to_string(sigma.size()));
  }
}

void check_map_k(std::size_t k) {
  if (k == 0 || k > 10) throw SizeError("pattern vectors support 1 <= k <= 10");
}

}  // namespace

BigInt occ(const Permutation& pi, const Permutation& sigma, const CountingOptions& options) {
  check_sizes(pi, sigma);
  return classical_counts_by_rank(pi.size(), sigma, options)[lex_rank(pi)];
}

std::size_t cocc(const Permutation& pi, const Permutation& sigma) {
  check_sizes(pi, sigma);
  const std::size_t k = pi.size();
  std::size_t count = 0;
  for (std::size_t start = 0; start + k <= sigma.size(); ++start) {
    bool match = true;
    for (std::size_t a = 0; a < k && match; ++a) {
      for (std::size_t b = a + 1; b < k; ++b) {
        if ((sigma[start + a] < sigma[start + b]) != (pi[a] < pi[b])) {
          match = false;
          break;
        }
      }
    }
    count += match;
  }
  return count;
}

std::map<Permutation, BigInt> occ_counts(std::size_t k, const Permutation& sigma,
                                         const CountingOptions& options) {
  check_map_k(k);
  const auto by_rank = classical_counts_by_rank(k, sigma, options);
  std::map<Permutation, BigInt> out;
  const auto perms = all_permutations(k);
  for (std::size_t r = 0; r < perms.size(); ++r) out.emplace_hint(out.end(), perms[r], by_rank[r]);
  return out;
}

std::map<Permutation, std::size_t> cocc_counts(std::size_t k, const Permutation& sigma) {
  check_map_k(k);
  if (k > sigma.size()) {
    throw SizeError("pattern size " + std::to_string(k) + " exceeds permutation size " +
                    std::to_string(sigma.size()));
  }
  const auto perms = all_permutations(k);
  std::vector<std::size_t> by_rank(perms.size(), 0);
  for (std::size_t start = 0; start + k <= sigma.size(); ++start) {
    ++by_rank[raw_rank(sigma.word().subspan(start, k))];
  }
  std::map<Permutation, std::size_t> out;
  for (std::size_t r = 0; r < perms.size(); ++r) out.emplace_hint(out.end(), perms[r], by_rank[r]);
  return out;
}

Rational occ_proportion(const Permutation& pi, const Permutation& sigma,
                        const CountingOptions& options) {
  return Rational(occ(pi, sigma, options), binomial(sigma.size(), pi.size()));
}

namespace {
BigInt consecutive_denominator(std::size_t n, std::size_t k, const CountingOptions& options) {
  return options.denominator == ConsecutiveDenominator::kLength ? BigInt(n) : BigInt(n - k + 1);
}
}  // namespace

Rational cocc_proportion(const Permutation& pi, const Permutation& sigma,
                         const CountingOptions& options) {
  const std::size_t count = cocc(pi, sigma);
  return Rational(BigInt(count), consecutive_denominator(sigma.size(), pi.size(), options));
}

PatternVector::PatternVector(std::size_t k) : k_(k) {
  check_map_k(k);
  for (auto& pi : all_permutations(k)) entries_.emplace_hint(entries_.end(), std::move(pi), Rational(0));
}

PatternVector::PatternVector(std::size_t k, std::map<Permutation, Rational> entries)
    : k_(k), entries_(std::move(entries)) {
  check_map_k(k);
  const auto perms = all_permutations(k);
  if (entries_.size() != perms.size()) {
    throw IndexError("pattern vector must have exactly " + std::to_string(perms.size()) +
                     " entries for k = " + std::to_string(k));
  }
  std::size_t i = 0;
  for (const auto& [pi, value] : entries_) {
    if (pi != perms[i++]) throw IndexError("pattern vector key " + pi.to_string() + " is not in S_k");
    if (value < 0 || value > 1) {
      throw IndexError("pattern vector entry for " + pi.to_string() + " is outside [0, 1]");
    }
  }
}

PatternVector PatternVector::uniform(std::size_t k) {
  PatternVector v(k);
  const Rational share(1, static_cast<long long>(v.entries_.size()));
  for (auto& [pi, value] : v.entries_) value = share;
  return v;
}

const Rational& PatternVector::at(const Permutation& pi) const {
  auto it = entries_.find(pi);
  if (it == entries_.end()) throw IndexError(pi.to_string() + " is not in S_" + std::to_string(k_));
  return it->second;
}

void PatternVector::set(const Permutation& pi, Rational value) {
  auto it = entries_.find(pi);
  if (it == entries_.end()) throw IndexError(pi.to_string() + " is not in S_" + std::to_string(k_));
  if (value < 0 || value > 1) throw IndexError("pattern vector entries must lie in [0, 1]");
  it->second = std::move(value);
}

std::vector<Rational> PatternVector::to_vector() const {
  std::vector<Rational> out;
  out.reserve(entries_.size());
  for (const auto& [pi, value] : entries_) out.push_back(value);
  return out;
}

PatternVector PatternVector::from_vector(std::size_t k, const std::vector<Rational>& values) {
  PatternVector v(k);
  if (values.size() != v.entries_.size()) {
    throw IndexError("expected " + std::to_string(v.entries_.size()) + " values, got " +
                     std::to_string(values.size()));
  }
  std::size_t i = 0;
  for (auto& [pi, value] : v.entries_) {
    if (values[i] < 0 || values[i] > 1) throw IndexError("pattern vector entries must lie in [0, 1]");
    value = values[i++];
  }
  return v;
}

Rational PatternVector::sum() const {
  Rational s = 0;
  for (const auto& [pi, value] : entries_) s += value;
  return s;
}

std::string PatternVector::to_json() const {
  nlohmann::ordered_json j;
  j["k"] = k_;
  nlohmann::ordered_json entries = nlohmann::ordered_json::object();
  for (const auto& [pi, value] : entries_) entries[pi.to_string()] = permutope::to_string(value);
  j["entries"] = std::move(entries);
  return j.dump(2) + "\n";
}

PatternVector PatternVector::from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("pattern vector JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("k") || !j.contains("entries") || !j["k"].is_number_unsigned() ||
      !j["entries"].is_object()) {
    throw ParseError("pattern vector JSON must be {\"k\": int, \"entries\": {...}}");
  }
  const std::size_t k = j["k"].get<std::size_t>();
  std::map<Permutation, Rational> entries;
  for (const auto& [key, value] : j["entries"].items()) {
    if (!value.is_string()) throw ParseError("pattern vector entries must be rational strings");
    entries.emplace(Permutation::parse(key), parse_rational(value.get<std::string>()));
  }
  return PatternVector(k, std::move(entries));
}

PatternVector proportion_vector(std::size_t k, const Permutation& sigma, PatternKind kind,
                                const CountingOptions& options) {
  check_map_k(k);
  if (k > sigma.size()) {
    throw SizeError("pattern size " + std::to_string(k) + " exceeds permutation size " +
                    std::to_string(sigma.size()));
  }
  std::map<Permutation, Rational> entries;
  if (kind == PatternKind::kClassical) {
    const BigInt total = binomial(sigma.size(), k);
    for (auto& [pi, count] : occ_counts(k, sigma, options)) entries.emplace(pi, Rational(count, total));
  } else {
    const BigInt denom = consecutive_denominator(sigma.size(), k, options);
    for (auto& [pi, count] : cocc_counts(k, sigma)) entries.emplace(pi, Rational(BigInt(count), denom));
  }
  return PatternVector(k, std::move(entries));
}

Rational linf_distance(const PatternVector& a, const PatternVector& b) {
  if (a.k() != b.k()) throw SizeError("pattern vectors have different k");
  Rational best = 0;
  auto ib = b.entries().begin();
  for (const auto& [pi, value] : a.entries()) {
    Rational d = value - (ib++)->second;
    if (d < 0) d = -d;
    if (d > best) best = d;
  }
  return best;
}

}  // namespace permutope
