#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "permutope/feasible_region.hpp"
#include "permutope/patterns.hpp"

namespace permutope {

struct ReportRow {
  std::size_t m = 0;
  std::size_t size = 0;
  PatternVector consecutive;
  PatternVector classical;
  std::optional<Rational> linf_consecutive;  // empty without a target
  std::optional<Rational> linf_classical;

  bool operator==(const ReportRow&) const = default;
};

struct ReportOptions {
  std::optional<PatternVector> consecutive_target;
  std::optional<PatternVector> classical_target;
  CountingOptions counting;
  unsigned threads = 1;
};

struct ConvergenceReport {
  std::size_t k = 0;
  std::vector<ReportRow> rows;  // ordered by m

  /// Sizes strictly increase with m.
  bool sizes_increasing() const;

  /// "m,size,cocc_<pi>...,occ_<pi>...,linf_consec,linf_class" with exact
  /// "p/q" cells; missing distances are empty cells.
  std::string to_csv() const;
  static ConvergenceReport from_csv(std::string_view text);
};

/// Evaluates the generator at each m (in parallel when threads > 1) and
/// merges rows in m order.
ConvergenceReport convergence_report(const Generator& generator, std::size_t k,
                                     std::vector<std::size_t> m_values,
                                     const ReportOptions& options = {});

/// 1, 2, 4, ... while size_of(m) <= max_size.
std::vector<std::size_t> powers_of_two_schedule(const std::function<BigInt(std::size_t)>& size_of,
                                                std::size_t max_size);

}  // namespace permutope
