#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "permutope/cycle_polytope.hpp"
#include "permutope/overlap.hpp"
#include "permutope/patterns.hpp"

namespace permutope {

/// P_k, the set of limits of consecutive k-pattern proportion vectors,
/// handled as the cycle polytope of OV_k.
class FeasibleRegion {
 public:
  explicit FeasibleRegion(std::size_t k, std::size_t max_k = 7);

  std::size_t k() const noexcept { return overlap_->k; }
  const OverlapGraph& overlap() const noexcept { return *overlap_; }
  std::shared_ptr<const OverlapGraph> shared_overlap() const noexcept { return overlap_; }
  const CyclePolytope& polytope() const noexcept { return polytope_; }

  std::size_t dimension() const { return polytope_.dimension(); }

  /// IndexError when v is not indexed by S_k.
  MembershipCertificate membership(const PatternVector& v) const;

 private:
  std::shared_ptr<const OverlapGraph> overlap_;
  CyclePolytope polytope_;
};

MembershipCertificate feasible_membership(std::size_t k, const PatternVector& v);

/// One direct-sum block of a realization: `cycle` traversed
/// m * base_repeats times.
struct RealizationBlock {
  SimpleCycle cycle;
  BigInt base_repeats;
};

struct RealizationOptions {
  /// generate() refuses to build permutations longer than this.
  std::size_t max_size = 100'000'000;
};

/// Explicit sequence sigma^m whose consecutive k-pattern proportions tend to
/// the target. sigma^m is the direct sum over the blocks of the greedy
/// preimage of each block's repeated cycle walk.
class RealizationPlan {
 public:
  RealizationPlan(std::shared_ptr<const OverlapGraph> overlap, PatternVector target,
                  std::vector<WeightedCycle> decomposition, RealizationOptions options = {});

  const PatternVector& target() const noexcept { return target_; }
  const std::vector<WeightedCycle>& decomposition() const noexcept { return decomposition_; }
  const std::vector<RealizationBlock>& blocks() const noexcept { return blocks_; }

  /// |sigma^m| = m * sum_i base_i |C_i| + (#blocks)(k - 1); m >= 1.
  BigInt size(std::size_t m) const;
  Permutation generate(std::size_t m) const;

  /// (k * #blocks + (k-1)!) / |sigma^m|, an upper bound on
  /// ||cocc~_k(sigma^m) - target||_inf.
  Rational error_bound(std::size_t m) const;

  /// {"k", "target", "decomposition": [{"weight", "cycle"}], "blocks": [...]}
  std::string to_json() const;

 private:
  std::shared_ptr<const OverlapGraph> overlap_;
  PatternVector target_;
  std::vector<WeightedCycle> decomposition_;
  std::vector<RealizationBlock> blocks_;
  RealizationOptions options_;
};

/// NotInPolytopeError when the target is not in P_k.
RealizationPlan plan_realization(const FeasibleRegion& region, const PatternVector& target,
                                 RealizationOptions options = {});
Permutation realize(const FeasibleRegion& region, const PatternVector& target, std::size_t m);

struct DerandomizeOptions {
  /// Defaults to 1 / (support size * 10^6).
  std::optional<Rational> epsilon;
  std::size_t max_size = 10'000'000;
};

struct DerandomizeResult {
  Permutation nu;
  std::map<Permutation, BigInt> multiplicities;  // q_rho, zero entries dropped
  Rational epsilon;
};

/// nu = direct sum over rho (lex order) of q_rho copies of rho, with
/// |q_rho / sum q - p_rho| <= epsilon, taking the smallest total scale that
/// works. DistributionError unless the probabilities are >= 0, sum to 1 and
/// all permutations share one size.
DerandomizeResult derandomize(const std::map<Permutation, Rational>& distribution,
                              const DerandomizeOptions& options = {});

/// epsilon * sum_rho cocc~(pi, rho) + |pi| / n: how far cocc~(pi, nu) may sit
/// from the mixture expectation.
Rational derandomize_bound(const Permutation& pi, const std::map<Permutation, Rational>& distribution,
                           const Rational& epsilon);

/// Mixture expectation sum_rho p_rho cocc~(pi, rho).
Rational expected_cocc_proportion(const Permutation& pi,
                                  const std::map<Permutation, Rational>& distribution);

using Generator = std::function<Permutation(std::size_t m)>;

struct MixOptions {
  std::size_t max_size = 10'000'000;
};

/// sigma_B[sigma_A, ..., sigma_A]. CapacityError when |A| |B| > max_size.
Permutation mix(const Permutation& a, const Permutation& b, const MixOptions& options = {});
Permutation mix(const Generator& a, const Generator& b, std::size_t m,
                const MixOptions& options = {});

/// |pi| / |sigma_A|: bound on |cocc~(pi, C) - cocc~(pi, A)|.
Rational mix_consecutive_bound(const Permutation& pi, const Permutation& a);
/// C(k, 2) / |sigma_B|: bound on |occ~(pi, C) - occ~(pi, B)| for |pi| = k.
Rational mix_classical_bound(std::size_t k, const Permutation& b);

/// m -> the direct sum of m copies of rho.
Generator sum_witness(Permutation rho);
/// m -> direct sum of m decreasing runs of the given length.
Generator layered_witness(std::size_t layer_size);
Generator plan_generator(std::shared_ptr<const RealizationPlan> plan);

}  // namespace permutope
