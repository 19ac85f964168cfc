#include "permutope/feasible_region.hpp"

#include <boost/integer/common_factor.hpp>
#include <json.hpp>

namespace permutope {

namespace {

BigInt lcm_big(const BigInt& a, const BigInt& b) { return a / boost::multiprecision::gcd(a, b) * b; }

std::size_t to_size(const BigInt& v, const char* what, std::size_t cap) {
  if (v > cap) {
    throw CapacityError(std::string(what) + " of size " + v.str() + " exceeds the cap " +
                        std::to_string(cap));
  }
  return v.convert_to<std::size_t>();
}

}  // namespace

FeasibleRegion::FeasibleRegion(std::size_t k, std::size_t max_k)
    : overlap_(std::make_shared<const OverlapGraph>(build_overlap_graph(k, max_k))),
      polytope_(overlap_->graph) {}

MembershipCertificate FeasibleRegion::membership(const PatternVector& v) const {
  if (v.k() != k()) {
    throw IndexError("vector is indexed by S_" + std::to_string(v.k()) + ", expected S_" +
                     std::to_string(k()));
  }
  const auto x = v.to_vector();
  return polytope_.membership(x);
}

MembershipCertificate feasible_membership(std::size_t k, const PatternVector& v) {
  return FeasibleRegion(k).membership(v);
}

RealizationPlan::RealizationPlan(std::shared_ptr<const OverlapGraph> overlap, PatternVector target,
                                 std::vector<WeightedCycle> decomposition, RealizationOptions options)
    : overlap_(std::move(overlap)),
      target_(std::move(target)),
      decomposition_(std::move(decomposition)),
      options_(options) {
  if (decomposition_.empty()) throw EmptyError("realization needs a non-empty decomposition");
  // Block i gets base_i traversals of C_i, so its share of edges is
  // base_i |C_i| / sum_j base_j |C_j| = w_i.
  BigInt denominators = 1;
  BigInt lengths = 1;
  for (const auto& wc : decomposition_) {
    if (wc.weight <= 0) throw NotInPolytopeError("decomposition weights must be positive");
    denominators = lcm_big(denominators, boost::multiprecision::denominator(wc.weight));
    lengths = lcm_big(lengths, BigInt(wc.cycle.size()));
  }
  std::vector<BigInt> base;
  BigInt common = 0;
  for (const auto& wc : decomposition_) {
    const Rational scaled = wc.weight * denominators * lengths / static_cast<long long>(wc.cycle.size());
    base.push_back(boost::multiprecision::numerator(scaled));
    common = boost::multiprecision::gcd(common, base.back());
  }
  for (std::size_t i = 0; i < base.size(); ++i) {
    blocks_.push_back({decomposition_[i].cycle, base[i] / common});
  }
}

BigInt RealizationPlan::size(std::size_t m) const {
  if (m == 0) throw SizeError("realization parameter m must be >= 1");
  BigInt total = 0;
  for (const auto& b : blocks_) total += b.base_repeats * b.cycle.size();
  return total * m + BigInt(blocks_.size()) * (overlap_->k - 1);
}

Permutation RealizationPlan::generate(std::size_t m) const {
  to_size(size(m), "realization", options_.max_size);
  std::vector<Permutation> parts;
  for (const auto& b : blocks_) {
    const std::size_t repeats = (b.base_repeats * m).convert_to<std::size_t>();
    std::vector<EdgeId> edges;
    edges.reserve(repeats * b.cycle.size());
    for (std::size_t r = 0; r < repeats; ++r) {
      edges.insert(edges.end(), b.cycle.edges().begin(), b.cycle.edges().end());
    }
    parts.push_back(permutation_of_walk(*overlap_, Walk(overlap_->graph, std::move(edges))));
  }
  return direct_sum(parts);
}

Rational RealizationPlan::error_bound(std::size_t m) const {
  const std::size_t k = overlap_->k;
  const BigInt numerator = BigInt(k) * blocks_.size() + factorial(k - 1);
  return Rational(numerator, size(m));
}

std::string RealizationPlan::to_json() const {
  using nlohmann::ordered_json;
  auto labels = [&](const SimpleCycle& c) {
    ordered_json out = ordered_json::array();
    for (EdgeId e : c.edges()) out.push_back(overlap_->label(e).to_string());
    return out;
  };
  ordered_json doc;
  doc["k"] = overlap_->k;
  ordered_json target;
  for (const auto& [pi, value] : target_.entries()) target[pi.to_string()] = to_string(value);
  doc["target"] = target;
  ordered_json decomposition = ordered_json::array();
  for (const auto& wc : decomposition_) {
    decomposition.push_back({{"weight", to_string(wc.weight)}, {"cycle", labels(wc.cycle)}});
  }
  doc["decomposition"] = decomposition;
  ordered_json blocks = ordered_json::array();
  for (const auto& b : blocks_) {
    blocks.push_back({{"cycle", labels(b.cycle)}, {"base_repeats", b.base_repeats.str()}});
  }
  doc["blocks"] = blocks;
  return doc.dump(2) + "\n";
}

RealizationPlan plan_realization(const FeasibleRegion& region, const PatternVector& target,
                                 RealizationOptions options) {
  auto cert = region.membership(target);
  if (!cert.member) {
    throw NotInPolytopeError("target is not in P_" + std::to_string(region.k()) + ": " +
                             cert.violation->describe(region.overlap().graph));
  }
  return RealizationPlan(region.shared_overlap(), target, std::move(cert.decomposition), options);
}

Permutation realize(const FeasibleRegion& region, const PatternVector& target, std::size_t m) {
  return plan_realization(region, target).generate(m);
}

DerandomizeResult derandomize(const std::map<Permutation, Rational>& distribution,
                              const DerandomizeOptions& options) {
  if (distribution.empty()) throw DistributionError("empty distribution");
  const std::size_t n = distribution.begin()->first.size();
  Rational total;
  std::vector<std::pair<const Permutation*, Rational>> support;
  for (const auto& [rho, p] : distribution) {
    if (rho.size() != n) throw DistributionError("distribution mixes permutation sizes");
    if (p < 0) throw DistributionError("negative probability for " + rho.to_string());
    total += p;
    if (p > 0) support.emplace_back(&rho, p);
  }
  if (total != 1) throw DistributionError("probabilities sum to " + to_string(total) + ", not 1");

  const Rational epsilon =
      options.epsilon ? *options.epsilon
                      : Rational(1, static_cast<long long>(support.size()) * 1'000'000);
  if (epsilon < 0) throw DistributionError("epsilon must be >= 0");

  BigInt exact_scale = 1;
  for (const auto& [rho, p] : support) {
    exact_scale = lcm_big(exact_scale, boost::multiprecision::denominator(p));
  }

  auto rounded = [&](const BigInt& scale) {
    std::vector<BigInt> q;
    for (const auto& [rho, p] : support) {
      const Rational x = p * scale + Rational(1, 2);
      q.push_back(boost::multiprecision::numerator(x) / boost::multiprecision::denominator(x));
    }
    return q;
  };
  auto within = [&](const std::vector<BigInt>& q) {
    BigInt sum = 0;
    for (const auto& v : q) sum += v;
    if (sum == 0) return false;
    for (std::size_t i = 0; i < q.size(); ++i) {
      const Rational diff = Rational(q[i], sum) - support[i].second;
      if (abs(diff) > epsilon) return false;
    }
    return true;
  };

  // The exact scale always works; search below it only while it stays cheap.
  constexpr std::size_t kSearchCap = 1'000'000;
  std::vector<BigInt> q;
  for (std::size_t scale = 1; scale <= kSearchCap && BigInt(scale) < exact_scale; ++scale) {
    auto candidate = rounded(BigInt(scale));
    if (within(candidate)) {
      q = std::move(candidate);
      break;
    }
  }
  if (q.empty()) q = rounded(exact_scale);

  BigInt blocks = 0;
  for (const auto& v : q) blocks += v;
  to_size(blocks * n, "derandomized permutation", options.max_size);

  DerandomizeResult result{Permutation::identity(1), {}, epsilon};
  std::vector<int> word;
  word.reserve((blocks * n).convert_to<std::size_t>());
  int shift = 0;
  for (std::size_t i = 0; i < support.size(); ++i) {
    if (q[i] == 0) continue;
    result.multiplicities.emplace(*support[i].first, q[i]);
    const std::size_t copies = q[i].convert_to<std::size_t>();
    for (std::size_t c = 0; c < copies; ++c) {
      for (int v : support[i].first->word()) word.push_back(v + shift);
      shift += static_cast<int>(n);
    }
  }
  result.nu = make_unchecked(std::move(word));
  return result;
}

Rational expected_cocc_proportion(const Permutation& pi,
                                  const std::map<Permutation, Rational>& distribution) {
  Rational out;
  for (const auto& [rho, p] : distribution) out += p * cocc_proportion(pi, rho);
  return out;
}

Rational derandomize_bound(const Permutation& pi, const std::map<Permutation, Rational>& distribution,
                           const Rational& epsilon) {
  if (distribution.empty()) throw DistributionError("empty distribution");
  const std::size_t n = distribution.begin()->first.size();
  Rational spread;
  for (const auto& [rho, p] : distribution) spread += cocc_proportion(pi, rho);
  return epsilon * spread + Rational(static_cast<long long>(pi.size()), static_cast<long long>(n));
}

Permutation mix(const Permutation& a, const Permutation& b, const MixOptions& options) {
  to_size(BigInt(a.size()) * b.size(), "mixed permutation", options.max_size);
  return substitute_uniform(b, a);
}

Permutation mix(const Generator& a, const Generator& b, std::size_t m, const MixOptions& options) {
  return mix(a(m), b(m), options);
}

Rational mix_consecutive_bound(const Permutation& pi, const Permutation& a) {
  return Rational(static_cast<long long>(pi.size()), static_cast<long long>(a.size()));
}

Rational mix_classical_bound(std::size_t k, const Permutation& b) {
  return Rational(binomial(k, 2), BigInt(b.size()));
}

Generator sum_witness(Permutation rho) {
  return [rho = std::move(rho)](std::size_t m) { return repeat_sum(m, rho); };
}

Generator layered_witness(std::size_t layer_size) {
  if (layer_size == 0) throw EmptyError("layers must be non-empty");
  return [layer = Permutation::decreasing(layer_size)](std::size_t m) { return repeat_sum(m, layer); };
}

Generator plan_generator(std::shared_ptr<const RealizationPlan> plan) {
  return [plan = std::move(plan)](std::size_t m) { return plan->generate(m); };
}

}  // namespace permutope
