// Acceptance checks. Each criterion prints one PASS/FAIL line with its
// wall time; the exit status is non-zero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "permutope/permutope.hpp"

using namespace permutope;

namespace {

Permutation P(const char* s) { return Permutation::parse(s); }

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool condition, const std::string& what) {
    if (!condition) {
      if (ok) detail = what;
      ok = false;
    }
  }
};

Rational consecutive_distance(const Permutation& sigma, const PatternVector& target) {
  return linf_distance(proportion_vector(target.k(), sigma, PatternKind::kConsecutive), target);
}

Outcome overlap_structure() {
  Outcome o;
  for (std::size_t k = 2; k <= 5; ++k) {
    const auto ov = build_overlap_graph(k);
    const auto tag = "k=" + std::to_string(k);
    o.require(ov.graph.vertex_count() == static_cast<std::size_t>(factorial(k - 1)), tag + " vertex count");
    o.require(ov.graph.edge_count() == static_cast<std::size_t>(factorial(k)), tag + " edge count");
    o.require(is_strongly_connected(ov.graph), tag + " not strongly connected");
    for (VertexId v = 0; v < ov.graph.vertex_count(); ++v) {
      o.require(ov.graph.in_degree(v) == k && ov.graph.out_degree(v) == k, tag + " degree");
    }
  }
  return o;
}

Outcome dimensions() {
  Outcome o;
  for (std::size_t k : {3u, 4u}) {
    const FeasibleRegion region(k);
    const std::size_t expected = static_cast<std::size_t>(factorial(k) - factorial(k - 1));
    const auto tag = "k=" + std::to_string(k);
    o.require(region.polytope().dimension_by_equation_rank() == expected, tag + " equation rank");
    o.require(region.dimension() == expected, tag + " component formula");
  }
  const FeasibleRegion p3(3);
  std::vector<std::vector<Rational>> pts;
  for (auto& v : p3.polytope().vertices()) pts.push_back(std::move(v.entries));
  o.require(oracle::affine_rank(pts) == 4, "affine rank of P_3 vertices");
  return o;
}

Outcome worked_examples() {
  Outcome o;
  const auto ov = build_overlap_graph(4);
  const Walk w = walk_of(ov, P("628451793"));
  std::vector<std::string> got;
  for (EdgeId e : w.edges()) got.push_back(ov.label(e).to_string());
  o.require(got == std::vector<std::string>{"3142", "1423", "4231", "2314", "2134", "1342"}, "walk of 628451793");
  o.require(permutation_of_walk(ov, w) == P("819452673"), "permutation of the walk");
  o.require(incidence_matrix(oracle::triangle_graph()) ==
                std::vector<std::vector<int>>{{0, 1, -1}, {-1, 0, 1}, {1, -1, 0}},
            "triangle incidence matrix");
  return o;
}

Outcome p3_combinatorics() {
  Outcome o;
  const auto ov = build_overlap_graph(3);
  const CyclePolytope p(ov.graph);
  const auto cycles = simple_cycles(ov.graph);
  o.require(cycles.size() == 6, "vertex count");
  std::vector<std::vector<EdgeId>> sets;
  for (const auto& c : cycles) {
    std::vector<EdgeId> s(c.edges().begin(), c.edges().end());
    std::sort(s.begin(), s.end());
    sets.push_back(std::move(s));
  }
  std::sort(sets.begin(), sets.end());
  o.require(sets == oracle::brute_force_cycle_sets(ov.graph), "brute force cycle sets");
  o.require(p.face_poset().facets().size() == 6, "facet count");
  std::vector<EdgeId> without_321;
  for (const char* s : {"123", "132", "213", "231", "312"}) without_321.push_back(ov.edge_of(P(s)));
  const auto face = p.face_from_subgraph(without_321);
  o.require(p.face_vertices(face).size() == 5, "pyramid face vertices");
  o.require(p.face_dimension(face) == 3, "pyramid face dimension");
  return o;
}

Outcome membership_equivalence() {
  Outcome o;
  const FeasibleRegion region(3);
  std::vector<std::vector<Rational>> pts;
  for (auto& v : region.polytope().vertices()) pts.push_back(std::move(v.entries));
  std::mt19937_64 rng(2024);
  std::size_t members = 0, disagreements = 0;
  const std::size_t trials = 1200;
  for (std::size_t trial = 0; trial < trials; ++trial) {
    std::vector<Rational> x(6);
    std::vector<long long> w(6);
    long long total = 0;
    for (auto& v : w) total += v = static_cast<long long>(rng() % 7);
    if (total == 0) w[trial % 6] = total = 1;
    if (trial % 2 == 0) {
      for (std::size_t i = 0; i < 6; ++i) {
        for (std::size_t e = 0; e < 6; ++e) x[e] += Rational(w[i], total) * pts[i][e];
      }
    } else {
      for (std::size_t e = 0; e < 6; ++e) x[e] = Rational(w[e], total);
    }
    const bool hull = oracle::in_convex_hull(pts, x);
    members += hull;
    disagreements += feasible_membership(3, PatternVector::from_vector(3, x)).member != hull;
  }
  o.require(disagreements == 0, std::to_string(disagreements) + " disagreements");
  o.require(members > 0 && members < trials, "sample not mixed");
  o.detail = o.ok ? std::to_string(trials) + " vectors, " + std::to_string(members) + " members" : o.detail;
  return o;
}

Outcome realization() {
  Outcome o;
  const FeasibleRegion region(3);
  const std::size_t m = 1000;
  std::vector<PatternVector> targets;
  for (const auto& v : region.polytope().vertices()) targets.push_back(PatternVector::from_vector(3, v.entries));
  targets.push_back(PatternVector::uniform(3));
  for (const auto& target : targets) {
    const auto plan = plan_realization(region, target);
    const Permutation sigma = plan.generate(m);
    const Rational d = consecutive_distance(sigma, target);
    o.require(d <= Rational(1, 100), "distance above 0.01");
    o.require(d <= plan.error_bound(m), "distance above the stated bound");
  }
  const auto loop = PatternVector::from_vector(3, {1, 0, 0, 0, 0, 0});
  const Permutation id = realize(region, loop, m);
  o.require(consecutive_distance(id, loop) == Rational(2, static_cast<long long>(m + 2)), "loop closed form");
  return o;
}

Outcome universal_permutations() {
  Outcome o;
  for (std::size_t k = 2; k <= 4; ++k) {
    const auto sigma = eulerian_universal_permutation(k);
    o.require(sigma.size() == static_cast<std::size_t>(factorial(k)) + k - 1, "size for k=" + std::to_string(k));
    for (const auto& pi : all_permutations(k)) {
      o.require(oracle::naive_cocc(pi, sigma) == 1, "count of " + pi.to_string());
    }
  }
  return o;
}

Outcome mixing_bounds() {
  Outcome o;
  const FeasibleRegion region(3);
  const auto plan = plan_realization(region, PatternVector::uniform(3));
  std::vector<std::string> unattained;
  std::vector<Permutation> sides_a;
  for (long long wanted : {50, 100, 200}) {
    std::size_t best = 1;
    for (std::size_t m = 1; m <= 64; ++m) {
      const BigInt gap = abs(plan.size(m) - wanted);
      if (gap < abs(plan.size(best) - wanted)) best = m;
    }
    if (plan.size(best) != wanted) {
      unattained.push_back(std::to_string(wanted) + " (closest " + plan.size(best).str() + ")");
    }
    sides_a.push_back(plan.generate(best));
  }
  const auto witness = sum_witness(P("21"));
  for (const auto& a : sides_a) {
    for (std::size_t q : {25u, 50u}) {
      const Permutation b = witness(q);
      const Permutation c = mix(a, b);
      for (std::size_t k = 1; k <= 3; ++k) {
        for (const auto& pi : all_permutations(k)) {
          const Rational dc = abs(cocc_proportion(pi, c) - cocc_proportion(pi, a));
          const Rational dl = abs(occ_proportion(pi, c) - occ_proportion(pi, b));
          const auto tag = " |A|=" + std::to_string(a.size()) + " |B|=" + std::to_string(b.size()) + " pi=" + pi.to_string();
          o.require(dc <= mix_consecutive_bound(pi, a), "consecutive bound" + tag);
          o.require(dl <= mix_classical_bound(3, b), "classical bound" + tag);
        }
      }
    }
  }
  if (o.ok && !unattained.empty()) {
    o.ok = false;
    o.detail = "bounds hold, but realize(uniform) has sizes 6m+8 and cannot produce |A| =";
    for (const auto& s : unattained) o.detail += " " + s;
  }
  return o;
}

Outcome walk_decompositions() {
  Outcome o;
  std::mt19937_64 rng(77);
  const auto ov3 = build_overlap_graph(3), ov4 = build_overlap_graph(4);
  std::size_t walks = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    Multigraph random;
    const Multigraph* g = nullptr;
    if (trial % 3 == 0) {
      g = &ov3.graph;
    } else if (trial % 3 == 1) {
      g = &ov4.graph;
    } else {
      random = oracle::random_multigraph(1 + rng() % 7, 1 + rng() % 20, rng);
      g = &random;
    }
    const auto edges = oracle::random_walk(*g, 1 + rng() % 60, rng);
    if (edges.empty()) continue;
    ++walks;
    const auto d = decompose_walk(*g, Walk(*g, edges));
    std::vector<EdgeId> all(d.tail);
    for (const auto& c : d.cycles) all.insert(all.end(), c.edges().begin(), c.edges().end());
    std::vector<EdgeId> original(edges);
    std::sort(all.begin(), all.end());
    std::sort(original.begin(), original.end());
    o.require(all == original, "multiset re-sum");
    if (!d.tail.empty()) {
      std::vector<VertexId> seen{g->edge(d.tail[0]).st};
      for (EdgeId e : d.tail) seen.push_back(g->edge(e).ar);
      std::sort(seen.begin(), seen.end());
      o.require(std::adjacent_find(seen.begin(), seen.end()) == seen.end(), "tail repeats a vertex");
    }
  }
  o.require(walks == 10000, "only " + std::to_string(walks) + " walks");
  return o;
}

Outcome property_suite() {
  Outcome o;
  const std::string command = std::string("\"") + PERMUTOPE_TEST_BINARY +
                              "\" --gtest_filter='*Property*' --gtest_brief=1 > /dev/null 2>&1";
  o.require(std::system(command.c_str()) == 0, "property tests failed");
  return o;
}

struct Criterion {
  const char* name;
  double limit_seconds;
  std::function<Outcome()> check;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"overlap graph structure, k = 2..5", 1, overlap_structure},
      {"dimension k! - (k-1)! for k = 3, 4", 10, dimensions},
      {"walk, greedy inverse and incidence matrix examples", 1, worked_examples},
      {"P_3 vertices, facets and pyramid face", 5, p3_combinatorics},
      {"membership agrees with convex hull", 30, membership_equivalence},
      {"realization convergence at m = 1000", 30, realization},
      {"universal permutations, k = 2..4", 5, universal_permutations},
      {"mixing bounds", 60, mixing_bounds},
      {"walk decomposition soundness", 30, walk_decompositions},
      {"property suite", 300, property_suite},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& c = criteria[i];
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.check();
    } catch (const std::exception& e) {
      outcome.ok = false;
      outcome.detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (outcome.ok && seconds > c.limit_seconds) {
      outcome.ok = false;
      outcome.detail = "over the time limit";
    }
    failures += !outcome.ok;
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(3);
    line << (outcome.ok ? "PASS" : "FAIL") << " [" << i + 1 << "] " << c.name << " (" << seconds << " s, limit "
         << c.limit_seconds << " s)";
    if (!outcome.detail.empty()) line << ": " << outcome.detail;
    std::cout << line.str() << std::endl;
  }
  std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failures == 0 ? 0 : 1;
}
