#pragma once

// Brute-force reference implementations used only by the tests. None of
// them shares code paths with the library algorithms they check.

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "permutope/multigraph.hpp"
#include "permutope/permutation.hpp"
#include "permutope/rational.hpp"

namespace oracle {

using permutope::EdgeId;
using permutope::Multigraph;
using permutope::Permutation;
using permutope::Rational;

/// Pattern of sigma restricted to the given 0-based positions, by pairwise
/// comparison counting.
std::vector<int> naive_pattern(const Permutation& sigma, const std::vector<std::size_t>& positions);

/// occ by walking every k-subset of positions.
std::uint64_t naive_occ(const Permutation& pi, const Permutation& sigma);
/// cocc by sliding a window.
std::uint64_t naive_cocc(const Permutation& pi, const Permutation& sigma);

/// Every simple cycle as a sorted edge set, found by testing every edge
/// subset (in = out = 1 at touched vertices, weakly connected).
std::vector<std::vector<EdgeId>> brute_force_cycle_sets(const Multigraph& g);

/// Exact phase-one simplex (Bland's rule): is x a convex combination of
/// the given points?
bool in_convex_hull(const std::vector<std::vector<Rational>>& points, const std::vector<Rational>& x);

/// Affine rank of a point set (dimension of its affine hull), -1 when empty.
int affine_rank(const std::vector<std::vector<Rational>>& points);

Permutation random_permutation(std::size_t n, std::mt19937_64& rng);

/// Random multigraph with loops and parallel edges allowed.
Multigraph random_multigraph(std::size_t vertices, std::size_t edges, std::mt19937_64& rng);

/// Random walk of at most `max_length` edges, or empty when the graph has
/// no edges.
std::vector<EdgeId> random_walk(const Multigraph& g, std::size_t max_length, std::mt19937_64& rng);

/// Triangle v1 -> v2 -> v3 -> v1 with edges e1: v2->v3, e2: v3->v1,
/// e3: v1->v2.
Multigraph triangle_graph();

/// Vertices a, b; a loop at a, edges a1, a2: a -> b and b1, b2: b -> a.
Multigraph pyramid_graph();

}  // namespace oracle
