#pragma once

#include <cstddef>
#include <vector>

#include "permutope/multigraph.hpp"
#include "permutope/permutation.hpp"

namespace permutope {

/// OV_k: one vertex per pattern of S_{k-1}, one edge be(pi) -> en(pi) per
/// pi in S_k. Vertex and edge ids are lexicographic ranks, so edge e carries
/// the label lex_unrank(k, e).
struct OverlapGraph {
  std::size_t k = 0;
  Multigraph graph;
  std::vector<Permutation> vertex_patterns;  // S_{k-1}, lex order
  std::vector<Permutation> edge_patterns;    // S_k, lex order

  const Permutation& label(EdgeId e) const { return edge_patterns.at(e); }
  EdgeId edge_of(const Permutation& pi) const;
};

/// Pattern of the first / last |pi| - 1 entries. SizeError when |pi| < 2.
Permutation begin_pattern(const Permutation& pi);
Permutation end_pattern(const Permutation& pi);

/// CapacityError unless 2 <= k <= max_k.
OverlapGraph build_overlap_graph(std::size_t k, std::size_t max_k = 7);

/// Ids (= lex ranks) of the consecutive k-patterns of sigma, left to right.
/// SizeError when |sigma| < k.
std::vector<EdgeId> window_ranks(const Permutation& sigma, std::size_t k);

/// W_k(sigma) as a walk in ov.graph.
Walk walk_of(const OverlapGraph& ov, const Permutation& sigma);

/// Greedy preimage under W_k. Each new point lands in the value gap next
/// to its nearest lower neighbour inside the current window (directly
/// above it), or directly below the window minimum when it is the new
/// minimum. walk_of(ov, permutation_of_walk(ov, w)) == w.
Permutation permutation_of_walk(const OverlapGraph& ov, const Walk& w);

/// cocc computed by counting labels along W_k(sigma).
std::size_t cocc_via_walk(const Permutation& pi, const Permutation& sigma);

/// Permutation of size k! + k - 1 containing every pattern of S_k exactly
/// once consecutively (Hierholzer on OV_k from vertex 0, smallest edge id
/// first).
Permutation eulerian_universal_permutation(std::size_t k, std::size_t max_k = 7);

/// A simple cycle through every vertex of OV_k, found by depth-first search
/// in lexicographic order.
SimpleCycle hamiltonian_cycle(const OverlapGraph& ov, std::size_t max_k = 6);
SimpleCycle hamiltonian_cycle(std::size_t k, std::size_t max_k = 6);

}  // namespace permutope
