#include "permutope/overlap.hpp"

#include <algorithm>
#include <string>

namespace permutope {

namespace {

void check_k(std::size_t k, std::size_t max_k) {
  if (k < 2 || k > max_k) {
    throw CapacityError("k = " + std::to_string(k) + " outside the supported range [2, " +
                        std::to_string(max_k) + "]");
  }
}

}  // namespace

EdgeId OverlapGraph::edge_of(const Permutation& pi) const {
  if (pi.size() != k) {
    throw SizeError("pattern " + pi.to_string() + " is not of size " + std::to_string(k));
  }
  return lex_rank(pi);
}

Permutation begin_pattern(const Permutation& pi) {
  if (pi.size() < 2) throw SizeError("be/en need a pattern of size >= 2");
  return window_pattern(pi, 0, pi.size() - 1);
}

Permutation end_pattern(const Permutation& pi) {
  if (pi.size() < 2) throw SizeError("be/en need a pattern of size >= 2");
  return window_pattern(pi, 1, pi.size() - 1);
}

OverlapGraph build_overlap_graph(std::size_t k, std::size_t max_k) {
  check_k(k, max_k);
  OverlapGraph ov;
  ov.k = k;
  ov.vertex_patterns = all_permutations(k - 1);
  ov.edge_patterns = all_permutations(k);
  for (const Permutation& rho : ov.vertex_patterns) ov.graph.add_vertex(rho.to_string());
  for (const Permutation& pi : ov.edge_patterns) {
    ov.graph.add_edge(lex_rank(begin_pattern(pi)), lex_rank(end_pattern(pi)), pi.to_string());
  }
  return ov;
}

std::vector<EdgeId> window_ranks(const Permutation& sigma, std::size_t k) {
  if (k == 0 || sigma.size() < k) {
    throw SizeError("need 1 <= k <= |sigma| (k = " + std::to_string(k) + ", |sigma| = " +
                    std::to_string(sigma.size()) + ")");
  }
  std::vector<EdgeId> out;
  out.reserve(sigma.size() - k + 1);
  for (std::size_t i = 0; i + k <= sigma.size(); ++i) out.push_back(lex_rank(window_pattern(sigma, i, k)));
  return out;
}

Walk walk_of(const OverlapGraph& ov, const Permutation& sigma) {
  return Walk(ov.graph, window_ranks(sigma, ov.k));
}

Permutation permutation_of_walk(const OverlapGraph& ov, const Walk& w) {
  const std::size_t k = ov.k;
  const Permutation& first = ov.label(w[0]);
  const std::size_t n = w.size() + k - 1;

  // Doubly linked list of positions in increasing value order.
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> above(n, kNone), below(n, kNone);
  std::vector<std::size_t> by_value(k);
  for (std::size_t p = 0; p < k; ++p) by_value[first[p] - 1] = p;
  for (std::size_t r = 0; r + 1 < k; ++r) {
    above[by_value[r]] = by_value[r + 1];
    below[by_value[r + 1]] = by_value[r];
  }
  std::size_t bottom = by_value[0];

  for (std::size_t i = 1; i < w.size(); ++i) {
    const Permutation& pi = ov.label(w[i]);
    const std::size_t p = k - 1 + i;     // position of the new point
    const std::size_t window = p + 1 - k;  // first position of its window
    const int r = pi[k - 1];
    if (r > 1) {
      std::size_t anchor = kNone;
      for (std::size_t j = 0; j + 1 < k; ++j) {
        if (pi[j] == r - 1) anchor = window + j;
      }
      below[p] = anchor;
      above[p] = above[anchor];
      if (above[anchor] != kNone) below[above[anchor]] = p;
      above[anchor] = p;
    } else {
      std::size_t anchor = kNone;
      for (std::size_t j = 0; j + 1 < k; ++j) {
        if (pi[j] == 2) anchor = window + j;
      }
      above[p] = anchor;
      below[p] = below[anchor];
      if (below[anchor] != kNone) {
        above[below[anchor]] = p;
      } else {
        bottom = p;
      }
      below[anchor] = p;
    }
  }

  std::vector<int> word(n);
  int value = 1;
  for (std::size_t p = bottom; p != kNone; p = above[p]) word[p] = value++;
  return make_unchecked(std::move(word));
}

std::size_t cocc_via_walk(const Permutation& pi, const Permutation& sigma) {
  if (pi.size() > sigma.size()) throw SizeError("pattern longer than permutation");
  const auto ranks = window_ranks(sigma, pi.size());
  return static_cast<std::size_t>(std::count(ranks.begin(), ranks.end(), lex_rank(pi)));
}

Permutation eulerian_universal_permutation(std::size_t k, std::size_t max_k) {
  const OverlapGraph ov = build_overlap_graph(k, max_k);
  const Multigraph& g = ov.graph;
  std::vector<std::size_t> next(g.vertex_count(), 0);
  std::vector<EdgeId> edge_stack;
  std::vector<VertexId> vertex_stack{0};
  std::vector<EdgeId> circuit;
  while (!vertex_stack.empty()) {
    const VertexId v = vertex_stack.back();
    const auto outs = g.out_edges(v);
    if (next[v] < outs.size()) {
      const EdgeId e = outs[next[v]++];
      vertex_stack.push_back(g.edge(e).ar);
      edge_stack.push_back(e);
    } else {
      vertex_stack.pop_back();
      if (!edge_stack.empty()) {
        circuit.push_back(edge_stack.back());
        edge_stack.pop_back();
      }
    }
  }
  std::reverse(circuit.begin(), circuit.end());
  return permutation_of_walk(ov, Walk(g, std::move(circuit)));
}

namespace {

bool hamiltonian_search(const Multigraph& g, VertexId v, std::vector<bool>& visited,
                        std::vector<EdgeId>& path) {
  const std::size_t total = g.vertex_count();
  std::vector<EdgeId> outs(g.out_edges(v).begin(), g.out_edges(v).end());
  std::stable_sort(outs.begin(), outs.end(),
                   [&](EdgeId a, EdgeId b) { return g.edge(a).ar < g.edge(b).ar; });
  for (EdgeId e : outs) {
    const VertexId u = g.edge(e).ar;
    if (u == 0 && path.size() + 1 == total) {
      path.push_back(e);
      return true;
    }
    if (visited[u]) continue;
    visited[u] = true;
    path.push_back(e);
    if (hamiltonian_search(g, u, visited, path)) return true;
    path.pop_back();
    visited[u] = false;
  }
  return false;
}

}  // namespace

SimpleCycle hamiltonian_cycle(const OverlapGraph& ov, std::size_t max_k) {
  check_k(ov.k, max_k);
  std::vector<bool> visited(ov.graph.vertex_count(), false);
  visited[0] = true;
  std::vector<EdgeId> path;
  if (!hamiltonian_search(ov.graph, 0, visited, path)) {
    throw CapacityError("no Hamiltonian cycle found");
  }
  return SimpleCycle(ov.graph, std::move(path));
}

SimpleCycle hamiltonian_cycle(std::size_t k, std::size_t max_k) {
  check_k(k, max_k);
  return hamiltonian_cycle(build_overlap_graph(k, std::max(k, max_k)), max_k);
}

}  // namespace permutope
