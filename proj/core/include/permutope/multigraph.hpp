#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "permutope/errors.hpp"

namespace permutope {

using VertexId = std::size_t;
using EdgeId = std::size_t;

struct Edge {
  VertexId st;
  VertexId ar;
  std::string label;

  bool is_loop() const noexcept { return st == ar; }
  bool operator==(const Edge&) const = default;
};

/// Directed multigraph: parallel edges and loops allowed, dense edge ids,
/// unique vertex names. Built once via add_vertex/add_edge, then used
/// read-only.
class Multigraph {
 public:
  Multigraph() = default;

  VertexId add_vertex(std::string name);
  EdgeId add_edge(VertexId st, VertexId ar, std::string label = {});

  std::size_t vertex_count() const noexcept { return names_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  const Edge& edge(EdgeId e) const;
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::string& vertex_name(VertexId v) const;
  std::optional<VertexId> find_vertex(std::string_view name) const;

  /// Outgoing / incoming edge ids of v, in increasing id order.
  std::span<const EdgeId> out_edges(VertexId v) const;
  std::span<const EdgeId> in_edges(VertexId v) const;
  std::size_t out_degree(VertexId v) const { return out_edges(v).size(); }
  std::size_t in_degree(VertexId v) const { return in_edges(v).size(); }

  bool operator==(const Multigraph& other) const {
    return names_ == other.names_ && edges_ == other.edges_;
  }

 private:
  void check_vertex(VertexId v) const;

  std::vector<std::string> names_;
  std::unordered_map<std::string, VertexId> by_name_;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> out_;
  std::vector<std::vector<EdgeId>> in_;
};

/// A non-empty chained edge sequence: ar(e_i) = st(e_{i+1}).
class Walk {
 public:
  Walk(const Multigraph& g, std::vector<EdgeId> edges);

  std::span<const EdgeId> edges() const noexcept { return edges_; }
  std::size_t size() const noexcept { return edges_.size(); }
  EdgeId operator[](std::size_t i) const noexcept { return edges_[i]; }
  bool operator==(const Walk&) const = default;

 private:
  std::vector<EdgeId> edges_;
};

/// A closed walk with distinct edges and distinct vertices, rotated so the
/// smallest edge id comes first.
class SimpleCycle {
 public:
  SimpleCycle(const Multigraph& g, std::vector<EdgeId> edges);

  std::span<const EdgeId> edges() const noexcept { return edges_; }
  std::size_t size() const noexcept { return edges_.size(); }
  bool contains(EdgeId e) const;

  auto operator<=>(const SimpleCycle&) const = default;
  bool operator==(const SimpleCycle&) const = default;

 private:
  std::vector<EdgeId> edges_;
};

/// Edge-multiset decomposition of a walk into simple cycles plus a tail
/// that repeats no vertex.
struct WalkDecomposition {
  std::vector<SimpleCycle> cycles;
  std::vector<EdgeId> tail;
};

/// Largest subgraph in which every edge lies on a cycle. All vertices are
/// kept; `edge_map[i]` is the original id of edge i of `graph`.
struct FullSubgraph {
  Multigraph graph;
  std::vector<EdgeId> edge_map;
};

/// Row-major |V| x |E| signed incidence matrix; loops contribute a lone +1.
std::vector<std::vector<int>> incidence_matrix(const Multigraph& g);

/// {e' : st(e') = ar(e)} in increasing id order.
std::vector<EdgeId> continuations(const Multigraph& g, EdgeId e);

bool is_strongly_connected(const Multigraph& g);

/// Components as sorted vertex lists, ordered by their smallest vertex.
std::vector<std::vector<VertexId>> strongly_connected_components(const Multigraph& g);
std::vector<std::vector<VertexId>> connected_components(const Multigraph& g);

/// Same, restricted to the edges flagged in `edge_mask` (all vertices kept).
std::vector<std::vector<VertexId>> strongly_connected_components(
    const Multigraph& g, const std::vector<bool>& edge_mask);
std::size_t connected_component_count(const Multigraph& g, const std::vector<bool>& edge_mask);

/// Edges whose endpoints share a strongly connected component within the
/// masked subgraph, i.e. edges lying on some cycle of that subgraph.
std::vector<bool> cycle_edges(const Multigraph& g, const std::vector<bool>& edge_mask);

FullSubgraph largest_full_subgraph(const Multigraph& g);

/// Prunes the simple cycle closed at each first vertex repetition.
WalkDecomposition decompose_walk(const Multigraph& g, const Walk& w);

struct CycleEnumerationOptions {
  std::size_t max_cycles = 1'000'000;
};

/// Johnson-style enumeration extended to multigraphs. Every simple cycle is
/// passed to `sink` exactly once in canonical rotation; the total is
/// returned. CapacityError when more than `max_cycles` cycles exist.
std::size_t enumerate_simple_cycles(const Multigraph& g,
                                    const std::function<void(const SimpleCycle&)>& sink,
                                    const CycleEnumerationOptions& options = {});

/// Collects enumerate_simple_cycles output, sorted.
std::vector<SimpleCycle> simple_cycles(const Multigraph& g,
                                       const CycleEnumerationOptions& options = {});

}  // namespace permutope
