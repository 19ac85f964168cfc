#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "permutope/linear_algebra.hpp"
#include "permutope/multigraph.hpp"
#include "permutope/rational.hpp"

namespace permutope {

/// Normalized edge-frequency vector of a simple cycle: 1/|C| on the cycle's
/// edges, 0 elsewhere.
struct CycleVector {
  std::vector<Rational> entries;
  SimpleCycle source;
};

CycleVector cycle_vector(const Multigraph& g, const SimpleCycle& cycle);

struct WeightedCycle {
  Rational weight;
  SimpleCycle cycle;
};

/// First constraint a point fails, in check order.
struct Violation {
  enum class Kind {
    kNegative,         // index = edge, residual = the entry
    kNormalization,    // residual = sum - 1
    kConservation,     // index = vertex, residual = inflow - outflow
    kOffCycleSupport,  // index = edge with positive weight lying on no cycle
  };
  Kind kind;
  std::size_t index = 0;
  Rational residual;

  std::string describe(const Multigraph& g) const;
};

struct MembershipCertificate {
  bool member = false;
  std::optional<Violation> violation;      // set when !member
  std::vector<WeightedCycle> decomposition;  // set when member
};

/// A face P(G)_H, identified by the edge set of a non-empty full subgraph H.
struct FaceHandle {
  std::vector<EdgeId> edges;  // sorted
  bool operator==(const FaceHandle&) const = default;
  auto operator<=>(const FaceHandle&) const = default;
};

struct FacePoset {
  std::vector<FaceHandle> faces;      // sorted by (dimension, edges)
  std::vector<std::size_t> dimensions;  // parallel to faces
  /// (i, j) when face i is a facet of face j.
  std::vector<std::pair<std::size_t, std::size_t>> covers;

  std::vector<std::size_t> faces_of_dimension(std::size_t d) const;
  /// Faces one dimension below the whole polytope.
  std::vector<std::size_t> facets() const;
};

struct FacePosetOptions {
  std::size_t max_edges = 12;
  unsigned threads = 1;
};

/// Equality system A x = b: the first row is the normalization sum x_e = 1,
/// then one conservation row per vertex (inflow - outflow, loops cancel).
struct EquationSystem {
  RationalMatrix lhs;
  std::vector<Rational> rhs;
};

/// P(G) = conv{e_C : C simple cycle of G}, in exact arithmetic.
class CyclePolytope {
 public:
  explicit CyclePolytope(Multigraph graph);

  const Multigraph& graph() const noexcept { return graph_; }
  const FullSubgraph& full_part() const noexcept { return full_; }
  const EquationSystem& equations() const noexcept { return equations_; }

  /// One vector per simple cycle, ordered by canonical cycle.
  std::vector<CycleVector> vertices(const CycleEnumerationOptions& options = {}) const;

  /// |E(H)| - |V(G)| + #components(H) - 1 on the largest full subgraph H.
  /// EmptyPolytopeError for acyclic graphs.
  std::size_t dimension() const;

  /// |E(H)| minus the rank of the equation system restricted to E(H).
  std::size_t dimension_by_equation_rank() const;

  /// Exact test of x >= 0, sum x = 1, conservation at every vertex, and
  /// support inside the full part. Members carry a convex decomposition.
  MembershipCertificate membership(std::span<const Rational> x) const;
  bool contains(std::span<const Rational> x) const;

  /// Greedy cycle extraction; weights sum to 1 and reproduce x exactly.
  /// NotInPolytopeError for non-members.
  std::vector<WeightedCycle> convex_decomposition(std::span<const Rational> x) const;

  /// NotFullError unless every listed edge lies on a cycle inside the set.
  FaceHandle face_from_subgraph(std::span<const EdgeId> edges) const;
  std::size_t face_dimension(const FaceHandle& face) const;
  /// Simple cycles of H, i.e. the polytope vertices lying on the face.
  std::vector<SimpleCycle> face_vertices(const FaceHandle& face,
                                         const CycleEnumerationOptions& options = {}) const;
  FacePoset face_poset(const FacePosetOptions& options = {}) const;

  /// Whether e_C1 and e_C2 span an edge of the polytope.
  bool skeleton_adjacent(const SimpleCycle& c1, const SimpleCycle& c2) const;

  /// {"edges": [...], "dimension": d, "equations": {"A": [[...]], "b": [...]},
  ///  "vertices": [{"cycle": [...], "labels": [...], "vector": [...]}]}
  std::string to_json(const CycleEnumerationOptions& options = {}) const;

  /// Plain-text H-representation: "A x >= b" block then "C x = d" block.
  std::string to_h_representation() const;

 private:
  std::optional<Violation> check(std::span<const Rational> x) const;
  std::vector<WeightedCycle> greedy_decomposition(std::span<const Rational> x) const;
  std::vector<bool> mask_of(std::span<const EdgeId> edges) const;
  std::size_t dimension_of_mask(const std::vector<bool>& mask) const;

  Multigraph graph_;
  FullSubgraph full_;
  std::vector<bool> on_cycle_;
  EquationSystem equations_;
};

}  // namespace permutope
