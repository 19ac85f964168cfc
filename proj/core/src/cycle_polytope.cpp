#include "permutope/cycle_polytope.hpp"

#include <algorithm>
#include <tuple>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

namespace permutope {

namespace {

void check_cycle_ids(const Multigraph& g, const SimpleCycle& c) {
  for (EdgeId e : c.edges()) {
    if (e >= g.edge_count()) {
      throw IndexError("cycle edge " + std::to_string(e) + " is not an edge of the graph");
    }
  }
}

std::string edge_text(const Multigraph& g, EdgeId e) {
  const Edge& edge = g.edge(e);
  std::string out = "edge " + std::to_string(e);
  if (!edge.label.empty()) out += " '" + edge.label + "'";
  return out;
}

}  // namespace

CycleVector cycle_vector(const Multigraph& g, const SimpleCycle& cycle) {
  check_cycle_ids(g, cycle);
  CycleVector v{std::vector<Rational>(g.edge_count()), cycle};
  const Rational share(1, static_cast<long long>(cycle.size()));
  for (EdgeId e : cycle.edges()) v.entries[e] = share;
  return v;
}

std::string Violation::describe(const Multigraph& g) const {
  switch (kind) {
    case Kind::kNegative:
      return "negative entry " + to_string(residual) + " at " + edge_text(g, index);
    case Kind::kNormalization:
      return "entries sum to 1 + (" + to_string(residual) + ")";
    case Kind::kConservation:
      return "inflow - outflow = " + to_string(residual) + " at vertex '" +
             g.vertex_name(index) + "'";
    case Kind::kOffCycleSupport:
      return "positive weight on " + edge_text(g, index) + ", which lies on no cycle";
  }
  return "unknown violation";
}

std::vector<std::size_t> FacePoset::faces_of_dimension(std::size_t d) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < faces.size(); ++i) {
    if (dimensions[i] == d) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> FacePoset::facets() const {
  if (dimensions.empty() || dimensions.back() == 0) return {};
  return faces_of_dimension(dimensions.back() - 1);
}

CyclePolytope::CyclePolytope(Multigraph graph)
    : graph_(std::move(graph)), full_(largest_full_subgraph(graph_)) {
  on_cycle_ = cycle_edges(graph_, std::vector<bool>(graph_.edge_count(), true));

  const std::size_t n = graph_.edge_count();
  equations_.lhs.emplace_back(n, Rational(1));
  equations_.rhs.emplace_back(1);
  for (VertexId v = 0; v < graph_.vertex_count(); ++v) {
    std::vector<Rational> row(n);
    for (EdgeId e : graph_.in_edges(v)) row[e] += 1;
    for (EdgeId e : graph_.out_edges(v)) row[e] -= 1;
    equations_.lhs.push_back(std::move(row));
    equations_.rhs.emplace_back(0);
  }
}

std::vector<CycleVector> CyclePolytope::vertices(const CycleEnumerationOptions& options) const {
  std::vector<CycleVector> out;
  for (const SimpleCycle& c : simple_cycles(graph_, options)) {
    out.push_back(cycle_vector(graph_, c));
  }
  return out;
}

std::size_t CyclePolytope::dimension_of_mask(const std::vector<bool>& mask) const {
  const auto edges = static_cast<std::size_t>(std::count(mask.begin(), mask.end(), true));
  // |E(H)| + comps >= |V| + 1 whenever H has an edge.
  return edges + connected_component_count(graph_, mask) - graph_.vertex_count() - 1;
}

std::size_t CyclePolytope::dimension() const {
  if (full_.graph.edge_count() == 0) throw EmptyPolytopeError("graph has no cycle");
  return dimension_of_mask(on_cycle_);
}

std::size_t CyclePolytope::dimension_by_equation_rank() const {
  if (full_.graph.edge_count() == 0) throw EmptyPolytopeError("graph has no cycle");
  RationalMatrix restricted;
  for (const auto& row : equations_.lhs) {
    std::vector<Rational> r;
    for (EdgeId e : full_.edge_map) r.push_back(row[e]);
    restricted.push_back(std::move(r));
  }
  return full_.edge_map.size() - rank(std::move(restricted));
}

std::optional<Violation> CyclePolytope::check(std::span<const Rational> x) const {
  if (x.size() != graph_.edge_count()) {
    throw IndexError("vector has " + std::to_string(x.size()) + " entries, graph has " +
                     std::to_string(graph_.edge_count()) + " edges");
  }
  for (EdgeId e = 0; e < x.size(); ++e) {
    if (x[e] < 0) return Violation{Violation::Kind::kNegative, e, x[e]};
  }
  Rational total;
  for (const Rational& v : x) total += v;
  if (total != 1) return Violation{Violation::Kind::kNormalization, 0, total - 1};
  for (VertexId v = 0; v < graph_.vertex_count(); ++v) {
    Rational balance;
    for (EdgeId e : graph_.in_edges(v)) balance += x[e];
    for (EdgeId e : graph_.out_edges(v)) balance -= x[e];
    if (balance != 0) return Violation{Violation::Kind::kConservation, v, balance};
  }
  for (EdgeId e = 0; e < x.size(); ++e) {
    if (x[e] > 0 && !on_cycle_[e]) return Violation{Violation::Kind::kOffCycleSupport, e, x[e]};
  }
  return std::nullopt;
}

std::vector<WeightedCycle> CyclePolytope::greedy_decomposition(std::span<const Rational> x) const {
  constexpr std::size_t kAbsent = static_cast<std::size_t>(-1);
  std::vector<Rational> residual(x.begin(), x.end());
  std::vector<WeightedCycle> out;
  std::vector<std::size_t> position(graph_.vertex_count(), kAbsent);

  while (true) {
    auto start = std::find_if(residual.begin(), residual.end(),
                              [](const Rational& r) { return r > 0; });
    if (start == residual.end()) break;

    std::vector<EdgeId> path{static_cast<EdgeId>(start - residual.begin())};
    std::vector<VertexId> touched{graph_.edge(path[0]).st};
    position[touched[0]] = 0;
    std::size_t cycle_begin = kAbsent;
    while (cycle_begin == kAbsent) {
      const VertexId v = graph_.edge(path.back()).ar;
      if (position[v] != kAbsent) {
        cycle_begin = position[v];
        break;
      }
      position[v] = path.size();
      touched.push_back(v);
      const auto outs = graph_.out_edges(v);
      auto next = std::find_if(outs.begin(), outs.end(),
                               [&](EdgeId e) { return residual[e] > 0; });
      if (next == outs.end()) throw std::logic_error("flow decomposition stalled");
      path.push_back(*next);
    }
    for (VertexId v : touched) position[v] = kAbsent;

    std::vector<EdgeId> cycle(path.begin() + static_cast<std::ptrdiff_t>(cycle_begin), path.end());
    Rational low = residual[cycle[0]];
    for (EdgeId e : cycle) low = std::min(low, residual[e]);
    for (EdgeId e : cycle) residual[e] -= low;
    const Rational weight = low * static_cast<long long>(cycle.size());
    out.push_back({weight, SimpleCycle(graph_, std::move(cycle))});
  }
  return out;
}

MembershipCertificate CyclePolytope::membership(std::span<const Rational> x) const {
  MembershipCertificate cert;
  cert.violation = check(x);
  cert.member = !cert.violation;
  if (cert.member) cert.decomposition = greedy_decomposition(x);
  return cert;
}

bool CyclePolytope::contains(std::span<const Rational> x) const { return !check(x); }

std::vector<WeightedCycle> CyclePolytope::convex_decomposition(std::span<const Rational> x) const {
  if (auto v = check(x)) throw NotInPolytopeError("not in P(G): " + v->describe(graph_));
  return greedy_decomposition(x);
}

std::vector<bool> CyclePolytope::mask_of(std::span<const EdgeId> edges) const {
  std::vector<bool> mask(graph_.edge_count(), false);
  for (EdgeId e : edges) {
    if (e >= graph_.edge_count()) throw IndexError("edge id " + std::to_string(e) + " out of range");
    mask[e] = true;
  }
  return mask;
}

FaceHandle CyclePolytope::face_from_subgraph(std::span<const EdgeId> edges) const {
  const auto mask = mask_of(edges);
  FaceHandle face;
  for (EdgeId e = 0; e < mask.size(); ++e) {
    if (mask[e]) face.edges.push_back(e);
  }
  if (face.edges.empty()) throw NotFullError("empty subgraph does not index a face");
  const auto on_cycle = cycle_edges(graph_, mask);
  for (EdgeId e : face.edges) {
    if (!on_cycle[e]) {
      throw NotFullError("subgraph is not full: " + edge_text(graph_, e) + " lies on no cycle inside it");
    }
  }
  return face;
}

std::size_t CyclePolytope::face_dimension(const FaceHandle& face) const {
  if (face.edges.empty()) throw NotFullError("empty subgraph does not index a face");
  return dimension_of_mask(mask_of(face.edges));
}

std::vector<SimpleCycle> CyclePolytope::face_vertices(const FaceHandle& face,
                                                      const CycleEnumerationOptions& options) const {
  Multigraph sub;
  for (VertexId v = 0; v < graph_.vertex_count(); ++v) sub.add_vertex(graph_.vertex_name(v));
  for (EdgeId e : face.edges) {
    if (e >= graph_.edge_count()) throw IndexError("edge id " + std::to_string(e) + " out of range");
    sub.add_edge(graph_.edge(e).st, graph_.edge(e).ar, graph_.edge(e).label);
  }
  std::vector<SimpleCycle> out;
  for (const SimpleCycle& c : simple_cycles(sub, options)) {
    std::vector<EdgeId> mapped;
    for (EdgeId e : c.edges()) mapped.push_back(face.edges[e]);
    out.emplace_back(graph_, std::move(mapped));
  }
  std::sort(out.begin(), out.end());
  return out;
}

FacePoset CyclePolytope::face_poset(const FacePosetOptions& options) const {
  std::vector<EdgeId> pool;
  for (EdgeId e = 0; e < graph_.edge_count(); ++e) {
    if (on_cycle_[e]) pool.push_back(e);
  }
  if (pool.size() > options.max_edges || pool.size() >= 63) {
    throw CapacityError("face poset: " + std::to_string(pool.size()) +
                        " cycle edges exceed the guard of " + std::to_string(options.max_edges));
  }
  const std::uint64_t limit = std::uint64_t{1} << pool.size();

  auto to_mask = [&](std::uint64_t bits) {
    std::vector<bool> mask(graph_.edge_count(), false);
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (bits >> i & 1) mask[pool[i]] = true;
    }
    return mask;
  };
  auto is_full = [&](std::uint64_t bits) {
    const auto mask = to_mask(bits);
    return cycle_edges(graph_, mask) == mask;
  };

  const unsigned threads = std::max(1u, options.threads);
  std::vector<std::vector<std::uint64_t>> found(threads);
  auto work = [&](unsigned t) {
    for (std::uint64_t bits = 1 + t; bits < limit; bits += threads) {
      if (is_full(bits)) found[t].push_back(bits);
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool_threads;
    for (unsigned t = 0; t < threads; ++t) pool_threads.emplace_back(work, t);
  }

  struct Entry {
    std::size_t dim;
    std::vector<EdgeId> edges;
    std::uint64_t bits;
  };
  std::vector<Entry> entries;
  for (const auto& chunk : found) {
    for (std::uint64_t bits : chunk) {
      Entry entry{dimension_of_mask(to_mask(bits)), {}, bits};
      for (std::size_t i = 0; i < pool.size(); ++i) {
        if (bits >> i & 1) entry.edges.push_back(pool[i]);
      }
      entries.push_back(std::move(entry));
    }
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    return std::tie(a.dim, a.edges) < std::tie(b.dim, b.edges);
  });

  FacePoset poset;
  for (const Entry& entry : entries) {
    poset.faces.push_back(FaceHandle{entry.edges});
    poset.dimensions.push_back(entry.dim);
  }
  for (std::size_t i = 0; i < entries.size(); ++i) {
    for (std::size_t j = 0; j < entries.size(); ++j) {
      if (entries[j].dim == entries[i].dim + 1 && (entries[i].bits & ~entries[j].bits) == 0) {
        poset.covers.emplace_back(i, j);
      }
    }
  }
  return poset;
}

bool CyclePolytope::skeleton_adjacent(const SimpleCycle& c1, const SimpleCycle& c2) const {
  check_cycle_ids(graph_, c1);
  check_cycle_ids(graph_, c2);
  if (c1 == c2) return false;
  std::vector<bool> mask(graph_.edge_count(), false);
  for (EdgeId e : c1.edges()) mask[e] = true;
  for (EdgeId e : c2.edges()) mask[e] = true;
  return dimension_of_mask(mask) == 1;
}

std::string CyclePolytope::to_json(const CycleEnumerationOptions& options) const {
  using nlohmann::ordered_json;
  ordered_json doc;
  ordered_json labels = ordered_json::array();
  for (const Edge& e : graph_.edges()) labels.push_back(e.label);
  doc["edges"] = labels;
  if (full_.graph.edge_count() == 0) {
    doc["dimension"] = nullptr;
  } else {
    doc["dimension"] = dimension();
  }
  ordered_json a = ordered_json::array();
  for (const auto& row : equations_.lhs) {
    ordered_json r = ordered_json::array();
    for (const Rational& v : row) r.push_back(to_string(v));
    a.push_back(r);
  }
  ordered_json b = ordered_json::array();
  for (const Rational& v : equations_.rhs) b.push_back(to_string(v));
  doc["equations"] = {{"A", a}, {"b", b}};
  ordered_json verts = ordered_json::array();
  for (const CycleVector& v : vertices(options)) {
    ordered_json item;
    item["cycle"] = std::vector<EdgeId>(v.source.edges().begin(), v.source.edges().end());
    ordered_json cycle_labels = ordered_json::array();
    for (EdgeId e : v.source.edges()) cycle_labels.push_back(graph_.edge(e).label);
    item["labels"] = cycle_labels;
    ordered_json entries = ordered_json::array();
    for (const Rational& r : v.entries) entries.push_back(to_string(r));
    item["vector"] = entries;
    verts.push_back(item);
  }
  doc["vertices"] = verts;
  return doc.dump(2) + "\n";
}

std::string CyclePolytope::to_h_representation() const {
  const std::size_t n = graph_.edge_count();
  std::ostringstream out;
  out << "H-representation\n";
  out << "variables " << n << "\n";
  out << "A x >= b\n";
  out << "rows " << n << "\n";
  for (EdgeId e = 0; e < n; ++e) {
    for (EdgeId f = 0; f < n; ++f) out << (f == e ? "1/1" : "0/1") << ' ';
    out << ">= 0/1\n";
  }
  out << "C x = d\n";
  out << "rows " << equations_.lhs.size() << "\n";
  for (std::size_t i = 0; i < equations_.lhs.size(); ++i) {
    for (const Rational& v : equations_.lhs[i]) out << to_string(v) << ' ';
    out << "= " << to_string(equations_.rhs[i]) << "\n";
  }
  return out.str();
}

}  // namespace permutope
