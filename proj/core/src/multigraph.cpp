#include "permutope/multigraph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace permutope {

VertexId Multigraph::add_vertex(std::string name) {
  if (by_name_.contains(name)) throw IndexError("duplicate vertex name '" + name + "'");
  const VertexId id = names_.size();
  by_name_.emplace(name, id);
  names_.push_back(std::move(name));
  out_.emplace_back();
  in_.emplace_back();
  return id;
}

EdgeId Multigraph::add_edge(VertexId st, VertexId ar, std::string label) {
  check_vertex(st);
  check_vertex(ar);
  const EdgeId id = edges_.size();
  edges_.push_back(Edge{st, ar, std::move(label)});
  out_[st].push_back(id);
  in_[ar].push_back(id);
  return id;
}

void Multigraph::check_vertex(VertexId v) const {
  if (v >= names_.size()) throw IndexError("vertex id " + std::to_string(v) + " out of range");
}

const Edge& Multigraph::edge(EdgeId e) const {
  if (e >= edges_.size()) throw IndexError("edge id " + std::to_string(e) + " out of range");
  return edges_[e];
}

const std::string& Multigraph::vertex_name(VertexId v) const {
  check_vertex(v);
  return names_[v];
}

std::optional<VertexId> Multigraph::find_vertex(std::string_view name) const {
  auto it = by_name_.find(std::string(name));
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

std::span<const EdgeId> Multigraph::out_edges(VertexId v) const {
  check_vertex(v);
  return out_[v];
}

std::span<const EdgeId> Multigraph::in_edges(VertexId v) const {
  check_vertex(v);
  return in_[v];
}

Walk::Walk(const Multigraph& g, std::vector<EdgeId> edges) : edges_(std::move(edges)) {
  if (edges_.empty()) throw InvalidWalkError("walk must be non-empty");
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = g.edge(edges_[i]);
    if (i + 1 < edges_.size() && e.ar != g.edge(edges_[i + 1]).st) {
      throw InvalidWalkError("edges " + std::to_string(edges_[i]) + " and " +
                             std::to_string(edges_[i + 1]) + " do not chain");
    }
  }
}

SimpleCycle::SimpleCycle(const Multigraph& g, std::vector<EdgeId> edges) : edges_(std::move(edges)) {
  if (edges_.empty()) throw InvalidWalkError("cycle must be non-empty");
  std::vector<bool> seen(g.vertex_count(), false);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = g.edge(edges_[i]);
    const Edge& next = g.edge(edges_[(i + 1) % edges_.size()]);
    if (e.ar != next.st) throw InvalidWalkError("cycle edges do not chain");
    if (seen[e.st]) throw InvalidWalkError("cycle repeats a vertex");
    seen[e.st] = true;
  }
  auto smallest = std::min_element(edges_.begin(), edges_.end());
  std::rotate(edges_.begin(), smallest, edges_.end());
}

bool SimpleCycle::contains(EdgeId e) const {
  return std::find(edges_.begin(), edges_.end(), e) != edges_.end();
}

std::vector<std::vector<int>> incidence_matrix(const Multigraph& g) {
  std::vector<std::vector<int>> m(g.vertex_count(), std::vector<int>(g.edge_count(), 0));
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    if (edge.is_loop()) {
      m[edge.st][e] = 1;
    } else {
      m[edge.st][e] = -1;
      m[edge.ar][e] = 1;
    }
  }
  return m;
}

std::vector<EdgeId> continuations(const Multigraph& g, EdgeId e) {
  const auto out = g.out_edges(g.edge(e).ar);
  return {out.begin(), out.end()};
}

namespace {

std::vector<bool> full_mask(const Multigraph& g) { return std::vector<bool>(g.edge_count(), true); }

// Iterative Tarjan; returns the component index of every vertex.
std::vector<std::size_t> tarjan(const Multigraph& g, const std::vector<bool>& mask,
                                std::size_t& component_count) {
  const std::size_t n = g.vertex_count();
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(n, kUnset), low(n, 0), comp(n, kUnset);
  std::vector<bool> on_stack(n, false);
  std::vector<VertexId> stack;
  std::vector<std::pair<VertexId, std::size_t>> call;  // (vertex, next out-edge position)
  std::size_t counter = 0;
  component_count = 0;

  for (VertexId root = 0; root < n; ++root) {
    if (index[root] != kUnset) continue;
    call.emplace_back(root, 0);
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      auto& [v, pos] = call.back();
      const auto out = g.out_edges(v);
      if (pos < out.size()) {
        const EdgeId e = out[pos++];
        if (!mask[e]) continue;
        const VertexId w = g.edge(e).ar;
        if (index[w] == kUnset) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      const VertexId done = v;
      call.pop_back();
      if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
      if (low[done] == index[done]) {
        VertexId w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp[w] = component_count;
        } while (w != done);
        ++component_count;
      }
    }
  }
  return comp;
}

std::vector<std::vector<VertexId>> group_by(const std::vector<std::size_t>& comp, std::size_t count) {
  std::vector<std::vector<VertexId>> groups(count);
  for (VertexId v = 0; v < comp.size(); ++v) groups[comp[v]].push_back(v);
  std::sort(groups.begin(), groups.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return groups;
}

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

bool is_strongly_connected(const Multigraph& g) {
  if (g.vertex_count() == 0) throw IndexError("graph has no vertices");
  std::size_t count = 0;
  tarjan(g, full_mask(g), count);
  return count == 1;
}

std::vector<std::vector<VertexId>> strongly_connected_components(const Multigraph& g) {
  return strongly_connected_components(g, full_mask(g));
}

std::vector<std::vector<VertexId>> strongly_connected_components(const Multigraph& g,
                                                                 const std::vector<bool>& edge_mask) {
  std::size_t count = 0;
  const auto comp = tarjan(g, edge_mask, count);
  return group_by(comp, count);
}

std::vector<std::vector<VertexId>> connected_components(const Multigraph& g) {
  DisjointSets sets(g.vertex_count());
  for (const Edge& e : g.edges()) sets.unite(e.st, e.ar);
  std::vector<std::size_t> comp(g.vertex_count());
  std::vector<std::size_t> id_of_root(g.vertex_count(), static_cast<std::size_t>(-1));
  std::size_t count = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const std::size_t r = sets.find(v);
    if (id_of_root[r] == static_cast<std::size_t>(-1)) id_of_root[r] = count++;
    comp[v] = id_of_root[r];
  }
  return group_by(comp, count);
}

std::size_t connected_component_count(const Multigraph& g, const std::vector<bool>& edge_mask) {
  DisjointSets sets(g.vertex_count());
  std::size_t count = g.vertex_count();
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (edge_mask[e] && sets.unite(g.edge(e).st, g.edge(e).ar)) --count;
  }
  return count;
}

std::vector<bool> cycle_edges(const Multigraph& g, const std::vector<bool>& edge_mask) {
  std::size_t count = 0;
  const auto comp = tarjan(g, edge_mask, count);
  std::vector<bool> on_cycle(g.edge_count(), false);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    on_cycle[e] = edge_mask[e] && comp[g.edge(e).st] == comp[g.edge(e).ar];
  }
  return on_cycle;
}

FullSubgraph largest_full_subgraph(const Multigraph& g) {
  const auto keep = cycle_edges(g, full_mask(g));
  FullSubgraph result;
  for (VertexId v = 0; v < g.vertex_count(); ++v) result.graph.add_vertex(g.vertex_name(v));
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!keep[e]) continue;
    const Edge& edge = g.edge(e);
    result.graph.add_edge(edge.st, edge.ar, edge.label);
    result.edge_map.push_back(e);
  }
  return result;
}

WalkDecomposition decompose_walk(const Multigraph& g, const Walk& w) {
  constexpr std::size_t kAbsent = static_cast<std::size_t>(-1);
  WalkDecomposition out;
  std::vector<std::size_t> position(g.vertex_count(), kAbsent);
  std::vector<VertexId> path_vertices{g.edge(w[0]).st};
  std::vector<EdgeId> path_edges;
  position[path_vertices.front()] = 0;

  for (EdgeId e : w.edges()) {
    path_edges.push_back(e);
    const VertexId v = g.edge(e).ar;
    if (const std::size_t p = position[v]; p != kAbsent) {
      // First repetition: the edges since v was last entered close a simple cycle.
      std::vector<EdgeId> cycle(path_edges.begin() + static_cast<std::ptrdiff_t>(p), path_edges.end());
      path_edges.resize(p);
      for (std::size_t i = p + 1; i < path_vertices.size(); ++i) position[path_vertices[i]] = kAbsent;
      path_vertices.resize(p + 1);
      out.cycles.emplace_back(g, std::move(cycle));
    } else {
      position[v] = path_vertices.size();
      path_vertices.push_back(v);
    }
  }
  out.tail = std::move(path_edges);
  return out;
}

namespace {

class JohnsonSearch {
 public:
  JohnsonSearch(const Multigraph& g, const std::function<void(const SimpleCycle&)>& sink,
                std::size_t max_cycles)
      : g_(g), sink_(sink), max_cycles_(max_cycles), blocked_(g.vertex_count(), false),
        blocked_by_(g.vertex_count()), comp_(g.vertex_count(), 0) {}

  std::size_t run() {
    const std::size_t n = g_.vertex_count();
    for (start_ = 0; start_ < n; ++start_) {
      // Strongly connected component of `start_` within vertices >= start_.
      std::vector<bool> mask(g_.edge_count(), false);
      for (EdgeId e = 0; e < g_.edge_count(); ++e) {
        mask[e] = g_.edge(e).st >= start_ && g_.edge(e).ar >= start_;
      }
      std::size_t count = 0;
      comp_ = tarjan(g_, mask, count);
      bool has_edge = false;
      for (EdgeId e : g_.out_edges(start_)) {
        const VertexId w = g_.edge(e).ar;
        has_edge |= w >= start_ && comp_[w] == comp_[start_];
      }
      if (!has_edge) continue;
      for (VertexId v = start_; v < n; ++v) {
        blocked_[v] = false;
        blocked_by_[v].clear();
      }
      circuit(start_);
    }
    return emitted_;
  }

 private:
  bool in_scope(VertexId w) const { return w >= start_ && comp_[w] == comp_[start_]; }

  bool circuit(VertexId v) {
    bool found = false;
    blocked_[v] = true;
    for (EdgeId e : g_.out_edges(v)) {
      const VertexId w = g_.edge(e).ar;
      if (!in_scope(w)) continue;
      if (w == start_) {
        path_.push_back(e);
        emit();
        path_.pop_back();
        found = true;
      } else if (!blocked_[w]) {
        path_.push_back(e);
        if (circuit(w)) found = true;
        path_.pop_back();
      }
    }
    if (found) {
      unblock(v);
    } else {
      for (EdgeId e : g_.out_edges(v)) {
        const VertexId w = g_.edge(e).ar;
        if (!in_scope(w)) continue;
        auto& list = blocked_by_[w];
        if (std::find(list.begin(), list.end(), v) == list.end()) list.push_back(v);
      }
    }
    return found;
  }

  void unblock(VertexId v) {
    std::vector<VertexId> pending{v};
    while (!pending.empty()) {
      const VertexId u = pending.back();
      pending.pop_back();
      blocked_[u] = false;
      for (VertexId w : blocked_by_[u]) {
        if (blocked_[w]) pending.push_back(w);
      }
      blocked_by_[u].clear();
    }
  }

  void emit() {
    if (emitted_ >= max_cycles_) {
      throw CapacityError("simple-cycle enumeration exceeded the cap of " +
                          std::to_string(max_cycles_) + " cycles");
    }
    ++emitted_;
    sink_(SimpleCycle(g_, path_));
  }

  const Multigraph& g_;
  const std::function<void(const SimpleCycle&)>& sink_;
  std::size_t max_cycles_;
  std::vector<bool> blocked_;
  std::vector<std::vector<VertexId>> blocked_by_;
  std::vector<std::size_t> comp_;
  std::vector<EdgeId> path_;
  VertexId start_ = 0;
  std::size_t emitted_ = 0;
};

}  // namespace

std::size_t enumerate_simple_cycles(const Multigraph& g,
                                    const std::function<void(const SimpleCycle&)>& sink,
                                    const CycleEnumerationOptions& options) {
  return JohnsonSearch(g, sink, options.max_cycles).run();
}

std::vector<SimpleCycle> simple_cycles(const Multigraph& g, const CycleEnumerationOptions& options) {
  std::vector<SimpleCycle> out;
  enumerate_simple_cycles(g, [&](const SimpleCycle& c) { out.push_back(c); }, options);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace permutope
