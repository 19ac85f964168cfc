#include "oracles.hpp"

#include <algorithm>
#include <numeric>

namespace oracle {

std::vector<int> naive_pattern(const Permutation& sigma, const std::vector<std::size_t>& positions) {
  std::vector<int> out;
  for (std::size_t a : positions) {
    int rank = 1;
    for (std::size_t b : positions) rank += sigma[b] < sigma[a];
    out.push_back(rank);
  }
  return out;
}

std::uint64_t naive_occ(const Permutation& pi, const Permutation& sigma) {
  const std::size_t n = sigma.size(), k = pi.size();
  const std::vector<int> target(pi.word().begin(), pi.word().end());
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
  std::uint64_t count = 0;
  do {
    std::vector<std::size_t> positions;
    for (std::size_t i = 0; i < n; ++i) {
      if (pick[i]) positions.push_back(i);
    }
    count += naive_pattern(sigma, positions) == target;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return count;
}

std::uint64_t naive_cocc(const Permutation& pi, const Permutation& sigma) {
  const std::vector<int> target(pi.word().begin(), pi.word().end());
  std::uint64_t count = 0;
  for (std::size_t s = 0; s + pi.size() <= sigma.size(); ++s) {
    std::vector<std::size_t> positions(pi.size());
    std::iota(positions.begin(), positions.end(), s);
    count += naive_pattern(sigma, positions) == target;
  }
  return count;
}

std::vector<std::vector<EdgeId>> brute_force_cycle_sets(const Multigraph& g) {
  const std::size_t m = g.edge_count(), n = g.vertex_count();
  std::vector<std::vector<EdgeId>> out;
  for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << m); ++bits) {
    std::vector<int> in(n, 0), outd(n, 0);
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    std::vector<EdgeId> edges;
    for (EdgeId e = 0; e < m; ++e) {
      if (!(bits >> e & 1)) continue;
      edges.push_back(e);
      ++outd[g.edge(e).st];
      ++in[g.edge(e).ar];
      parent[find(g.edge(e).st)] = find(g.edge(e).ar);
    }
    bool ok = true;
    std::size_t root = n;
    for (std::size_t v = 0; v < n && ok; ++v) {
      if (in[v] == 0 && outd[v] == 0) continue;
      ok = in[v] == 1 && outd[v] == 1;
      if (root == n) root = find(v);
      ok = ok && find(v) == root;
    }
    if (ok) out.push_back(edges);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool in_convex_hull(const std::vector<std::vector<Rational>>& points, const std::vector<Rational>& x) {
  if (points.empty()) return false;
  const std::size_t dims = x.size(), n = points.size();
  const std::size_t rows = dims + 1, cols = n + rows;  // lambdas, artificials
  std::vector<std::vector<Rational>> t(rows, std::vector<Rational>(cols + 1));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t j = 0; j < n; ++j) t[r][j] = r < dims ? points[j][r] : Rational(1);
    t[r][cols] = r < dims ? x[r] : Rational(1);
    if (t[r][cols] < 0) {
      for (std::size_t j = 0; j <= cols; ++j) t[r][j] = -t[r][j];
    }
    t[r][n + r] = 1;
  }
  std::vector<std::size_t> basis(rows);
  for (std::size_t r = 0; r < rows; ++r) basis[r] = n + r;
  auto cost = [&](std::size_t j) { return j >= n ? Rational(1) : Rational(0); };

  while (true) {
    std::size_t entering = cols;
    for (std::size_t j = 0; j < cols && entering == cols; ++j) {
      Rational reduced = cost(j);
      for (std::size_t r = 0; r < rows; ++r) reduced -= cost(basis[r]) * t[r][j];
      if (reduced < 0) entering = j;
    }
    if (entering == cols) break;
    std::size_t leave = rows;
    Rational best;
    for (std::size_t r = 0; r < rows; ++r) {
      if (t[r][entering] <= 0) continue;
      const Rational ratio = t[r][cols] / t[r][entering];
      if (leave == rows || ratio < best || (ratio == best && basis[r] < basis[leave])) {
        leave = r;
        best = ratio;
      }
    }
    if (leave == rows) break;  // unbounded cannot happen in phase one
    const Rational pivot = t[leave][entering];
    for (auto& v : t[leave]) v /= pivot;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == leave || t[r][entering] == 0) continue;
      const Rational f = t[r][entering];
      for (std::size_t j = 0; j <= cols; ++j) t[r][j] -= f * t[leave][j];
    }
    basis[leave] = entering;
  }
  Rational objective;
  for (std::size_t r = 0; r < rows; ++r) objective += cost(basis[r]) * t[r][cols];
  return objective == 0;
}

int affine_rank(const std::vector<std::vector<Rational>>& points) {
  if (points.empty()) return -1;
  std::vector<std::vector<Rational>> m;
  for (std::size_t i = 1; i < points.size(); ++i) {
    std::vector<Rational> d(points[i].size());
    for (std::size_t j = 0; j < d.size(); ++j) d[j] = points[i][j] - points[0][j];
    m.push_back(std::move(d));
  }
  int rank = 0;
  const std::size_t cols = points[0].size();
  for (std::size_t c = 0; c < cols && static_cast<std::size_t>(rank) < m.size(); ++c) {
    std::size_t p = static_cast<std::size_t>(rank);
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[static_cast<std::size_t>(rank)]);
    const auto& pivot_row = m[static_cast<std::size_t>(rank)];
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == static_cast<std::size_t>(rank) || m[r][c] == 0) continue;
      const Rational f = m[r][c] / pivot_row[c];
      for (std::size_t j = c; j < cols; ++j) m[r][j] -= f * pivot_row[j];
    }
    ++rank;
  }
  return rank;
}

Permutation random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  std::shuffle(w.begin(), w.end(), rng);
  return Permutation(std::move(w));
}

Multigraph random_multigraph(std::size_t vertices, std::size_t edges, std::mt19937_64& rng) {
  Multigraph g;
  for (std::size_t v = 0; v < vertices; ++v) g.add_vertex("v" + std::to_string(v));
  std::uniform_int_distribution<std::size_t> pick(0, vertices - 1);
  for (std::size_t e = 0; e < edges; ++e) g.add_edge(pick(rng), pick(rng), "e" + std::to_string(e));
  return g;
}

std::vector<EdgeId> random_walk(const Multigraph& g, std::size_t max_length, std::mt19937_64& rng) {
  if (g.edge_count() == 0 || max_length == 0) return {};
  std::vector<EdgeId> walk{std::uniform_int_distribution<EdgeId>(0, g.edge_count() - 1)(rng)};
  while (walk.size() < max_length) {
    const auto outs = g.out_edges(g.edge(walk.back()).ar);
    if (outs.empty()) break;
    walk.push_back(outs[std::uniform_int_distribution<std::size_t>(0, outs.size() - 1)(rng)]);
  }
  return walk;
}

Multigraph triangle_graph() {
  Multigraph g;
  const auto v1 = g.add_vertex("v1"), v2 = g.add_vertex("v2"), v3 = g.add_vertex("v3");
  g.add_edge(v2, v3, "e1");
  g.add_edge(v3, v1, "e2");
  g.add_edge(v1, v2, "e3");
  return g;
}

Multigraph pyramid_graph() {
  Multigraph g;
  const auto a = g.add_vertex("a"), b = g.add_vertex("b");
  g.add_edge(a, a, "loop");
  g.add_edge(a, b, "a1");
  g.add_edge(a, b, "a2");
  g.add_edge(b, a, "b1");
  g.add_edge(b, a, "b2");
  return g;
}

}  // namespace oracle
