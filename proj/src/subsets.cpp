#include "cutbench/subsets.hpp"

#include <algorithm>

namespace cutbench {
namespace {

int alpha_rec(const Graph& g, VertexSet pool, int taken, int best) {
  if (pool.empty()) return std::max(best, taken);
  if (taken + pool.size() <= best) return best;
  int pivot = -1;
  int pivot_degree = -1;
  for (int v : pool) {
    const int d = (g.neighbors(v) & pool).size();
    if (d > pivot_degree) {
      pivot = v;
      pivot_degree = d;
    }
  }
  // Edgeless pool: take all of it.
  if (pivot_degree == 0) return std::max(best, taken + pool.size());
  best = alpha_rec(g, pool - g.neighbors(pivot) - VertexSet::single(pivot), taken + 1, best);
  return alpha_rec(g, pool.without(pivot), taken, best);
}

int nu_rec(const Graph& g, VertexSet pool) {
  if (pool.size() < 2) return 0;
  const int v = pool.lowest();
  const VertexSet rest = pool.without(v);
  const int cap = pool.size() / 2;
  int best = 0;
  for (int u : g.neighbors(v) & rest) {
    best = std::max(best, 1 + nu_rec(g, rest.without(u)));
    if (best == cap) return best;
  }
  return std::max(best, nu_rec(g, rest));
}

}  // namespace

bool is_matching(const Graph& g, const Matching& m) {
  VertexSet used;
  for (const Edge& e : m.pairs) {
    if (e.u < 0 || e.v >= g.order() || e.u == e.v || !g.adjacent(e.u, e.v)) return false;
    if (used.contains(e.u) || used.contains(e.v)) return false;
    used = used.with(e.u).with(e.v);
  }
  return true;
}

Graph remove_edges(const Graph& g, const std::vector<Edge>& edges) {
  std::vector<std::uint64_t> rows(g.rows().begin(), g.rows().end());
  for (const Edge& e : edges) {
    rows[static_cast<std::size_t>(e.u)] &= ~(std::uint64_t{1} << e.v);
    rows[static_cast<std::size_t>(e.v)] &= ~(std::uint64_t{1} << e.u);
  }
  return Graph::from_rows(std::move(rows));
}

std::vector<VertexSet> independent_sets_of_size(const Graph& g, int k) {
  std::vector<VertexSet> out;
  for_each_independent_set(g, k, [&](VertexSet s) {
    out.push_back(s);
    return true;
  });
  return out;
}

std::vector<Matching> matchings_of_size(const Graph& g, int k) {
  std::vector<Matching> out;
  for_each_matching(g, k, [&](const Matching& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

int independence_number(const Graph& g) { return alpha_rec(g, g.vertices(), 0, 0); }

int matching_number(const Graph& g) { return nu_rec(g, g.vertices()); }

LineGraph line_graph(const Graph& g) {
  LineGraph out;
  out.edge_of = g.edges();
  const std::size_t m = out.edge_of.size();
  if (m > static_cast<std::size_t>(kMaxOrder)) {
    throw GraphError("line graph would have " + std::to_string(m) + " vertices; the limit is 62");
  }
  std::vector<std::uint64_t> rows(m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const Edge a = out.edge_of[i];
      const Edge b = out.edge_of[j];
      if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) {
        rows[i] |= std::uint64_t{1} << j;
        rows[j] |= std::uint64_t{1} << i;
      }
    }
  }
  out.graph = Graph::from_rows(std::move(rows));
  return out;
}

std::optional<VertexSet> find_induced_claw(const Graph& g) {
  std::optional<VertexSet> found;
  for_each_subset(g.vertices(), 4, [&](VertexSet s) {
    int centres = 0;
    int leaves = 0;
    for (int v : s) {
      const int d = (g.neighbors(v) & s).size();
      if (d == 3) ++centres;
      if (d == 1) ++leaves;
    }
    if (centres == 1 && leaves == 3) {
      found = s;
      return false;
    }
    return true;
  });
  return found;
}

}  // namespace cutbench
