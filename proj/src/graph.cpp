#include "cutbench/graph.hpp"

#include <algorithm>
#include <string>

namespace cutbench {

std::string VertexSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int v : *this) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  }
  out += '}';
  return out;
}

Graph Graph::from_rows(std::vector<std::uint64_t> rows) {
  const int n = static_cast<int>(rows.size());
  if (n > kMaxOrder) throw GraphError("graph order " + std::to_string(n) + " exceeds 62");
  const std::uint64_t in_range = VertexSet::range(n).bits();
  for (int u = 0; u < n; ++u) {
    const std::uint64_t row = rows[static_cast<std::size_t>(u)];
    if ((row & ~in_range) != 0) throw GraphError("adjacency row references a vertex outside the graph");
    if ((row >> u) & 1U) throw GraphError("loop at vertex " + std::to_string(u));
    for (std::uint64_t b = row; b != 0; b &= b - 1) {
      const int v = std::countr_zero(b);
      if (((rows[static_cast<std::size_t>(v)] >> u) & 1U) == 0) throw GraphError("adjacency is not symmetric");
    }
  }
  return Graph(std::move(rows));
}

Graph build_graph(int n, std::span<const Edge> edges) {
  if (n < 0 || n > kMaxOrder) throw GraphError("graph order " + std::to_string(n) + " outside [0, 62]");
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
  for (const Edge& e : edges) {
    if (e.u == e.v) throw GraphError("loop edge at vertex " + std::to_string(e.u));
    if (e.u < 0 || e.v >= n) {
      throw GraphError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") has an endpoint outside 0.." +
                       std::to_string(n - 1));
    }
    rows[static_cast<std::size_t>(e.u)] |= std::uint64_t{1} << e.v;
    rows[static_cast<std::size_t>(e.v)] |= std::uint64_t{1} << e.u;
  }
  return Graph(std::move(rows));
}

int Graph::min_degree() const {
  int best = order() == 0 ? 0 : order();
  for (std::uint64_t row : rows_) best = std::min(best, std::popcount(row));
  return best;
}

int Graph::max_degree() const {
  int best = 0;
  for (std::uint64_t row : rows_) best = std::max(best, std::popcount(row));
  return best;
}

int Graph::edge_count() const {
  int total = 0;
  for (std::uint64_t row : rows_) total += std::popcount(row);
  return total / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < order(); ++u) {
    for (int v : neighbors(u)) {
      if (v > u) out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<int> Subgraph::relabel_map(int old_order) const {
  std::vector<int> map(static_cast<std::size_t>(old_order), -1);
  for (std::size_t i = 0; i < original.size(); ++i) map[static_cast<std::size_t>(original[i])] = static_cast<int>(i);
  return map;
}

Subgraph delete_vertices(const Graph& g, VertexSet removed) {
  if (!removed.subset_of(g.vertices())) throw GraphError("deleted set is not a subset of the vertex set");
  Subgraph out;
  const VertexSet kept = g.vertices() - removed;
  out.original = kept.members();
  const std::vector<int> map = out.relabel_map(g.order());
  std::vector<std::uint64_t> rows;
  rows.reserve(out.original.size());
  for (int old : out.original) {
    std::uint64_t row = 0;
    for (int w : g.neighbors(old) & kept) row |= std::uint64_t{1} << map[static_cast<std::size_t>(w)];
    rows.push_back(row);
  }
  out.graph = Graph::from_rows(std::move(rows));
  return out;
}

VertexSet reachable_from(const Graph& g, int start, VertexSet blocked) {
  const VertexSet allowed = g.vertices() - blocked;
  VertexSet seen = VertexSet::single(start);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    for (int v : frontier) next |= g.neighbors(v);
    next = (next & allowed) - seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

std::vector<VertexSet> components_after_removal(const Graph& g, VertexSet removed) {
  std::vector<VertexSet> out;
  VertexSet rest = g.vertices() - removed;
  while (!rest.empty()) {
    const VertexSet comp = reachable_from(g, rest.lowest(), removed);
    out.push_back(comp);
    rest -= comp;
  }
  return out;
}

std::vector<VertexSet> components(const Graph& g) { return components_after_removal(g, {}); }

bool remains_connected(const Graph& g, VertexSet removed) {
  const VertexSet rest = g.vertices() - removed;
  if (rest.empty()) return false;
  return reachable_from(g, rest.lowest(), removed) == rest;
}

bool is_connected(const Graph& g) { return remains_connected(g, {}); }

bool is_vertex_cut(const Graph& g, VertexSet s) {
  if (!s.subset_of(g.vertices()) || s == g.vertices()) {
    throw std::invalid_argument("is_vertex_cut: set must be a proper subset of the vertex set");
  }
  if (!is_connected(g)) throw std::invalid_argument("is_vertex_cut: graph must be connected");
  if (g.order() - s.size() < 2) return false;
  return !remains_connected(g, s);
}

bool is_independent_set(const Graph& g, VertexSet s) {
  for (int v : s) {
    if (!(g.neighbors(v) & s).empty()) return false;
  }
  return true;
}

DistanceProfile distance_profile(const Graph& g) {
  if (!is_connected(g)) throw std::domain_error("diameter undefined: graph is not connected");
  const int n = g.order();
  DistanceProfile p;
  p.order = n;
  p.dist.assign(static_cast<std::size_t>(n * n), 0);
  p.eccentricity.assign(static_cast<std::size_t>(n), 0);
  for (int s = 0; s < n; ++s) {
    VertexSet seen = VertexSet::single(s);
    VertexSet frontier = seen;
    int depth = 0;
    while (true) {
      VertexSet next;
      for (int v : frontier) next |= g.neighbors(v);
      next -= seen;
      if (next.empty()) break;
      ++depth;
      for (int v : next) p.dist[static_cast<std::size_t>(s * n + v)] = depth;
      seen |= next;
      frontier = next;
    }
    p.eccentricity[static_cast<std::size_t>(s)] = depth;
    p.diameter = std::max(p.diameter, depth);
  }
  for (int v = 0; v < n; ++v) {
    if (p.eccentricity[static_cast<std::size_t>(v)] == p.diameter) p.periphery = p.periphery.with(v);
  }
  return p;
}

}  // namespace cutbench
