#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "cutbench/vertex_set.hpp"

namespace cutbench {

/// Undirected edge with u < v after normalization.
struct Edge {
  int u = 0;
  int v = 0;

  constexpr Edge() = default;
  constexpr Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

  constexpr auto operator<=>(const Edge&) const = default;
};

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Immutable simple graph on vertices 0..n-1 with one bitmask row per vertex.
class Graph {
 public:
  /// The null graph K_0.
  Graph() = default;

  /// Validates symmetry, irreflexivity and range; throws GraphError otherwise.
  static Graph from_rows(std::vector<std::uint64_t> rows);

  int order() const { return static_cast<int>(rows_.size()); }
  VertexSet vertices() const { return VertexSet::range(order()); }
  VertexSet neighbors(int v) const { return VertexSet(rows_[static_cast<std::size_t>(v)]); }
  bool adjacent(int u, int v) const { return (rows_[static_cast<std::size_t>(u)] >> v) & 1U; }
  int degree(int v) const { return neighbors(v).size(); }
  int min_degree() const;
  int max_degree() const;
  int edge_count() const;
  bool is_complete() const { return 2 * edge_count() == order() * (order() - 1); }

  /// Edges in lexicographic order.
  std::vector<Edge> edges() const;
  std::span<const std::uint64_t> rows() const { return rows_; }

  bool operator==(const Graph&) const = default;

 private:
  explicit Graph(std::vector<std::uint64_t> rows) : rows_(std::move(rows)) {}

  std::vector<std::uint64_t> rows_;

  friend Graph build_graph(int n, std::span<const Edge> edges);
};

/// Duplicates are collapsed. Throws GraphError on order out of [0, 62], loops,
/// or endpoints outside 0..n-1.
Graph build_graph(int n, std::span<const Edge> edges);
inline Graph build_graph(int n, std::initializer_list<Edge> edges) {
  return build_graph(n, std::span<const Edge>(edges.begin(), edges.size()));
}

/// Induced subgraph on the complement of a removed set, with the vertices
/// renumbered in their original relative order.
struct Subgraph {
  Graph graph;
  /// original[new_label] = old label
  std::vector<int> original;

  /// Old label -> new label, or -1 for deleted vertices.
  std::vector<int> relabel_map(int old_order) const;
};

Subgraph delete_vertices(const Graph& g, VertexSet removed);

/// Maximal connected vertex sets sorted by smallest member. Empty iff n = 0.
std::vector<VertexSet> components(const Graph& g);

/// Vertices reachable from `start` while avoiding `blocked`.
VertexSet reachable_from(const Graph& g, int start, VertexSet blocked = {});

/// True iff g has exactly one component; the null graph is not connected.
bool is_connected(const Graph& g);

/// True iff g - removed is connected and nonempty; no relabeling performed.
bool remains_connected(const Graph& g, VertexSet removed);

/// Components of g - removed, in original labels, sorted by smallest member.
std::vector<VertexSet> components_after_removal(const Graph& g, VertexSet removed);

/// Requires g connected and s a proper subset of V(g); throws std::invalid_argument
/// otherwise. True iff at least two vertices remain and they are disconnected.
bool is_vertex_cut(const Graph& g, VertexSet s);

bool is_independent_set(const Graph& g, VertexSet s);

struct DistanceProfile {
  int order = 0;
  /// Row-major order x order hop counts.
  std::vector<int> dist;
  std::vector<int> eccentricity;
  int diameter = 0;
  VertexSet periphery;

  int distance(int u, int v) const {
    return dist[static_cast<std::size_t>(u * order + v)];
  }
};

/// Breadth-first search from every vertex. Throws std::domain_error
/// ("diameter undefined") on disconnected or null input.
DistanceProfile distance_profile(const Graph& g);

}  // namespace cutbench
