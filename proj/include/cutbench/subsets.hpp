#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cutbench/graph.hpp"

namespace cutbench {

/// Pairwise vertex-disjoint edges of a host graph, sorted.
struct Matching {
  std::vector<Edge> pairs;

  int size() const { return static_cast<int>(pairs.size()); }
  VertexSet covered() const {
    VertexSet s;
    for (const Edge& e : pairs) s = s.with(e.u).with(e.v);
    return s;
  }
  bool operator==(const Matching&) const = default;
};

/// True iff every pair is an edge of g and the endpoints are pairwise distinct.
bool is_matching(const Graph& g, const Matching& m);

/// Graph with the matching's edges removed (vertices kept).
Graph remove_edges(const Graph& g, const std::vector<Edge>& edges);

// Streams. Each visitor returns true to continue and false to stop; the
// functions return false iff the visitor stopped the enumeration.

/// Every independent set of exactly k vertices, once each, in lexicographic
/// order of sorted member lists.
template <typename Visit>
bool for_each_independent_set(const Graph& g, int k, Visit&& visit);

/// Every k-subset of `pool`, in lexicographic order.
template <typename Visit>
bool for_each_subset(VertexSet pool, int k, Visit&& visit);

/// Every matching of exactly k edges, once each, in lexicographic order of the
/// sorted edge lists.
template <typename Visit>
bool for_each_matching(const Graph& g, int k, Visit&& visit);

std::vector<VertexSet> independent_sets_of_size(const Graph& g, int k);
std::vector<Matching> matchings_of_size(const Graph& g, int k);

/// alpha(g) by branch and bound.
int independence_number(const Graph& g);
/// nu(g) by exhaustive search on the lowest uncovered vertex.
int matching_number(const Graph& g);

struct LineGraph {
  Graph graph;
  /// edge_of[i] is the edge of the host graph represented by vertex i.
  std::vector<Edge> edge_of;
};

/// Vertices are the edges of g in lexicographic order. Throws GraphError when
/// g has more than 62 edges.
LineGraph line_graph(const Graph& g);

/// The lexicographically smallest 4-set inducing K_{1,3}, if any.
std::optional<VertexSet> find_induced_claw(const Graph& g);

// ---- template definitions ----

namespace detail {

template <typename Visit>
bool independent_rec(const Graph& g, VertexSet chosen, VertexSet candidates, int need, Visit& visit) {
  if (need == 0) return visit(chosen);
  while (candidates.size() >= need) {
    const int v = candidates.lowest();
    candidates = candidates.without(v);
    if (!independent_rec(g, chosen.with(v), candidates - g.neighbors(v), need - 1, visit)) return false;
  }
  return true;
}

template <typename Visit>
bool subset_rec(VertexSet chosen, VertexSet candidates, int need, Visit& visit) {
  if (need == 0) return visit(chosen);
  while (candidates.size() >= need) {
    const int v = candidates.lowest();
    candidates = candidates.without(v);
    if (!subset_rec(chosen.with(v), candidates, need - 1, visit)) return false;
  }
  return true;
}

template <typename Visit>
bool matching_rec(const std::vector<Edge>& edges, std::size_t from, VertexSet used, std::vector<Edge>& chosen, int need,
                  Visit& visit) {
  if (need == 0) return visit(Matching{chosen});
  for (std::size_t i = from; i + static_cast<std::size_t>(need) <= edges.size(); ++i) {
    const Edge e = edges[i];
    if (used.contains(e.u) || used.contains(e.v)) continue;
    chosen.push_back(e);
    const bool go_on = matching_rec(edges, i + 1, used.with(e.u).with(e.v), chosen, need - 1, visit);
    chosen.pop_back();
    if (!go_on) return false;
  }
  return true;
}

}  // namespace detail

template <typename Visit>
bool for_each_independent_set(const Graph& g, int k, Visit&& visit) {
  if (k < 0) return true;
  return detail::independent_rec(g, VertexSet{}, g.vertices(), k, visit);
}

template <typename Visit>
bool for_each_subset(VertexSet pool, int k, Visit&& visit) {
  if (k < 0) return true;
  return detail::subset_rec(VertexSet{}, pool, k, visit);
}

template <typename Visit>
bool for_each_matching(const Graph& g, int k, Visit&& visit) {
  if (k < 0) return true;
  const std::vector<Edge> edges = g.edges();
  std::vector<Edge> chosen;
  chosen.reserve(static_cast<std::size_t>(k));
  return detail::matching_rec(edges, 0, VertexSet{}, chosen, k, visit);
}

}  // namespace cutbench
