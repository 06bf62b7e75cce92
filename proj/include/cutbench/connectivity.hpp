#pragma once

#include <array>
#include <vector>

#include "cutbench/graph.hpp"

namespace cutbench {

enum class CutKind { vertex, edge };

/// A separating set together with the two vertex sets it separates.
/// sides[0] is the component of the remainder holding its smallest vertex;
/// sides[1] is everything else that remains.
struct CutWitness {
  CutKind kind = CutKind::vertex;
  VertexSet vertices;
  std::vector<Edge> edges;
  std::array<VertexSet, 2> sides;

  int size() const { return kind == CutKind::vertex ? vertices.size() : static_cast<int>(edges.size()); }
};

/// Maximum number of internally disjoint s-t paths, computed as a unit-capacity
/// flow in the vertex-split digraph. Adjacent pairs return n-1, which no vertex
/// cut can reach. Flow stops once `limit` paths are found (pass -1 for no limit).
int local_vertex_connectivity(const Graph& g, int s, int t, int limit = -1);

/// kappa(g). kappa(K_n) = n-1, kappa(K_1) = 0, disconnected graphs give 0.
int vertex_connectivity(const Graph& g);

/// n >= k+1 and kappa(g) >= k, with early exit. Requires k >= 1.
bool is_k_connected(const Graph& g, int k);

/// A minimum vertex cut; among the cuts discovered by the flow computations the
/// lexicographically smallest set is returned. Throws std::invalid_argument on
/// complete, disconnected, or fewer-than-3-vertex input.
CutWitness min_vertex_cut(const Graph& g);

/// Maximum number of edge-disjoint s-t paths, stopping at `limit` when >= 0.
int local_edge_connectivity(const Graph& g, int s, int t, int limit = -1);

/// lambda(g): min over t of the edge flow from vertex 0. lambda(K_1) = 0 and
/// disconnected graphs give 0.
int edge_connectivity(const Graph& g);

/// lambda(g) >= k. Requires k >= 1; K_1 is never k-edge-connected.
bool is_k_edge_connected(const Graph& g, int k);

/// A minimum edge cut (flow from vertex 0). Requires a connected graph on >= 2 vertices.
CutWitness min_edge_cut(const Graph& g);

}  // namespace cutbench
