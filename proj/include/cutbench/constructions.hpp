#pragma once

#include <cstdint>
#include <string>

#include "cutbench/graph.hpp"

namespace cutbench {

Graph complete_graph(int n);
/// Vertices 0..n-1 in cyclic order; n >= 3.
Graph cycle_graph(int n);
/// Vertices 0..n-1 in path order.
Graph path_graph(int n);
/// Parts 0..s-1 and s..s+t-1.
Graph complete_bipartite(int s, int t);
/// Q_d on binary strings of length d, adjacent when they differ in one bit.
Graph hypercube(int d);

/// K_{s,s} minus the perfect matching {x_i y_i}: parts X = 0..s-1 and
/// Y = s..2s-1, with x_i ~ y_j exactly when i != j. Requires s >= 2.
Graph kss_minus_pm(int s);

/// Named constructor for the command line: "complete", "cycle", "path",
/// "complete-bipartite" (a, b), "hypercube" (a), "kss-pm" (a).
Graph standard_graph(const std::string& family, int a, int b = 0);

/// Erdos-Renyi G(n, p) resampled until connected. The generator is
/// std::mt19937_64 seeded with `seed`; pair (u, v), u < v, visited in
/// lexicographic order, is an edge iff the top 53 bits of the next draw,
/// scaled by 2^-53, are below p. p is clamped to [0, 1]. p = 0 with n >= 2 can
/// never be connected and throws std::invalid_argument.
Graph random_connected(int n, double p, std::uint64_t seed);

}  // namespace cutbench
