#pragma once

// Brute-force reference routines for the test suites. Nothing here calls the
// library's algorithms: graphs are held as plain boolean matrices, and every
// quantity is computed by exhaustive enumeration.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cutbench/certificate.hpp"
#include "cutbench/checkers.hpp"
#include "cutbench/graph.hpp"

namespace oracle {

struct Matrix {
  int n = 0;
  std::vector<std::vector<bool>> a;

  explicit Matrix(int order = 0) : n(order), a(static_cast<std::size_t>(order), std::vector<bool>(static_cast<std::size_t>(order), false)) {}
  bool adj(int u, int v) const { return a[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]; }
  void set(int u, int v, bool on = true) {
    a[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = on;
    a[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = on;
  }
  int degree(int v) const;
  int min_degree() const;
  std::vector<std::pair<int, int>> edges() const;
};

Matrix from_graph(const cutbench::Graph& g);
/// Independent graph6 decoder (n <= 62).
Matrix decode_graph6(const std::string& text);

/// Is the graph minus the vertices flagged in `removed` (bitmask) connected and nonempty?
bool connected_without(const Matrix& m, std::uint64_t removed);
/// Components after deleting `removed`, each as a bitmask, sorted by lowest member.
std::vector<std::uint64_t> components_without(const Matrix& m, std::uint64_t removed);
/// Connected after deleting the given edges (vertices kept)?
bool connected_without_edges(const Matrix& m, const std::vector<std::pair<int, int>>& edges);

/// n >= k+1 and no set of fewer than k vertices disconnects.
bool k_connected(const Matrix& m, int k);
int kappa(const Matrix& m);
/// Fewest edges whose deletion disconnects (0 for disconnected or n <= 1).
int lambda(const Matrix& m);
/// Smallest vertex set avoiding s,t that separates them; s,t nonadjacent.
int min_separator(const Matrix& m, int s, int t);
/// No set of fewer than k edges disconnects, and the graph is connected with n >= 2.
bool k_edge_connected(const Matrix& m, int k);

int alpha(const Matrix& m);
int nu(const Matrix& m);
long count_independent_sets(const Matrix& m, int k);
long count_matchings(const Matrix& m, int k);
bool is_independent(const Matrix& m, std::uint64_t set);

/// All-pairs distances (Floyd-Warshall); -1 where unreachable.
std::vector<std::vector<int>> distances(const Matrix& m);
int diameter(const Matrix& m);
std::uint64_t periphery(const Matrix& m);

/// Number of isomorphism classes of graphs on n vertices (Burnside over S_n).
long burnside_graph_count(int n);

/// Isomorphism by trying every permutation (n <= 8).
bool isomorphic_brute(const Matrix& a, const Matrix& b);

/// Re-derives a certificate's claims from its graph6 text alone. Returns an
/// empty string when the certificate checks out, otherwise the reason.
/// With `premises` false the (expensive) premise re-derivation is skipped and
/// only the witness or counterexample claims are checked.
std::string recheck(const cutbench::Certificate& c, const cutbench::CheckParams& params, bool premises = true);

}  // namespace oracle
