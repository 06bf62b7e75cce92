#include "cutbench/constructions.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

namespace cutbench {
namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

Graph complete_graph(int n) {
  require(n >= 1, "complete graph needs n >= 1");
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return build_graph(n, edges);
}

Graph cycle_graph(int n) {
  require(n >= 3, "cycle needs n >= 3");
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return build_graph(n, edges);
}

Graph path_graph(int n) {
  require(n >= 1, "path needs n >= 1");
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return build_graph(n, edges);
}

Graph complete_bipartite(int s, int t) {
  require(s >= 1 && t >= 1, "complete bipartite graph needs both parts nonempty");
  std::vector<Edge> edges;
  for (int x = 0; x < s; ++x) {
    for (int y = 0; y < t; ++y) edges.emplace_back(x, s + y);
  }
  return build_graph(s + t, edges);
}

Graph hypercube(int d) {
  require(d >= 0 && d <= 5, "hypercube dimension must be in [0, 5]");
  const int n = 1 << d;
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) {
    for (int b = 0; b < d; ++b) {
      const int w = v ^ (1 << b);
      if (v < w) edges.emplace_back(v, w);
    }
  }
  return build_graph(n, edges);
}

Graph kss_minus_pm(int s) {
  require(s >= 2, "K_{s,s} minus a perfect matching needs s >= 2");
  std::vector<Edge> edges;
  for (int i = 0; i < s; ++i) {
    for (int j = 0; j < s; ++j) {
      if (i != j) edges.emplace_back(i, s + j);
    }
  }
  return build_graph(2 * s, edges);
}

Graph standard_graph(const std::string& family, int a, int b) {
  if (family == "complete") return complete_graph(a);
  if (family == "cycle") return cycle_graph(a);
  if (family == "path") return path_graph(a);
  if (family == "complete-bipartite") return complete_bipartite(a, b);
  if (family == "hypercube") return hypercube(a);
  if (family == "kss-pm") return kss_minus_pm(a);
  throw std::invalid_argument("unknown graph family '" + family + "'");
}

Graph random_connected(int n, double p, std::uint64_t seed) {
  require(n >= 1 && n <= kMaxOrder, "random graph order must be in [1, 62]");
  p = std::clamp(p, 0.0, 1.0);
  require(!(p == 0.0 && n >= 2), "random_connected: p = 0 never yields a connected graph");
  std::mt19937_64 rng(seed);
  constexpr double kScale = 1.0 / 9007199254740992.0;  // 2^-53
  while (true) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        const double draw = static_cast<double>(rng() >> 11) * kScale;
        if (draw < p) edges.emplace_back(u, v);
      }
    }
    Graph g = build_graph(n, edges);
    if (is_connected(g)) return g;
  }
}

}  // namespace cutbench
