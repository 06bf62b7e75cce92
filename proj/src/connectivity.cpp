#include "cutbench/connectivity.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace cutbench {
namespace {

// Dense residual network; at most 124 nodes for a split 62-vertex graph.
class FlowNetwork {
 public:
  explicit FlowNetwork(int nodes) : nodes_(nodes), cap_(static_cast<std::size_t>(nodes * nodes), 0) {}

  void add_arc(int from, int to, int capacity) { at(from, to) += capacity; }

  // Augments along shortest paths until no path remains or `limit` is reached.
  int max_flow(int source, int sink, int limit) {
    int flow = 0;
    std::vector<int> parent(static_cast<std::size_t>(nodes_));
    std::vector<int> queue(static_cast<std::size_t>(nodes_));
    while (limit < 0 || flow < limit) {
      std::fill(parent.begin(), parent.end(), -1);
      parent[static_cast<std::size_t>(source)] = source;
      int head = 0;
      int tail = 0;
      queue[static_cast<std::size_t>(tail++)] = source;
      while (head < tail && parent[static_cast<std::size_t>(sink)] < 0) {
        const int x = queue[static_cast<std::size_t>(head++)];
        for (int y = 0; y < nodes_; ++y) {
          if (parent[static_cast<std::size_t>(y)] < 0 && at(x, y) > 0) {
            parent[static_cast<std::size_t>(y)] = x;
            queue[static_cast<std::size_t>(tail++)] = y;
          }
        }
      }
      if (parent[static_cast<std::size_t>(sink)] < 0) break;
      // Every path carries one unit: internal arcs are unit capacity.
      for (int y = sink; y != source; y = parent[static_cast<std::size_t>(y)]) {
        const int x = parent[static_cast<std::size_t>(y)];
        at(x, y) -= 1;
        at(y, x) += 1;
      }
      ++flow;
    }
    return flow;
  }

  // Nodes reachable from `from` in the residual network.
  std::vector<bool> reachable(int from) const { return search(from, false); }
  // Nodes that can reach `to` in the residual network.
  std::vector<bool> co_reachable(int to) const { return search(to, true); }

 private:
  int& at(int x, int y) { return cap_[static_cast<std::size_t>(x * nodes_ + y)]; }
  int at(int x, int y) const { return cap_[static_cast<std::size_t>(x * nodes_ + y)]; }

  std::vector<bool> search(int start, bool reverse) const {
    std::vector<bool> seen(static_cast<std::size_t>(nodes_), false);
    std::vector<int> stack{start};
    seen[static_cast<std::size_t>(start)] = true;
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (int y = 0; y < nodes_; ++y) {
        const int c = reverse ? at(y, x) : at(x, y);
        if (c > 0 && !seen[static_cast<std::size_t>(y)]) {
          seen[static_cast<std::size_t>(y)] = true;
          stack.push_back(y);
        }
      }
    }
    return seen;
  }

  int nodes_;
  std::vector<int> cap_;
};

int in_node(int v) { return 2 * v; }
int out_node(int v) { return 2 * v + 1; }

FlowNetwork split_network(const Graph& g, int s, int t) {
  const int n = g.order();
  FlowNetwork net(2 * n);
  for (int v = 0; v < n; ++v) net.add_arc(in_node(v), out_node(v), (v == s || v == t) ? n : 1);
  for (const Edge& e : g.edges()) {
    net.add_arc(out_node(e.u), in_node(e.v), n);
    net.add_arc(out_node(e.v), in_node(e.u), n);
  }
  return net;
}

FlowNetwork edge_network(const Graph& g) {
  FlowNetwork net(g.order());
  for (const Edge& e : g.edges()) {
    net.add_arc(e.u, e.v, 1);
    net.add_arc(e.v, e.u, 1);
  }
  return net;
}

void check_pair(const Graph& g, int s, int t) {
  if (s == t) throw std::invalid_argument("connectivity query needs two distinct vertices");
  if (s < 0 || t < 0 || s >= g.order() || t >= g.order()) throw std::invalid_argument("vertex outside the graph");
}

std::array<VertexSet, 2> sides_of(const Graph& g, VertexSet removed) {
  const auto comps = components_after_removal(g, removed);
  std::array<VertexSet, 2> sides{};
  if (comps.empty()) return sides;
  sides[0] = comps.front();
  for (std::size_t i = 1; i < comps.size(); ++i) sides[1] |= comps[i];
  return sides;
}

int min_degree_vertex(const Graph& g) {
  int best = 0;
  for (int v = 1; v < g.order(); ++v) {
    if (g.degree(v) < g.degree(best)) best = v;
  }
  return best;
}

// Minimum local connectivity over the reduced pair set: one minimum-degree
// vertex against its non-neighbours, plus nonadjacent pairs of its neighbours.
// Returns as soon as a pair below `target` is seen when target >= 0.
int reduced_pair_minimum(const Graph& g, int target) {
  const int v = min_degree_vertex(g);
  int best = g.degree(v);
  auto consider = [&](int a, int b) {
    const int cap = target >= 0 ? target : best;
    best = std::min(best, local_vertex_connectivity(g, a, b, cap));
    return target >= 0 && best < target;
  };
  const VertexSet far = g.vertices() - g.neighbors(v) - VertexSet::single(v);
  for (int w : far) {
    if (consider(v, w)) return best;
  }
  const VertexSet near = g.neighbors(v);
  for (int x : near) {
    for (int y : (near - g.neighbors(x))) {
      if (y > x && consider(x, y)) return best;
    }
  }
  return best;
}

}  // namespace

int local_vertex_connectivity(const Graph& g, int s, int t, int limit) {
  check_pair(g, s, t);
  if (g.adjacent(s, t)) return g.order() - 1;
  FlowNetwork net = split_network(g, s, t);
  return net.max_flow(out_node(s), in_node(t), limit);
}

int vertex_connectivity(const Graph& g) {
  const int n = g.order();
  if (n <= 1 || !is_connected(g)) return 0;
  if (g.is_complete()) return n - 1;
  return reduced_pair_minimum(g, -1);
}

bool is_k_connected(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("is_k_connected: k must be at least 1");
  if (g.order() < k + 1 || g.min_degree() < k || !is_connected(g)) return false;
  if (g.is_complete()) return true;
  return reduced_pair_minimum(g, k) >= k;
}

CutWitness min_vertex_cut(const Graph& g) {
  const int n = g.order();
  if (n < 3) throw std::invalid_argument("min_vertex_cut: need at least 3 vertices");
  if (!is_connected(g)) throw std::invalid_argument("min_vertex_cut: graph is not connected");
  if (g.is_complete()) throw std::invalid_argument("no vertex cut exists: graph is complete");
  const int kappa = vertex_connectivity(g);

  bool found = false;
  VertexSet best;
  auto offer = [&](VertexSet cut) {
    if (!found || lex_less(cut, best)) best = cut;
    found = true;
  };
  for (int s = 0; s < n; ++s) {
    for (int t = s + 1; t < n; ++t) {
      if (g.adjacent(s, t)) continue;
      FlowNetwork net = split_network(g, s, t);
      if (net.max_flow(out_node(s), in_node(t), -1) != kappa) continue;
      const auto from_source = net.reachable(out_node(s));
      const auto to_sink = net.co_reachable(in_node(t));
      VertexSet near_cut;
      VertexSet far_cut;
      for (int v = 0; v < n; ++v) {
        if (v == s || v == t) continue;
        if (from_source[static_cast<std::size_t>(in_node(v))] && !from_source[static_cast<std::size_t>(out_node(v))]) {
          near_cut = near_cut.with(v);
        }
        if (to_sink[static_cast<std::size_t>(out_node(v))] && !to_sink[static_cast<std::size_t>(in_node(v))]) {
          far_cut = far_cut.with(v);
        }
      }
      offer(near_cut);
      offer(far_cut);
    }
  }
  CutWitness w;
  w.kind = CutKind::vertex;
  w.vertices = best;
  w.sides = sides_of(g, best);
  return w;
}

int local_edge_connectivity(const Graph& g, int s, int t, int limit) {
  check_pair(g, s, t);
  FlowNetwork net = edge_network(g);
  return net.max_flow(s, t, limit);
}

int edge_connectivity(const Graph& g) {
  const int n = g.order();
  if (n <= 1 || !is_connected(g)) return 0;
  int best = g.min_degree();
  for (int t = 1; t < n && best > 0; ++t) best = std::min(best, local_edge_connectivity(g, 0, t, best));
  return best;
}

bool is_k_edge_connected(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("is_k_edge_connected: k must be at least 1");
  if (g.order() < 2 || g.min_degree() < k || !is_connected(g)) return false;
  for (int t = 1; t < g.order(); ++t) {
    if (local_edge_connectivity(g, 0, t, k) < k) return false;
  }
  return true;
}

CutWitness min_edge_cut(const Graph& g) {
  const int n = g.order();
  if (n < 2 || !is_connected(g)) throw std::invalid_argument("min_edge_cut: need a connected graph on at least 2 vertices");
  const int lambda = edge_connectivity(g);
  for (int t = 1; t < n; ++t) {
    FlowNetwork net = edge_network(g);
    if (net.max_flow(0, t, -1) != lambda) continue;
    const auto side = net.reachable(0);
    CutWitness w;
    w.kind = CutKind::edge;
    for (const Edge& e : g.edges()) {
      if (side[static_cast<std::size_t>(e.u)] != side[static_cast<std::size_t>(e.v)]) w.edges.push_back(e);
    }
    for (int v = 0; v < n; ++v) {
      if (side[static_cast<std::size_t>(v)]) {
        w.sides[0] = w.sides[0].with(v);
      } else {
        w.sides[1] = w.sides[1].with(v);
      }
    }
    return w;
  }
  throw std::logic_error("min_edge_cut: no pair attains the edge connectivity");
}

}  // namespace cutbench
