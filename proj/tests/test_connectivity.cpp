#include <doctest.h>

#include <random>

#include "cutbench/connectivity.hpp"
#include "cutbench/constructions.hpp"
#include "cutbench/generate.hpp"
#include "cutbench/subsets.hpp"
#include "oracle.hpp"

using namespace cutbench;

TEST_CASE("local vertex connectivity") {
  CHECK(local_vertex_connectivity(cycle_graph(8), 0, 4) == 2);
  CHECK(local_vertex_connectivity(complete_bipartite(3, 3), 0, 1) == 3);
  CHECK(local_vertex_connectivity(kss_minus_pm(5), 0, 1) == 4);
  CHECK(local_vertex_connectivity(kss_minus_pm(5), 5, 9) == 4);
  // adjacent pairs report the n-1 sentinel
  CHECK(local_vertex_connectivity(cycle_graph(8), 0, 1) == 7);
  CHECK(local_vertex_connectivity(kss_minus_pm(5), 0, 1, 2) == 2);
  CHECK_THROWS(local_vertex_connectivity(cycle_graph(5), 2, 2));
}

TEST_CASE("vertex connectivity") {
  for (int n = 3; n <= 12; ++n) CHECK(vertex_connectivity(cycle_graph(n)) == 2);
  for (int s = 3; s <= 7; ++s) CHECK(vertex_connectivity(kss_minus_pm(s)) == s - 1);
  CHECK(vertex_connectivity(complete_graph(6)) == 5);
  CHECK(vertex_connectivity(complete_graph(1)) == 0);
  CHECK(vertex_connectivity(build_graph(4, {{0, 1}, {2, 3}})) == 0);
  CHECK(vertex_connectivity(path_graph(5)) == 1);
}

TEST_CASE("is_k_connected") {
  CHECK(is_k_connected(kss_minus_pm(4), 3));
  CHECK_FALSE(is_k_connected(kss_minus_pm(4), 4));
  CHECK(is_k_connected(complete_graph(4), 3));
  CHECK_FALSE(is_k_connected(complete_graph(4), 4));
  CHECK_THROWS(is_k_connected(cycle_graph(4), 0));
}

TEST_CASE("min vertex cut") {
  const CutWitness c6 = min_vertex_cut(cycle_graph(6));
  CHECK(c6.kind == CutKind::vertex);
  CHECK(c6.vertices == VertexSet{0, 2});

  const CutWitness p3 = min_vertex_cut(path_graph(3));
  CHECK(p3.vertices == VertexSet{1});
  CHECK(p3.sides[0] == VertexSet{0});
  CHECK(p3.sides[1] == VertexSet{2});

  const Graph q3 = kss_minus_pm(4);
  const CutWitness cube = min_vertex_cut(q3);
  CHECK(cube.size() == 3);
  CHECK(is_vertex_cut(q3, cube.vertices));

  CHECK_THROWS_WITH(min_vertex_cut(complete_graph(5)), doctest::Contains("no vertex cut exists"));
  CHECK_THROWS(min_vertex_cut(build_graph(4, {{0, 1}})));
}

TEST_CASE("edge connectivity") {
  CHECK(edge_connectivity(cycle_graph(7)) == 2);
  CHECK(edge_connectivity(kss_minus_pm(4)) == 3);
  CHECK(edge_connectivity(complete_graph(5)) == 4);
  CHECK(edge_connectivity(complete_graph(1)) == 0);
  CHECK(edge_connectivity(build_graph(4, {{0, 1}, {2, 3}})) == 0);
  CHECK(local_edge_connectivity(complete_graph(6), 0, 5) == 5);
  CHECK(is_k_edge_connected(kss_minus_pm(4), 3));
  CHECK_FALSE(is_k_edge_connected(kss_minus_pm(4), 4));
  CHECK_FALSE(is_k_edge_connected(complete_graph(1), 1));

  const Graph bowtie = build_graph(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
  const CutWitness cut = min_edge_cut(bowtie);
  CHECK(cut.kind == CutKind::edge);
  CHECK(cut.size() == 2);
}

TEST_CASE("property: brute-force agreement on every graph with n <= 7") {
  for (int n = 1; n <= 7; ++n) {
    for (const Graph& g : generate_all(n)) {
      const oracle::Matrix m = oracle::from_graph(g);
      const int kappa = vertex_connectivity(g);
      CHECK(kappa == oracle::kappa(m));
      CHECK(edge_connectivity(g) == oracle::lambda(m));
      for (int k = 1; k <= n; ++k) CHECK(is_k_connected(g, k) == oracle::k_connected(m, k));
      for (int s = 0; s < n; ++s)
        for (int t = s + 1; t < n; ++t)
          if (!g.adjacent(s, t)) CHECK(local_vertex_connectivity(g, s, t) == oracle::min_separator(m, s, t));
    }
  }
}

TEST_CASE("property: Whitney chain and cut witnesses on random graphs") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 12);
    const double p = 0.2 + 0.6 * static_cast<double>(rng() % 100) / 100.0;
    const Graph g = random_connected(n, p, rng());
    const int kappa = vertex_connectivity(g);
    const int lambda = edge_connectivity(g);
    CHECK(kappa <= lambda);
    CHECK(lambda <= g.min_degree());

    const CutWitness ec = min_edge_cut(g);
    CHECK(ec.size() == lambda);
    CHECK_FALSE(is_connected(remove_edges(g, ec.edges)));

    if (g.is_complete()) continue;
    const CutWitness vc = min_vertex_cut(g);
    CHECK(vc.size() == kappa);
    const auto comps = components_after_removal(g, vc.vertices);
    CHECK(comps.size() >= 2);
    CHECK((vc.sides[0] & vc.sides[1]).empty());
    CHECK(vc.sides[0] == comps.front());
    // each vertex of a minimum cut sees every component of the remainder
    for (int v : vc.vertices)
      for (VertexSet comp : comps) CHECK_FALSE((g.neighbors(v) & comp).empty());
  }
}
