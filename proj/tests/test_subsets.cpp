#include <doctest.h>

#include <random>

#include "cutbench/connectivity.hpp"
#include "cutbench/constructions.hpp"
#include "cutbench/generate.hpp"
#include "cutbench/subsets.hpp"
#include "oracle.hpp"

using namespace cutbench;

TEST_CASE("independent sets of a given size") {
  CHECK(independent_sets_of_size(cycle_graph(6), 3) == std::vector<VertexSet>{VertexSet{0, 2, 4}, VertexSet{1, 3, 5}});
  CHECK(independent_sets_of_size(complete_graph(5), 2).empty());
  CHECK(independent_sets_of_size(kss_minus_pm(4), 4) ==
        std::vector<VertexSet>{VertexSet{0, 1, 2, 3}, VertexSet{4, 5, 6, 7}});
  CHECK(independent_sets_of_size(cycle_graph(5), 0) == std::vector<VertexSet>{VertexSet{}});
}

TEST_CASE("independence and matching numbers") {
  CHECK(independence_number(cycle_graph(7)) == 3);
  CHECK(independence_number(kss_minus_pm(4)) == 4);
  CHECK(independence_number(complete_graph(6)) == 1);
  CHECK(independence_number(Graph{}) == 0);
  CHECK(matching_number(kss_minus_pm(4)) == 4);
  CHECK(matching_number(complete_bipartite(1, 3)) == 1);
  CHECK(matching_number(cycle_graph(7)) == 3);
}

TEST_CASE("matchings of a given size") {
  const auto pms = matchings_of_size(cycle_graph(6), 3);
  CHECK(pms.size() == 2);
  for (const auto& m : pms) {
    CHECK(is_matching(cycle_graph(6), m));
    CHECK(m.covered() == VertexSet::range(6));
  }
  CHECK(matchings_of_size(complete_bipartite(1, 3), 2).empty());
  CHECK_FALSE(is_matching(cycle_graph(6), Matching{{{0, 1}, {1, 2}}}));
  CHECK_FALSE(is_matching(cycle_graph(6), Matching{{{0, 2}}}));
}

TEST_CASE("streams stop early") {
  int seen = 0;
  const bool finished = for_each_independent_set(cycle_graph(8), 2, [&](VertexSet) { return ++seen < 3; });
  CHECK_FALSE(finished);
  CHECK(seen == 3);
  seen = 0;
  CHECK(for_each_subset(VertexSet::range(5), 2, [&](VertexSet) { return ++seen, true; }));
  CHECK(seen == 10);
}

TEST_CASE("line graphs") {
  const LineGraph claw = line_graph(complete_bipartite(1, 3));
  CHECK(claw.graph == complete_graph(3));
  CHECK(claw.edge_of == std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}});
  CHECK(line_graph(cycle_graph(6)).graph.order() == 6);
  CHECK(oracle::isomorphic_brute(oracle::from_graph(line_graph(cycle_graph(6)).graph), oracle::from_graph(cycle_graph(6))));
  CHECK_THROWS_AS(line_graph(complete_graph(12)), GraphError);
}

TEST_CASE("induced claws") {
  const auto claw = find_induced_claw(kss_minus_pm(4));
  REQUIRE(claw.has_value());
  CHECK(claw->size() == 4);
  CHECK_FALSE(find_induced_claw(cycle_graph(8)).has_value());
  CHECK(find_induced_claw(complete_bipartite(1, 3)) == VertexSet{0, 1, 2, 3});
}

TEST_CASE("property: stream counts match brute force for n <= 7") {
  for (int n = 1; n <= 7; ++n) {
    for (const Graph& g : generate_all(n)) {
      const oracle::Matrix m = oracle::from_graph(g);
      int alpha = 0;
      for (int k = 0; k <= n; ++k) {
        const auto sets = independent_sets_of_size(g, k);
        CHECK(static_cast<long>(sets.size()) == oracle::count_independent_sets(m, k));
        for (std::size_t i = 0; i < sets.size(); ++i) {
          CHECK(is_independent_set(g, sets[i]));
          CHECK(sets[i].size() == k);
          if (i > 0) CHECK(lex_less(sets[i - 1], sets[i]));
        }
        if (!sets.empty()) alpha = k;
      }
      CHECK(independence_number(g) == alpha);
      CHECK(alpha == oracle::alpha(m));

      for (int k = 1; k <= n / 2; ++k) {
        const auto ms = matchings_of_size(g, k);
        CHECK(static_cast<long>(ms.size()) == oracle::count_matchings(m, k));
        for (const auto& mt : ms) CHECK(is_matching(g, mt));
      }
      CHECK(matching_number(g) == oracle::nu(m));
    }
  }
}

TEST_CASE("property: line graph facts on random graphs") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 6);
    const Graph g = random_connected(n, 0.45, rng());
    const LineGraph lg = line_graph(g);
    CHECK(lg.graph.order() == g.edge_count());
    CHECK_FALSE(find_induced_claw(lg.graph).has_value());
    CHECK(independence_number(lg.graph) == matching_number(g));
    CHECK(oracle::alpha(oracle::from_graph(lg.graph)) == oracle::nu(oracle::from_graph(g)));
    const int lambda = edge_connectivity(g);
    if (lg.graph.order() > lambda) CHECK(is_k_connected(lg.graph, lambda));
  }
}
