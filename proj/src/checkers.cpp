#include "cutbench/checkers.hpp"

#include <array>
#include <stdexcept>

#include "cutbench/connectivity.hpp"
#include "cutbench/graph6.hpp"
#include "cutbench/subsets.hpp"

namespace cutbench {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::witness: return "witness";
    case Verdict::violation: return "violation";
    case Verdict::premises_fail: return "premises_fail";
  }
  return "?";
}

Verdict verdict_from_string(const std::string& s) {
  if (s == "witness") return Verdict::witness;
  if (s == "violation") return Verdict::violation;
  if (s == "premises_fail") return Verdict::premises_fail;
  throw std::invalid_argument("unknown verdict '" + s + "'");
}

namespace {

Certificate start(const Graph& g, std::string_view checker, int k) {
  Certificate c;
  c.graph_id = graph6_encode(g);
  c.checker = std::string(checker);
  c.k = k;
  return c;
}

Certificate premises_failed(Certificate c, std::string why) {
  c.premises_hold = false;
  c.verdict = Verdict::premises_fail;
  c.detail = std::move(why);
  return c;
}

Separation vertex_removal(const Graph& g, VertexSet removed) {
  return Separation{removed, {}, components_after_removal(g, removed)};
}

Separation edge_removal(const Graph& g, const Matching& m) {
  return Separation{{}, m.pairs, components(remove_edges(g, m.pairs))};
}

std::string kstr(int k) { return std::to_string(k); }

void require_k(int k, int least) {
  if (k < least) throw std::invalid_argument("checker parameter k must be at least " + std::to_string(least));
}

// A deletion of `removed` separates iff at least two vertices remain and they
// are disconnected.
bool separates(const Graph& g, VertexSet removed) {
  return g.order() - removed.size() >= 2 && !remains_connected(g, removed);
}

}  // namespace

Certificate check_theorem1_conditions(const Graph& g, int k) {
  require_k(k, 2);
  Certificate c = start(g, "theorem1", k);
  if (g.order() == 0) return premises_failed(std::move(c), "empty graph");
  if (!is_k_connected(g, k)) return premises_failed(std::move(c), "condition (1) fails: not " + kstr(k) + "-connected");
  const int alpha = independence_number(g);
  if (alpha <= k) {
    return premises_failed(std::move(c), "condition (2) fails: independence number " + std::to_string(alpha) +
                                             " <= " + kstr(k));
  }
  c.premises_hold = true;

  std::optional<VertexSet> failing;
  std::vector<Separation> evidence;
  for_each_independent_set(g, k, [&](VertexSet s) {
    if (!separates(g, s)) {
      failing = s;
      return false;
    }
    evidence.push_back(vertex_removal(g, s));
    return true;
  });
  if (failing) {
    c.verdict = Verdict::violation;
    c.witness_set = *failing;
    c.evidence = {vertex_removal(g, *failing)};
    c.detail = "condition (3) fails: independent set " + failing->to_string() + " is not a vertex cut";
    return c;
  }
  for_each_independent_set(g, k + 1, [&](VertexSet s) {
    c.witness_set = s;
    return false;
  });
  c.verdict = Verdict::witness;
  c.evidence = std::move(evidence);
  c.detail = "all three conditions hold; " + std::to_string(c.evidence.size()) + " independent " + kstr(k) +
             "-sets, each a vertex cut";
  return c;
}

Certificate check_pair_cut_characterization(const Graph& g, PairMode mode) {
  if (mode == PairMode::vertex) {
    Certificate c = start(g, "cycles-vertex", 2);
    if (!is_k_connected(g, 2)) return premises_failed(std::move(c), "not 2-connected");
    if (g.is_complete()) return premises_failed(std::move(c), "complete graph: no nonadjacent pair");
    c.premises_hold = true;
    std::vector<Separation> evidence;
    std::optional<VertexSet> failing;
    for_each_independent_set(g, 2, [&](VertexSet pair) {
      if (!separates(g, pair)) {
        failing = pair;
        return false;
      }
      evidence.push_back(vertex_removal(g, pair));
      return true;
    });
    if (failing) {
      c.verdict = Verdict::violation;
      c.witness_set = *failing;
      c.evidence = {vertex_removal(g, *failing)};
      c.detail = "nonadjacent pair " + failing->to_string() + " is not a vertex cut";
    } else {
      c.verdict = Verdict::witness;
      c.evidence = std::move(evidence);
      c.detail = "every nonadjacent pair is a vertex cut";
    }
    return c;
  }

  Certificate c = start(g, "cycles-edge", 2);
  if (!is_k_edge_connected(g, 2)) return premises_failed(std::move(c), "not 2-edge-connected");
  if (matching_number(g) < 2) return premises_failed(std::move(c), "matching number < 2: no two disjoint edges");
  c.premises_hold = true;
  std::vector<Separation> evidence;
  std::optional<Matching> failing;
  for_each_matching(g, 2, [&](const Matching& m) {
    Separation sep = edge_removal(g, m);
    if (sep.components.size() < 2) {
      failing = m;
      return false;
    }
    evidence.push_back(std::move(sep));
    return true;
  });
  if (failing) {
    c.verdict = Verdict::violation;
    c.witness_matching = *failing;
    c.evidence = {edge_removal(g, *failing)};
    c.detail = "two disjoint edges whose deletion leaves the graph connected";
  } else {
    c.verdict = Verdict::witness;
    c.evidence = std::move(evidence);
    c.detail = "every pair of disjoint edges separates";
  }
  return c;
}

Certificate check_corollary2(const Graph& g, int k) {
  require_k(k, 2);
  Certificate c = start(g, "corollary2", k);
  if (!is_k_edge_connected(g, k)) return premises_failed(std::move(c), "not " + kstr(k) + "-edge-connected");
  const int nu = matching_number(g);
  if (nu <= k) return premises_failed(std::move(c), "matching number " + std::to_string(nu) + " <= " + kstr(k));
  c.premises_hold = true;
  std::vector<Separation> evidence;
  std::optional<Matching> found;
  for_each_matching(g, k, [&](const Matching& m) {
    Separation sep = edge_removal(g, m);
    if (sep.components.size() == 1) {
      found = m;
      evidence = {std::move(sep)};
      return false;
    }
    evidence.push_back(std::move(sep));
    return true;
  });
  c.evidence = std::move(evidence);
  if (found) {
    c.verdict = Verdict::witness;
    c.witness_matching = *found;
    c.detail = "a " + kstr(k) + "-matching whose deletion leaves the graph connected";
  } else {
    c.verdict = Verdict::violation;
    c.detail = "every " + kstr(k) + "-matching separates the graph";
  }
  return c;
}

Certificate check_conjecture3(const Graph& g, int k) {
  require_k(k, 2);
  Certificate c = start(g, "conjecture3", k);
  if (!is_k_connected(g, k)) return premises_failed(std::move(c), "not " + kstr(k) + "-connected");
  const VertexSet periphery = distance_profile(g).periphery;
  if (periphery.size() < k) {
    return premises_failed(std::move(c), "periphery " + periphery.to_string() + " has fewer than " + kstr(k) + " vertices");
  }
  c.premises_hold = true;
  std::vector<Separation> evidence;
  std::optional<VertexSet> found;
  for_each_subset(periphery, k, [&](VertexSet s) {
    if (remains_connected(g, s)) {
      found = s;
      return false;
    }
    evidence.push_back(vertex_removal(g, s));
    return true;
  });
  if (found) {
    c.verdict = Verdict::witness;
    c.witness_set = *found;
    c.evidence = {vertex_removal(g, *found)};
    c.detail = "peripheral set " + found->to_string() + " leaves a connected remainder";
  } else {
    c.verdict = Verdict::violation;
    c.evidence = std::move(evidence);
    c.detail = "counterexample: every " + kstr(k) + "-subset of the periphery " + periphery.to_string() +
               " is a vertex cut";
  }
  return c;
}

Certificate check_special_periphery(const Graph& g, int diameter, int periphery_size, int k) {
  require_k(k, 1);
  if (k > periphery_size) throw std::invalid_argument("special periphery hunt needs k <= periphery size");
  Certificate c = start(g, "special-periphery", k);
  if (!is_connected(g)) return premises_failed(std::move(c), "not connected");
  const auto profile = distance_profile(g);
  if (profile.diameter != diameter) {
    return premises_failed(std::move(c), "diameter " + std::to_string(profile.diameter) + " != " + std::to_string(diameter));
  }
  if (profile.periphery.size() != periphery_size) {
    return premises_failed(std::move(c), "periphery size " + std::to_string(profile.periphery.size()) +
                                             " != " + std::to_string(periphery_size));
  }
  c.premises_hold = true;
  if (is_k_connected(g, k)) {
    c.verdict = Verdict::violation;
    c.detail = "graph is " + kstr(k) + "-connected";
    return c;
  }
  std::vector<Separation> evidence;
  std::optional<VertexSet> failing;
  for_each_subset(profile.periphery, k, [&](VertexSet s) {
    if (!separates(g, s)) {
      failing = s;
      return false;
    }
    evidence.push_back(vertex_removal(g, s));
    return true;
  });
  if (failing) {
    c.verdict = Verdict::violation;
    c.witness_set = *failing;
    c.evidence = {vertex_removal(g, *failing)};
    c.detail = "peripheral set " + failing->to_string() + " is not a vertex cut";
  } else {
    c.verdict = Verdict::witness;
    c.evidence = std::move(evidence);
    c.detail = "every " + kstr(k) + "-subset of the periphery " + profile.periphery.to_string() + " is a vertex cut";
  }
  return c;
}

namespace {

GenFilter connected_min_degree(int d) { return GenFilter{true, d, 0}; }

constexpr std::array<CheckerInfo, 6> kCheckers{{
    {"theorem1", CheckerRole::characterization,
     [](const Graph& g, const CheckParams& p) { return check_theorem1_conditions(g, p.k); },
     [](const CheckParams& p) { return connected_min_degree(p.k); }},
    {"cycles-vertex", CheckerRole::characterization,
     [](const Graph& g, const CheckParams&) { return check_pair_cut_characterization(g, PairMode::vertex); },
     [](const CheckParams&) { return connected_min_degree(2); }},
    {"cycles-edge", CheckerRole::characterization,
     [](const Graph& g, const CheckParams&) { return check_pair_cut_characterization(g, PairMode::edge); },
     [](const CheckParams&) { return connected_min_degree(2); }},
    {"corollary2", CheckerRole::universal,
     [](const Graph& g, const CheckParams& p) { return check_corollary2(g, p.k); },
     [](const CheckParams& p) { return connected_min_degree(p.k); }},
    {"conjecture3", CheckerRole::universal,
     [](const Graph& g, const CheckParams& p) { return check_conjecture3(g, p.k); },
     [](const CheckParams& p) { return connected_min_degree(p.k); }},
    {"special-periphery", CheckerRole::characterization,
     [](const Graph& g, const CheckParams& p) { return check_special_periphery(g, p.diameter, p.periphery_size, p.k); },
     [](const CheckParams&) { return connected_min_degree(0); }},
}};

}  // namespace

const CheckerInfo& find_checker(std::string_view name) {
  for (const CheckerInfo& info : kCheckers) {
    if (info.name == name) return info;
  }
  throw std::invalid_argument("unknown checker '" + std::string(name) + "'");
}

std::span<const CheckerInfo> registered_checkers() { return kCheckers; }

}  // namespace cutbench
