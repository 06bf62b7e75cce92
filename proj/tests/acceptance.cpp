// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cutbench/canonical.hpp"
#include "cutbench/cli.hpp"
#include "cutbench/connectivity.hpp"
#include "cutbench/constructions.hpp"
#include "cutbench/generate.hpp"
#include "cutbench/graph6.hpp"
#include "cutbench/parallel.hpp"
#include "cutbench/subsets.hpp"
#include "cutbench/sweep.hpp"
#include "oracle.hpp"

using namespace cutbench;

namespace {

// Collects failed expectations for one criterion.
struct Check {
  std::vector<std::string> failures;
  std::string note;

  void expect(bool ok, const std::string& what) {
    if (!ok && failures.size() < 8) failures.push_back(what);
  }
  bool passed() const { return failures.empty(); }
};

const int kWorkers = std::max(4, default_worker_count());

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

SweepReport run_sweep(const std::string& checker, CheckParams params, int n_max,
                      std::function<void(const Certificate&)> sink = {}, std::optional<GenFilter> filter = {}) {
  SweepOptions o;
  o.checker = checker;
  o.params = params;
  o.n_max = n_max;
  o.workers = kWorkers;
  o.filter = filter;
  o.on_certificate = std::move(sink);
  return sweep(o);
}

bool is_cycle(const std::string& text) {
  const auto m = oracle::decode_graph6(text);
  if (m.n < 3) return false;
  oracle::Matrix cycle(m.n);
  for (int v = 0; v < m.n; ++v) cycle.set(v, (v + 1) % m.n);
  return oracle::isomorphic_brute(m, cycle);
}

long count_generated(int n_max, GenFilter f) {
  long total = 0;
  f.max_n = n_max;
  for (const auto& level : generate_levels(n_max, f, kWorkers)) total += static_cast<long>(level.graphs.size());
  return total;
}

Check criterion1() {
  Check c;
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<Certificate> sats;
  const auto r = run_sweep("theorem1", {3}, 9, [&](const Certificate& cert) {
    if (cert.verdict == Verdict::witness) sats.push_back(cert);
  });
  const double secs = seconds_since(t0);
  c.expect(r.graphs_examined == count_generated(9, GenFilter{true, 3, 0}), "examined count differs from generator");
  c.expect(r.satisfiers.size() == 1, "expected exactly one satisfier, got " + std::to_string(r.satisfiers.size()));
  if (r.satisfiers.size() == 1) {
    const auto m = oracle::decode_graph6(r.satisfiers[0]);
    c.expect(m.n == 8, "satisfier order is not 8");
    c.expect(oracle::isomorphic_brute(m, oracle::from_graph(kss_minus_pm(4))), "satisfier is not K_{4,4}-PM");
  }
  for (const auto& cert : sats) c.expect(oracle::recheck(cert, {3}) == "", "satisfier certificate fails recheck");
  c.expect(secs < 300, "runtime above 5 minutes");
  std::ostringstream note;
  note << r.graphs_examined << " graphs, satisfiers " << (r.satisfiers.empty() ? "-" : r.satisfiers[0]) << ", "
       << static_cast<int>(secs * 1000) << " ms on " << kWorkers << " workers";
  c.note = note.str();
  return c;
}

Check criterion2() {
  Check c;
  const auto r = run_sweep("theorem1", {3}, 7);
  c.expect(r.satisfiers.empty(), "satisfiers found below order 8");
  c.note = std::to_string(r.graphs_examined) + " graphs, " + std::to_string(r.satisfiers.size()) + " satisfiers";
  return c;
}

Check criterion3() {
  Check c;
  std::vector<Certificate> sats;
  const auto r = run_sweep("theorem1", {2}, 8, [&](const Certificate& cert) {
    if (cert.verdict == Verdict::witness) sats.push_back(cert);
  });
  c.expect(r.satisfiers.size() == 3, "expected three satisfiers");
  std::set<int> orders;
  for (const auto& s : r.satisfiers) {
    c.expect(is_cycle(s), s + " is not a cycle");
    orders.insert(oracle::decode_graph6(s).n);
  }
  c.expect(orders == std::set<int>{6, 7, 8}, "satisfier orders are not 6, 7, 8");
  for (const auto& cert : sats) c.expect(oracle::recheck(cert, {2}) == "", cert.graph_id + " fails recheck");
  std::string list;
  for (const auto& s : r.satisfiers) list += (list.empty() ? "" : " ") + s;
  c.note = "satisfiers " + list;
  return c;
}

Check cycles_criterion(const std::string& checker, int first_order) {
  Check c;
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<Certificate> sats;
  const auto r = run_sweep(checker, {2}, 9, [&](const Certificate& cert) {
    if (cert.verdict == Verdict::witness) sats.push_back(cert);
  });
  std::vector<int> per_order(10, 0);
  for (const auto& s : r.satisfiers) {
    c.expect(is_cycle(s), s + " is not a cycle");
    ++per_order[static_cast<std::size_t>(oracle::decode_graph6(s).n)];
  }
  for (int n = 1; n <= 9; ++n) {
    const int want = n >= first_order ? 1 : 0;
    c.expect(per_order[static_cast<std::size_t>(n)] == want, "order " + std::to_string(n) + " has " +
                                                                 std::to_string(per_order[static_cast<std::size_t>(n)]) +
                                                                 " satisfiers");
  }
  for (const auto& cert : sats) c.expect(oracle::recheck(cert, {2}) == "", cert.graph_id + " fails recheck");
  const double secs = seconds_since(t0);
  c.expect(secs < 600, "runtime above 10 minutes");
  c.note = std::to_string(r.graphs_examined) + " graphs, " + std::to_string(r.premises_held) + " with premises, " +
           std::to_string(r.satisfiers.size()) + " satisfiers, " + std::to_string(static_cast<int>(secs * 1000)) + " ms";
  return c;
}

Check criterion6() {
  Check c;
  long witnesses = 0;
  const auto r = run_sweep("corollary2", {3}, 9, [&](const Certificate& cert) {
    if (cert.verdict == Verdict::witness) {
      ++witnesses;
      c.expect(oracle::recheck(cert, {3}, false) == "", cert.graph_id + " witness matching fails recheck");
    } else if (cert.verdict == Verdict::violation) {
      c.expect(oracle::recheck(cert, {3}) == "", cert.graph_id + " violation fails recheck");
    }
  });
  c.expect(r.violations.empty(), std::to_string(r.violations.size()) + " violations");
  c.expect(witnesses == r.premises_held, "some graph with premises has no witness");
  c.expect(r.premises_held > 0, "no graph met the premises");
  c.note = std::to_string(r.graphs_examined) + " graphs, " + std::to_string(r.premises_held) + " with premises, " +
           std::to_string(witnesses) + " witness matchings re-verified";
  return c;
}

Check criterion7() {
  Check c;
  const auto r = verify_observation4(9, kWorkers);
  c.expect(r.violations.empty(), std::to_string(r.violations.size()) + " violations");
  // independent count of 2-connected graphs among the examined ones
  long two_connected = 0;
  for (const auto& level : generate_levels(9, GenFilter{true, 2, 9}, kWorkers))
    for (const Graph& g : level.graphs) two_connected += is_k_connected(g, 2) ? 1 : 0;
  c.expect(r.premises_held == two_connected, "premise count differs from the number of 2-connected graphs");
  c.note = std::to_string(r.graphs_examined) + " connected graphs, " + std::to_string(r.premises_held) +
           " 2-connected, " + std::to_string(r.violations.size()) + " violations";
  return c;
}

Check criterion8() {
  Check c;
  long total = 0, certified = 0, rechecked = 0;
  const auto r = run_sweep("conjecture3", {3}, 9, [&](const Certificate& cert) {
    ++total;
    if (cert.premises_hold) certified += (cert.verdict == Verdict::witness || cert.verdict == Verdict::violation) ? 1 : 0;
    const std::string why = oracle::recheck(cert, {3});
    c.expect(why.empty(), cert.graph_id + ": " + why);
    ++rechecked;
  });
  c.expect(total == r.graphs_examined, "not every graph received a certificate");
  c.expect(certified == r.premises_held, "a graph with premises lacks a witness or counterexample");
  c.note = std::to_string(r.graphs_examined) + " graphs, " + std::to_string(r.premises_held) + " with premises, " +
           std::to_string(r.witnesses) + " witnesses, " + std::to_string(r.violations.size()) +
           " counterexamples, " + std::to_string(rechecked) + " certificates rechecked";
  return c;
}

Check criterion9() {
  Check c;
  for (int s = 3; s <= 7; ++s) {
    const Graph g = kss_minus_pm(s);
    const std::string tag = "s=" + std::to_string(s) + ": ";
    c.expect(vertex_connectivity(g) == s - 1, tag + "kappa");
    c.expect(g.min_degree() == s - 1 && g.max_degree() == s - 1, tag + "not (s-1)-regular");
    c.expect(independence_number(g) == s, tag + "alpha");
    const auto m = oracle::from_graph(g);
    if (s <= 6) c.expect(oracle::kappa(m) == s - 1, tag + "brute-force kappa");
    c.expect(oracle::alpha(m) == s, tag + "brute-force alpha");
  }
  c.expect(oracle::isomorphic_brute(oracle::from_graph(kss_minus_pm(3)), oracle::from_graph(cycle_graph(6))),
           "K_{3,3}-PM is not C_6");
  c.expect(oracle::isomorphic_brute(oracle::from_graph(kss_minus_pm(4)), oracle::from_graph(hypercube(3))),
           "K_{4,4}-PM is not Q_3");
  const auto claw = find_induced_claw(kss_minus_pm(4));
  c.expect(claw.has_value(), "no induced claw in K_{4,4}-PM");
  if (claw) {
    // independently: one center adjacent to three pairwise nonadjacent leaves
    const auto m = oracle::from_graph(kss_minus_pm(4));
    const auto vs = claw->members();
    bool ok = false;
    for (int center : vs) {
      std::vector<int> leaves;
      for (int v : vs)
        if (v != center) leaves.push_back(v);
      bool star = true;
      for (int v : leaves) star = star && m.adj(center, v);
      std::uint64_t mask = 0;
      for (int v : leaves) mask |= std::uint64_t{1} << v;
      ok = ok || (star && oracle::is_independent(m, mask));
    }
    c.expect(ok, "reported claw is not an induced K_{1,3}");
  }

  int implications = 0;
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const int n = 4 + static_cast<int>(seed % 6);
    const Graph g = random_connected(n, 0.45, seed);
    const LineGraph lg = line_graph(g);
    const std::string tag = "seed " + std::to_string(seed) + ": ";
    c.expect(!find_induced_claw(lg.graph).has_value(), tag + "L(G) has a claw");
    const auto lm = oracle::from_graph(lg.graph);
    const int nu = oracle::nu(oracle::from_graph(g));
    c.expect(independence_number(lg.graph) == nu, tag + "alpha(L(G)) != nu(G)");
    c.expect(oracle::alpha(lm) == nu, tag + "brute-force alpha(L(G)) != nu(G)");
    const int lambda = oracle::lambda(oracle::from_graph(g));
    for (int k = 1; k <= lambda; ++k) {
      c.expect(is_k_connected(lg.graph, k), tag + "L(G) not " + std::to_string(k) + "-connected");
      if (lm.n <= 24 && k <= 3) c.expect(oracle::k_connected(lm, k), tag + "brute-force L(G) connectivity");
      ++implications;
    }
  }
  c.note = "s = 3..7 invariants, 50 random line graphs, " + std::to_string(implications) + " connectivity implications";
  return c;
}

Graph labeled_graph(int n, std::uint64_t code) {
  std::vector<Edge> edges;
  int bit = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++bit)
      if ((code >> bit) & 1) edges.emplace_back(u, v);
  return build_graph(n, edges);
}

std::string sweep_json(const std::vector<std::string>& args, int workers) {
  std::vector<std::string> a = args;
  a.insert(a.end(), {"--format", "json-lines", "--quiet", "--workers", std::to_string(workers)});
  std::ostringstream out, err;
  std::istringstream in;
  cli::run(a, out, err, in);
  return out.str();
}

Check criterion10() {
  Check c;
  std::ostringstream note;

  // generation counts against the labeled-dedup oracle and a Burnside count
  std::vector<std::vector<Graph>> by_order(8);
  for (int n = 1; n <= 7; ++n) {
    by_order[n] = generate_all(n, {}, kWorkers);
    const std::uint64_t labeled = std::uint64_t{1} << (n * (n - 1) / 2);
    std::vector<CanonicalForm> forms(labeled);
    parallel_for(static_cast<std::size_t>(labeled), kWorkers,
                 [&](std::size_t i, int) { forms[i] = canonical_form(labeled_graph(n, i)); }, 4096);
    std::sort(forms.begin(), forms.end());
    const long distinct = std::unique(forms.begin(), forms.end()) - forms.begin();
    c.expect(static_cast<long>(by_order[n].size()) == distinct, "n=" + std::to_string(n) + " generation count");
    c.expect(distinct == oracle::burnside_graph_count(n), "n=" + std::to_string(n) + " Burnside count");
    note << (n == 1 ? "counts " : ",") << distinct;
  }

  // graph6 roundtrip on every generated graph
  long roundtrips = 0;
  for (int n = 1; n <= 7; ++n) {
    for (const Graph& g : by_order[n]) {
      const std::string text = graph6_encode(g);
      c.expect(graph6_decode(text) == g, "roundtrip " + text);
      const auto m = oracle::decode_graph6(text);
      bool same = m.n == g.order();
      for (int u = 0; same && u < m.n; ++u)
        for (int v = 0; v < m.n; ++v) same = same && m.adj(u, v) == g.adjacent(u, v);
      c.expect(same, "independent decode " + text);
      ++roundtrips;
    }
  }
  note << "; " << roundtrips << " roundtrips";

  // canonical-form invariance on a 200-graph sample
  std::mt19937_64 rng(20240601);
  std::vector<Graph> pool;
  for (int n = 1; n <= 8; ++n)
    for (const Graph& g : generate_all(n, {}, kWorkers)) pool.push_back(g);
  std::shuffle(pool.begin(), pool.end(), rng);
  pool.resize(200);
  for (const Graph& g : pool) {
    const CanonicalForm ref = canonical_form(g);
    std::vector<int> p(static_cast<std::size_t>(g.order()));
    std::iota(p.begin(), p.end(), 0);
    for (int i = 0; i < 100; ++i) {
      std::shuffle(p.begin(), p.end(), rng);
      c.expect(canonical_form(permute(g, p)) == ref, "relabeling changes the form of " + graph6_encode(g));
    }
  }
  note << "; 200x100 relabelings";

  // Whitney chain on seeded random graphs
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    std::mt19937_64 r(seed);
    const int n = 2 + static_cast<int>(r() % 15);
    const double p = 0.15 + 0.7 * static_cast<double>(r() % 1000) / 1000.0;
    const Graph g = random_connected(n, p, seed);
    const int kappa = vertex_connectivity(g);
    const int lambda = edge_connectivity(g);
    c.expect(kappa <= lambda && lambda <= g.min_degree(), "Whitney chain fails for seed " + std::to_string(seed));
  }
  note << "; 1000 Whitney chains";

  // Menger: flow value equals the brute-force smallest separator
  long pairs = 0;
  for (int n = 1; n <= 7; ++n) {
    for (const Graph& g : by_order[n]) {
      const auto m = oracle::from_graph(g);
      c.expect(vertex_connectivity(g) == oracle::kappa(m), "kappa of " + graph6_encode(g));
      c.expect(edge_connectivity(g) == oracle::lambda(m), "lambda of " + graph6_encode(g));
      for (int s = 0; s < n; ++s)
        for (int t = s + 1; t < n; ++t) {
          if (g.adjacent(s, t)) continue;
          c.expect(local_vertex_connectivity(g, s, t) == oracle::min_separator(m, s, t), "Menger on " + graph6_encode(g));
          ++pairs;
        }
    }
  }
  note << "; " << pairs << " Menger pairs";

  // byte-identical sweep output across worker counts
  const std::vector<std::vector<std::string>> commands{
      {"verify-theorem1", "--k", "3", "--max-n", "9"},
      {"hunt-conjecture3", "--k", "2", "--max-n", "8", "--all"},
      {"verify-cycles", "--mode", "edge", "--max-n", "8", "--all"},
  };
  for (const auto& cmd : commands) {
    const std::string one = sweep_json(cmd, 1);
    c.expect(!one.empty(), cmd[0] + " produced no output");
    c.expect(one == sweep_json(cmd, 2), cmd[0] + " differs with 2 workers");
    c.expect(one == sweep_json(cmd, 8), cmd[0] + " differs with 8 workers");
  }
  note << "; " << commands.size() << " sweeps identical at 1/2/8 workers";
  c.note = note.str();
  return c;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    std::function<Check()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "k=3 three-condition sweep to n=9 has the unique satisfier K_{4,4}-PM", criterion1},
      {2, "k=3 three-condition sweep to n=7 has no satisfier", criterion2},
      {3, "k=2 three-condition sweep to n=8 yields exactly C_6, C_7, C_8", criterion3},
      {4, "nonadjacent-pair cut characterization, n=4..9, is exactly the cycles",
       [] { return cycles_criterion("cycles-vertex", 4); }},
      {5, "disjoint-edge-pair cut characterization, n=3..9, is exactly C_n for n>=4",
       [] { return cycles_criterion("cycles-edge", 4); }},
      {6, "k=3 matching-removal sweep to n=9 has no violation; witnesses re-verify", criterion6},
      {7, "k=2 peripheral-set sweep over 2-connected graphs to n=9 has no violation", criterion7},
      {8, "k=3 peripheral-set hunt to n=9 certifies every graph; all certificates recheck", criterion8},
      {9, "construction and line-graph invariants", criterion9},
      {10, "infrastructure properties (generation, graph6, canonical forms, Whitney, Menger, determinism)",
       criterion10},
  };

  int failed = 0;
  for (const auto& cr : criteria) {
    Check c;
    try {
      c = cr.run();
    } catch (const std::exception& e) {
      c.failures.push_back(std::string("exception: ") + e.what());
    }
    std::cout << (c.passed() ? "PASS" : "FAIL") << "  criterion " << cr.id << ": " << cr.title;
    if (!c.note.empty()) std::cout << " [" << c.note << "]";
    std::cout << '\n';
    for (const auto& f : c.failures) std::cout << "      " << f << '\n';
    std::cout.flush();
    failed += c.passed() ? 0 : 1;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << '\n';
  return failed == 0 ? 0 : 1;
}
