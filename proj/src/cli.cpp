#include "cutbench/cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cutbench/canonical.hpp"
#include "cutbench/connectivity.hpp"
#include "cutbench/constructions.hpp"
#include "cutbench/generate.hpp"
#include "cutbench/parallel.hpp"
#include "cutbench/report_json.hpp"
#include "cutbench/subsets.hpp"
#include "cutbench/sweep.hpp"

namespace cutbench::cli {
namespace {

struct SweepCommand {
  const char* name;
  const char* checker;
  const char* help;
};

constexpr SweepCommand kSweeps[] = {
    {"verify-theorem1", "theorem1", "Find every graph satisfying the three independent-cut conditions for k"},
    {"verify-cycles", nullptr, "Check that cycles are the only graphs where every nonadjacent pair (or disjoint edge pair) separates"},
    {"verify-corollary2", "corollary2", "Look for k-edge-connected graphs with matching number > k where every k-matching separates"},
    {"verify-observation4", "conjecture3", "Run the peripheral-cut checker with k = 2 over all connected graphs"},
    {"hunt-conjecture3", "conjecture3", "Search for graphs where every peripheral k-set is a vertex cut"},
    {"hunt-periphery", "special-periphery", "Find non-k-connected graphs of given diameter and periphery size where every peripheral k-set cuts"},
};

bool is_sweep(const std::string& command) {
  for (const auto& s : kSweeps) {
    if (command == s.name) return true;
  }
  return false;
}

std::string checker_for(const RunConfig& c) {
  if (c.command == "verify-cycles") return c.mode == PairMode::vertex ? "cycles-vertex" : "cycles-edge";
  for (const auto& s : kSweeps) {
    if (c.command == s.name) return s.checker;
  }
  return {};
}

void add_sweep_options(CLI::App* sub, RunConfig& c, std::string& format, std::string& policy, int& workers) {
  sub->add_option("--max-n", c.n_max, "Largest order to generate (1..10)");
  sub->add_option("--min-n", c.n_min, "Smallest order to report")->check(CLI::PositiveNumber);
  sub->add_option("--input", c.input, "Read graph6 graphs from a file ('-' for stdin) instead of generating");
  sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json-lines"}));
  sub->add_option("--workers", workers, "Worker threads");
  sub->add_option("--on-decode-error", policy, "Bad graph6 line policy")->check(CLI::IsMember({"abort", "skip"}));
  sub->add_flag("--all", c.all_certificates, "Emit the certificate of every examined graph");
  sub->add_flag("--timing", c.timing, "Include elapsed time and worker count in the report");
  sub->add_flag("--quiet", c.quiet, "No progress lines on stderr");
}

void validate(RunConfig& c) {
  if (c.workers < 1) throw UsageError("--workers must be at least 1");
  if (is_sweep(c.command)) {
    if (!c.input) {
      if (c.n_max < 1) throw UsageError("--max-n is required (1.." + std::to_string(kMaxGenerationOrder) + ")");
      if (c.n_max > kMaxGenerationOrder) {
        throw UsageError("--max-n above " + std::to_string(kMaxGenerationOrder) + " needs --input from an external generator");
      }
    }
    if (c.command == "hunt-periphery") {
      if (c.k < 1) throw UsageError("--k must be at least 1");
      if (c.k > c.periphery_size) throw UsageError("--k must not exceed --periphery-size");
      if (c.diameter < 1) throw UsageError("--diameter must be at least 1");
    } else if (c.command != "verify-cycles" && c.command != "verify-observation4" && c.k < 2) {
      throw UsageError("--k must be at least 2");
    }
  }
  if (c.command == "check") {
    if (!c.graph6 && !c.input) throw UsageError("check needs --graph6 or --input");
    if (!c.props && !c.checker) c.props = true;
    if (c.checker) {
      find_checker(*c.checker);
      if (*c.checker != "special-periphery" && *c.checker != "cycles-vertex" && *c.checker != "cycles-edge" && c.k < 2) {
        throw UsageError("--k must be at least 2");
      }
    }
  }
  if (c.command == "gen") {
    if (c.n < 1 || c.n > kMaxGenerationOrder) throw UsageError("--n must be in 1.." + std::to_string(kMaxGenerationOrder));
    if (c.min_degree < 0) throw UsageError("--min-degree must be non-negative");
  }
}

}  // namespace

RunConfig parse_args(const std::vector<std::string>& args) {
  RunConfig c;
  c.k = 3;
  c.workers = default_worker_count();
  std::string format = "text";
  std::string policy = "abort";
  std::string mode = "vertex";
  int workers = c.workers;

  CLI::App app{"Exhaustive checks of independent-vertex-cut characterizations on small graphs"};
  app.require_subcommand(1);

  auto* check = app.add_subcommand("check", "Inspect one graph or run one checker on it");
  check->add_option("--graph6", c.graph6, "Graph in graph6");
  check->add_option("--input", c.input, "Check every graph in a graph6 file ('-' for stdin)");
  check->add_flag("--props", c.props, "Print order, size, connectivities, alpha, nu, diameter, periphery");
  check->add_option("--checker", c.checker, "Run a registered checker");
  check->add_option("--k", c.k, "Checker parameter k (default 3)");
  check->add_option("--diameter", c.diameter, "special-periphery diameter");
  check->add_option("--periphery-size", c.periphery_size, "special-periphery periphery size");
  check->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json-lines"}));
  check->add_option("--on-decode-error", policy, "Bad graph6 line policy")->check(CLI::IsMember({"abort", "skip"}));

  auto* construct = app.add_subcommand("construct", "Build a named graph");
  construct->add_option("family", c.family, "complete | cycle | path | complete-bipartite | hypercube | kss-pm")
      ->required()
      ->check(CLI::IsMember({"complete", "cycle", "path", "complete-bipartite", "hypercube", "kss-pm"}));
  int n_param = 0;
  int s_param = 0;
  int t_param = 0;
  int d_param = 0;
  construct->add_option("--n", n_param, "Order (complete, cycle, path)");
  construct->add_option("--s", s_param, "Part size (complete-bipartite, kss-pm)");
  construct->add_option("--t", t_param, "Second part size (complete-bipartite)");
  construct->add_option("--d", d_param, "Dimension (hypercube)");
  construct->add_option("--emit", c.emit, "graph6 | edges | props")->check(CLI::IsMember({"graph6", "edges", "props"}));

  auto* gen = app.add_subcommand("gen", "Emit one graph6 line per isomorphism class");
  gen->add_option("--n", c.n, "Order (1..10)")->required();
  gen->add_flag("--connected", c.connected, "Connected graphs only");
  gen->add_option("--min-degree", c.min_degree, "Minimum degree");
  gen->add_option("--workers", workers, "Worker threads");
  gen->add_flag("--quiet", c.quiet, "No summary line on stderr");

  for (const auto& s : kSweeps) {
    auto* sub = app.add_subcommand(s.name, s.help);
    add_sweep_options(sub, c, format, policy, workers);
    const std::string name = s.name;
    if (name == "verify-theorem1" || name == "verify-corollary2" || name == "hunt-conjecture3") {
      sub->add_option("--k", c.k, "Parameter k (>= 2, default 3)");
    }
    if (name == "verify-cycles") {
      sub->add_option("--mode", mode, "vertex | edge")->check(CLI::IsMember({"vertex", "edge"}));
    }
    if (name == "hunt-periphery") {
      sub->add_option("--k", c.k, "Size of the peripheral sets")->required();
      sub->add_option("--diameter", c.diameter, "Required diameter")->required();
      sub->add_option("--periphery-size", c.periphery_size, "Required periphery size")->required();
    }
  }

  std::vector<const char*> argv{"cutbench"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested(app.help());
  } catch (const CLI::CallForAllHelp&) {
    throw HelpRequested(app.help("", CLI::AppFormatMode::All));
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  for (const auto* sub : app.get_subcommands()) c.command = sub->get_name();
  if (c.command == "verify-observation4" || c.command == "verify-cycles") c.k = 2;
  c.output_format = format == "json-lines" ? OutputFormat::json_lines : OutputFormat::text;
  c.on_decode_error = policy == "skip" ? DecodePolicy::skip : DecodePolicy::abort;
  c.mode = mode == "edge" ? PairMode::edge : PairMode::vertex;
  c.workers = workers;
  if (c.command == "construct") {
    if (c.family == "complete-bipartite") {
      c.a = s_param;
      c.b = t_param;
    } else if (c.family == "hypercube") {
      c.a = d_param;
    } else if (c.family == "kss-pm") {
      c.a = s_param;
    } else {
      c.a = n_param;
    }
  }
  try {
    validate(c);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return c;
}

namespace {

class Output {
 public:
  Output(const RunConfig& c, std::ostream& out, std::ostream& err) : c_(c), out_(out), err_(err) {}

  bool json() const { return c_.output_format == OutputFormat::json_lines; }
  std::ostream& out() { return out_; }
  void progress(const std::string& line) {
    if (!c_.quiet) err_ << line << '\n';
  }

  void certificate(const Certificate& cert) {
    if (json()) {
      out_ << json_line(certificate_to_json(cert)) << '\n';
      return;
    }
    out_ << cert.graph_id << "  " << to_string(cert.verdict) << "  " << cert.detail;
    if (cert.witness_set) out_ << "  witness " << cert.witness_set->to_string();
    if (cert.witness_matching) {
      out_ << "  witness matching";
      for (const Edge& e : cert.witness_matching->pairs) out_ << " " << e.u << "-" << e.v;
    }
    out_ << '\n';
  }

 private:
  const RunConfig& c_;
  std::ostream& out_;
  std::ostream& err_;
};

nlohmann::json properties(const Graph& g, const std::string& text) {
  nlohmann::json j;
  j["type"] = "properties";
  j["graph"] = text;
  j["n"] = g.order();
  j["m"] = g.edge_count();
  j["min_degree"] = g.min_degree();
  j["max_degree"] = g.max_degree();
  j["kappa"] = g.order() == 0 ? 0 : vertex_connectivity(g);
  j["lambda"] = g.order() == 0 ? 0 : edge_connectivity(g);
  j["alpha"] = independence_number(g);
  j["nu"] = matching_number(g);
  j["components"] = components(g).size();
  if (is_connected(g)) {
    const auto p = distance_profile(g);
    j["diameter"] = p.diameter;
    j["periphery"] = p.periphery.members();
  } else {
    j["diameter"] = nullptr;
    j["periphery"] = nullptr;
  }
  j["claw_free"] = !find_induced_claw(g).has_value();
  return j;
}

void print_properties(Output& o, const Graph& g, const std::string& text) {
  const auto j = properties(g, text);
  if (o.json()) {
    o.out() << json_line(j) << '\n';
    return;
  }
  auto& out = o.out();
  out << "graph6=" << text << " n=" << j["n"] << " m=" << j["m"] << '\n';
  out << "kappa=" << j["kappa"] << " lambda=" << j["lambda"] << " alpha=" << j["alpha"] << " nu=" << j["nu"]
      << " min_degree=" << j["min_degree"] << " max_degree=" << j["max_degree"] << '\n';
  if (j["diameter"].is_null()) {
    out << "diameter=undefined (" << j["components"] << " components)\n";
  } else {
    out << "diameter=" << j["diameter"] << " periphery=" << VertexSet([&] {
      VertexSet s;
      for (int v : j["periphery"].get<std::vector<int>>()) s = s.with(v);
      return s;
    }()).to_string() << '\n';
  }
  out << "claw_free=" << (j["claw_free"].get<bool>() ? "yes" : "no") << '\n';
}

CheckParams params_of(const RunConfig& c) { return CheckParams{c.k, c.diameter, c.periphery_size}; }

// Graphs the characterization sweeps are supposed to find.
bool expected_satisfier(const RunConfig& c, const Graph& g) {
  if (c.command == "verify-theorem1") {
    if (c.k >= 3) return are_isomorphic(g, kss_minus_pm(c.k + 1));
    return g.order() >= 6 && are_isomorphic(g, cycle_graph(g.order()));
  }
  if (c.command == "verify-cycles") return g.order() >= 4 && are_isomorphic(g, cycle_graph(g.order()));
  return true;
}

std::vector<Graph> expected_in_range(const RunConfig& c) {
  std::vector<Graph> out;
  if (c.command == "verify-theorem1") {
    if (c.k >= 3) {
      if (2 * c.k + 2 <= c.n_max && 2 * c.k + 2 >= c.n_min) out.push_back(kss_minus_pm(c.k + 1));
    } else {
      for (int n = std::max(6, c.n_min); n <= c.n_max; ++n) out.push_back(cycle_graph(n));
    }
  } else if (c.command == "verify-cycles") {
    for (int n = std::max(4, c.n_min); n <= c.n_max; ++n) out.push_back(cycle_graph(n));
  }
  return out;
}

int sweep_exit_code(const RunConfig& c, const SweepReport& r, std::string& verdict) {
  const CheckerInfo& info = find_checker(r.checker);
  if (info.role == CheckerRole::universal) {
    verdict = r.violations.empty() ? "clean: no violations" : "violations found";
    return r.violations.empty() ? kExitClean : kExitFindings;
  }
  if (c.command == "hunt-periphery") {
    verdict = std::to_string(r.satisfiers.size()) + " hits";
    return kExitClean;
  }
  std::vector<CanonicalForm> found;
  for (const auto& text : r.satisfiers) {
    const Graph g = graph6_decode(text);
    if (!expected_satisfier(c, g)) {
      verdict = "unexpected satisfier " + text;
      return kExitFindings;
    }
    found.push_back(canonical_form(g));
  }
  if (!c.input) {
    for (const Graph& g : expected_in_range(c)) {
      if (std::find(found.begin(), found.end(), canonical_form(g)) == found.end()) {
        verdict = "expected satisfier " + graph6_encode(g) + " missing";
        return kExitFindings;
      }
    }
  }
  verdict = "expected: satisfiers match the characterization";
  return kExitClean;
}

int run_sweep(const RunConfig& c, Output& o, std::istream& in) {
  SweepOptions options;
  options.checker = checker_for(c);
  options.params = params_of(c);
  options.n_min = c.n_min;
  options.n_max = c.n_max;
  options.workers = c.workers;
  if (c.command == "verify-observation4") options.filter = GenFilter{true, 0, 0};
  if (c.all_certificates) options.on_certificate = [&](const Certificate& cert) { o.certificate(cert); };
  options.on_progress = [&](const std::string& line) { o.progress(line); };

  SweepReport report;
  if (c.input) {
    std::ifstream file;
    std::istream* src = &in;
    if (*c.input != "-") {
      file.open(*c.input);
      if (!file) throw UsageError("cannot open input '" + *c.input + "'");
      src = &file;
    }
    Graph6Reader reader(*src, c.on_decode_error);
    report = sweep_stream(options, reader);
    if (reader.skipped() > 0) o.progress(std::to_string(reader.skipped()) + " undecodable lines skipped");
  } else {
    report = sweep(options);
  }

  if (!c.all_certificates) {
    for (const Certificate& cert : report.events) o.certificate(cert);
  }
  std::string verdict;
  const int code = sweep_exit_code(c, report, verdict);
  if (o.json()) {
    o.out() << json_line(report_to_json(report, c.timing)) << '\n';
  } else {
    auto& out = o.out();
    out << "checker " << report.checker << " k=" << report.params.k << " orders " << report.n_min << ".." << report.n_max
        << '\n';
    out << "graphs examined: " << report.graphs_examined << " (premises held: " << report.premises_held
        << ", witnesses: " << report.witnesses << ")\n";
    out << "satisfiers: " << report.satisfiers.size() << '\n';
    for (const auto& s : report.satisfiers) out << "  " << s << '\n';
    out << "violations: " << report.violations.size() << '\n';
    for (const auto& s : report.violations) out << "  " << s << '\n';
    if (c.timing) out << "elapsed: " << report.elapsed_ms << " ms on " << report.worker_count << " workers\n";
    out << "result: " << verdict << '\n';
  }
  return code;
}

int run_check(const RunConfig& c, Output& o, std::istream& in) {
  std::vector<NumberedGraph> graphs;
  if (c.graph6) {
    try {
      graphs.push_back(NumberedGraph{0, *c.graph6, graph6_decode(*c.graph6)});
    } catch (const Graph6Error& e) {
      throw UsageError(std::string("bad --graph6: ") + e.what());
    }
  } else {
    std::ifstream file;
    std::istream* src = &in;
    if (*c.input != "-") {
      file.open(*c.input);
      if (!file) throw UsageError("cannot open input '" + *c.input + "'");
      src = &file;
    }
    Graph6Reader reader(*src, c.on_decode_error);
    while (auto g = reader.next()) graphs.push_back(std::move(*g));
  }
  int code = kExitClean;
  for (const auto& item : graphs) {
    if (c.props) print_properties(o, item.graph, item.text);
    if (c.checker) {
      const Certificate cert = find_checker(*c.checker).check(item.graph, params_of(c));
      o.certificate(cert);
      if (cert.verdict == Verdict::violation) code = kExitFindings;
    }
  }
  return code;
}

int run_construct(const RunConfig& c, Output& o) {
  Graph g;
  try {
    g = standard_graph(c.family, c.a, c.b);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const std::string text = graph6_encode(g);
  if (c.emit == "props") {
    print_properties(o, g, text);
  } else if (c.emit == "edges") {
    if (o.json()) {
      nlohmann::json edges = nlohmann::json::array();
      for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
      o.out() << json_line({{"type", "graph"}, {"n", g.order()}, {"edges", edges}}) << '\n';
    } else {
      o.out() << g.order() << ' ' << g.edge_count() << '\n';
      for (const Edge& e : g.edges()) o.out() << e.u << ' ' << e.v << '\n';
    }
  } else if (o.json()) {
    o.out() << json_line({{"type", "graph"}, {"graph", text}}) << '\n';
  } else {
    o.out() << text << '\n';
  }
  return kExitClean;
}

int run_gen(const RunConfig& c, Output& o) {
  const auto graphs = generate_all(c.n, GenFilter{c.connected, c.min_degree, 0}, c.workers);
  for (const Graph& g : graphs) {
    if (o.json()) {
      o.out() << json_line({{"type", "graph"}, {"graph", graph6_encode(g)}}) << '\n';
    } else {
      o.out() << graph6_encode(g) << '\n';
    }
  }
  o.progress(std::to_string(graphs.size()) + " graphs on " + std::to_string(c.n) + " vertices");
  return kExitClean;
}

}  // namespace

int execute(const RunConfig& config, std::ostream& out, std::ostream& err, std::istream& in) {
  Output o(config, out, err);
  if (config.command == "check") return run_check(config, o, in);
  if (config.command == "construct") return run_construct(config, o);
  if (config.command == "gen") return run_gen(config, o);
  if (is_sweep(config.command)) return run_sweep(config, o, in);
  throw UsageError("unknown command '" + config.command + "'");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in) {
  try {
    const RunConfig config = parse_args(args);
    return execute(config, out, err, in);
  } catch (const HelpRequested& h) {
    out << h.what();
    return kExitClean;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Graph6Error& e) {
    err << "input error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace cutbench::cli
