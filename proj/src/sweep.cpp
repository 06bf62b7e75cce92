#include "cutbench/sweep.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <tuple>

#include "cutbench/parallel.hpp"

namespace cutbench {
namespace {

constexpr std::size_t kBlock = 1 << 15;

class Accumulator {
 public:
  Accumulator(const SweepOptions& options, const CheckerInfo& info, SweepReport& report)
      : options_(options), info_(info), report_(report) {}

  // Checks graphs[0..count) (materialized by `graph_at`) in parallel blocks and
  // folds the certificates in index order.
  template <typename GraphAt>
  long run(std::size_t count, GraphAt&& graph_at) {
    std::vector<Certificate> certs;
    for (std::size_t base = 0; base < count; base += kBlock) {
      const std::size_t len = std::min(kBlock, count - base);
      certs.assign(len, Certificate{});
      parallel_for(
          len, options_.workers,
          [&](std::size_t i, int) { certs[i] = info_.check(graph_at(base + i), options_.params); }, 16);
      for (Certificate& c : certs) fold(std::move(c));
    }
    return static_cast<long>(count);
  }

 private:
  void fold(Certificate c) {
    ++report_.graphs_examined;
    if (c.premises_hold) ++report_.premises_held;
    if (c.verdict == Verdict::witness) ++report_.witnesses;
    if (options_.on_certificate) options_.on_certificate(c);
    if (info_.role == CheckerRole::characterization && c.verdict == Verdict::witness) {
      report_.satisfiers.push_back(c.graph_id);
      report_.events.push_back(std::move(c));
    } else if (info_.role == CheckerRole::universal && c.verdict == Verdict::violation) {
      report_.violations.push_back(c.graph_id);
      report_.events.push_back(std::move(c));
    }
  }

  const SweepOptions& options_;
  const CheckerInfo& info_;
  SweepReport& report_;
};

SweepReport start_report(const SweepOptions& options) {
  SweepReport report;
  report.checker = options.checker;
  report.params = options.params;
  report.n_min = options.n_min;
  report.n_max = options.n_max;
  report.worker_count = std::max(1, options.workers);
  return report;
}

double millis_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

SweepReport sweep(const SweepOptions& options) {
  const CheckerInfo& info = find_checker(options.checker);
  if (options.n_max < 1 || options.n_max > kMaxGenerationOrder) {
    throw std::out_of_range("sweep order must be in [1, " + std::to_string(kMaxGenerationOrder) + "]");
  }
  const auto t0 = std::chrono::steady_clock::now();
  SweepReport report = start_report(options);
  GenFilter filter = options.filter.value_or(info.implied_filter(options.params));
  filter.max_n = std::max(filter.max_n, options.n_max);
  Accumulator acc(options, info, report);

  detail::generate_keys(options.n_max, filter, options.workers,
                        [&](int order, const std::vector<detail::PackedKey>& keys) {
                          if (order < options.n_min) return;
                          const long examined = acc.run(keys.size(), [&](std::size_t i) {
                            return Graph::from_rows(detail::unpack_rows(order, keys[i]));
                          });
                          report.examined_by_order.push_back(examined);
                          if (options.on_progress) {
                            options.on_progress("n=" + std::to_string(order) + ": " + std::to_string(examined) +
                                                " graphs checked");
                          }
                        });
  report.elapsed_ms = millis_since(t0);
  return report;
}

SweepReport sweep_stream(const SweepOptions& options, Graph6Reader& reader) {
  const CheckerInfo& info = find_checker(options.checker);
  const auto t0 = std::chrono::steady_clock::now();
  SweepReport report = start_report(options);
  const GenFilter filter = options.filter.value_or(info.implied_filter(options.params));

  struct Item {
    int order;
    std::optional<CanonicalForm> form;
    std::string text;
    Graph graph;
  };
  std::vector<Item> items;
  while (auto next = reader.next()) {
    if (!passes_filter(next->graph, filter)) continue;
    const int n = next->graph.order();
    std::optional<CanonicalForm> form;
    if (n <= kMaxCanonicalOrder) form = canonical_form(next->graph);
    items.push_back(Item{n, form, std::move(next->text), std::move(next->graph)});
  }
  // Same order as the generator where canonical forms exist; graph6 text beyond.
  std::stable_sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
    return std::tie(a.order, a.form, a.text) < std::tie(b.order, b.form, b.text);
  });

  report.n_min = items.empty() ? 0 : items.front().order;
  report.n_max = items.empty() ? 0 : items.back().order;
  if (!items.empty()) report.examined_by_order.assign(static_cast<std::size_t>(report.n_max - report.n_min + 1), 0);
  for (const Item& it : items) ++report.examined_by_order[static_cast<std::size_t>(it.order - report.n_min)];

  Accumulator acc(options, info, report);
  acc.run(items.size(), [&](std::size_t i) -> const Graph& { return items[i].graph; });
  if (options.on_progress) options.on_progress(std::to_string(items.size()) + " streamed graphs checked");
  report.elapsed_ms = millis_since(t0);
  return report;
}

SweepReport sweep(const std::string& checker, int k, int n_max, const GenFilter& filter, int workers) {
  SweepOptions options;
  options.checker = checker;
  options.params.k = k;
  options.n_max = n_max;
  options.filter = filter;
  options.workers = workers;
  return sweep(options);
}

SweepReport verify_observation4(int n_max, int workers) {
  SweepOptions options;
  options.checker = "conjecture3";
  options.params.k = 2;
  options.n_max = n_max;
  options.filter = GenFilter{true, 0, 0};
  options.workers = workers;
  return sweep(options);
}

SweepReport hunt_special_periphery(int diameter, int periphery_size, int k, int n_max, int workers) {
  if (k > periphery_size) throw std::invalid_argument("hunt needs k <= periphery size");
  SweepOptions options;
  options.checker = "special-periphery";
  options.params = CheckParams{k, diameter, periphery_size};
  options.n_max = n_max;
  options.workers = workers;
  return sweep(options);
}

}  // namespace cutbench
