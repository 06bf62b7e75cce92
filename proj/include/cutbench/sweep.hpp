#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cutbench/certificate.hpp"
#include "cutbench/checkers.hpp"
#include "cutbench/generate.hpp"
#include "cutbench/graph6.hpp"

namespace cutbench {

struct SweepReport {
  std::string checker;
  CheckParams params;
  int n_min = 1;
  int n_max = 0;
  long graphs_examined = 0;
  long premises_held = 0;
  long witnesses = 0;
  /// graph6 lines, sorted by (n, canonical form); satisfiers are the witness
  /// verdicts of characterization checkers, violations those of universal ones.
  std::vector<std::string> satisfiers;
  std::vector<std::string> violations;
  /// Full certificates for every satisfier and violation, in the same order.
  std::vector<Certificate> events;
  /// Graphs examined per order n_min..n_max.
  std::vector<long> examined_by_order;
  double elapsed_ms = 0;
  int worker_count = 1;
};

struct SweepOptions {
  std::string checker;
  CheckParams params;
  int n_min = 1;
  int n_max = 0;
  /// Defaults to the checker's implied filter.
  std::optional<GenFilter> filter;
  int workers = 1;
  /// Receives every certificate in report order, on the calling thread.
  std::function<void(const Certificate&)> on_certificate;
  /// Receives one progress line per order.
  std::function<void(const std::string&)> on_progress;
};

/// Runs the checker over every generated graph of order n_min..n_max (n_max <= 10).
SweepReport sweep(const SweepOptions& options);

/// As sweep(), but over graphs read from a graph6 stream; the filter is applied
/// after decoding and n_min/n_max are ignored (the report records the orders seen).
SweepReport sweep_stream(const SweepOptions& options, Graph6Reader& reader);

/// Convenience form: checker over orders 1..n_max with the given filter.
SweepReport sweep(const std::string& checker, int k, int n_max, const GenFilter& filter, int workers = 1);

/// check_conjecture3 with k = 2 over all connected graphs up to n_max.
SweepReport verify_observation4(int n_max, int workers = 1);

/// Connected graphs up to n_max with the given diameter and periphery size that
/// are not k-connected yet have every peripheral k-set as a vertex cut.
SweepReport hunt_special_periphery(int diameter, int periphery_size, int k, int n_max, int workers = 1);

}  // namespace cutbench
