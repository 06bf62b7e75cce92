#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "cutbench/canonical.hpp"
#include "cutbench/graph.hpp"

namespace cutbench {

/// Largest order the built-in generator accepts; feed graph6 from an external
/// generator for anything bigger.
inline constexpr int kMaxGenerationOrder = 10;

/// Filter pushed into generation.
struct GenFilter {
  bool connected_only = false;
  int min_degree = 0;
  /// Largest order that will be requested from this generation run. Degree
  /// pruning at smaller orders is relative to it; 0 means "the order being
  /// generated".
  int max_n = 0;
};

/// One representative per isomorphism class, each equal to its own canonical
/// graph, sorted by canonical form.
struct GeneratedLevel {
  int order = 0;
  std::vector<Graph> graphs;
};

/// All isomorphism classes on n vertices passing `filter`, 1 <= n <= 10.
/// Throws std::out_of_range otherwise. Output does not depend on `workers`.
std::vector<Graph> generate_all(int n, GenFilter filter = {}, int workers = 1);

/// Orders 1..n_max from a single augmentation pass; level i holds order i + 1.
std::vector<GeneratedLevel> generate_levels(int n_max, GenFilter filter = {}, int workers = 1);

/// True iff g passes the emission filter (connectivity and minimum degree).
bool passes_filter(const Graph& g, const GenFilter& filter);

namespace detail {

/// Level-by-level form used by the sweep engine: sink(order, keys) receives the
/// sorted packed keys of the graphs emitted at each order 1..n_max.
void generate_keys(int n_max, GenFilter filter, int workers,
                   const std::function<void(int, const std::vector<PackedKey>&)>& sink);

}  // namespace detail

}  // namespace cutbench
