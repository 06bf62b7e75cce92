#pragma once

#include <span>
#include <string>
#include <string_view>

#include "cutbench/certificate.hpp"
#include "cutbench/generate.hpp"
#include "cutbench/graph.hpp"

namespace cutbench {

enum class PairMode { vertex, edge };

/// Conditions: (1) k-connected, (2) independence number > k, (3) every
/// independent k-set is a vertex cut. (1) and (2) are the premises and are
/// evaluated in that order; (3) is only evaluated when both hold.
Certificate check_theorem1_conditions(const Graph& g, int k);

/// Vertex mode: premises 2-connected and noncomplete; holds iff every
/// nonadjacent pair is a vertex cut. Edge mode: premises 2-edge-connected and
/// matching number >= 2; holds iff deleting any two disjoint edges disconnects.
Certificate check_pair_cut_characterization(const Graph& g, PairMode mode);

/// Premises: k-edge-connected and matching number > k. Holds iff some k-matching
/// leaves the graph connected; the first such matching is the witness.
Certificate check_corollary2(const Graph& g, int k);

/// Premises: k-connected and periphery of size >= k. Holds iff some k-subset
/// of the periphery leaves a connected remainder; the first is the witness.
Certificate check_conjecture3(const Graph& g, int k);

/// Premises: connected, given diameter, periphery of exactly the given size.
/// A hit (verdict witness) is additionally not k-connected and has every
/// k-subset of its periphery a vertex cut.
Certificate check_special_periphery(const Graph& g, int diameter, int periphery_size, int k);

/// Parameters shared by all registered checkers.
struct CheckParams {
  int k = 2;
  int diameter = 0;
  int periphery_size = 0;
};

/// Characterization checkers report the graphs where the property holds
/// (satisfiers); universal checkers report the graphs where it fails
/// (violations).
enum class CheckerRole { characterization, universal };

struct CheckerInfo {
  std::string_view name;
  CheckerRole role;
  Certificate (*check)(const Graph&, const CheckParams&);
  /// Generation filter implied by the premises; always lossless.
  GenFilter (*implied_filter)(const CheckParams&);
};

/// Registered names: theorem1, cycles-vertex, cycles-edge, corollary2,
/// conjecture3, special-periphery. Throws std::invalid_argument otherwise.
const CheckerInfo& find_checker(std::string_view name);
std::span<const CheckerInfo> registered_checkers();

}  // namespace cutbench
