#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cutbench/graph.hpp"

namespace cutbench {

/// Largest order accepted by canonical_form.
inline constexpr int kMaxCanonicalOrder = 12;

/// Relabeling-invariant identifier of an isomorphism class: byte 0 is n, the
/// remaining bytes hold the upper triangle of the canonically relabeled
/// adjacency matrix, row by row ((0,1), (0,2), ..., (n-2,n-1)), packed
/// most-significant bit first and zero padded. Ordering is (n, bits).
struct CanonicalForm {
  std::array<std::uint8_t, 10> bytes{};

  int order() const { return bytes[0]; }
  std::string hex() const;

  auto operator<=>(const CanonicalForm&) const = default;
};

/// Canonical relabeling: position[v] is the new label of vertex v.
/// Throws GraphError when n > 12.
std::vector<int> canonical_labeling(const Graph& g);
CanonicalForm canonical_form(const Graph& g);
/// g relabeled by canonical_labeling; isomorphic graphs give equal results.
Graph canonical_graph(const Graph& g);

/// position[v] is the new label of vertex v; must be a permutation of 0..n-1.
Graph permute(const Graph& g, std::span<const int> position);

/// Rejects on order, edge count and degree multiset, then compares canonical forms.
bool are_isomorphic(const Graph& g, const Graph& h);

namespace detail {

/// Packed row-major upper triangle, first pair in the most significant used bit.
using PackedKey = unsigned __int128;

struct CanonicalResult {
  PackedKey key = 0;
  /// order[i] = original vertex placed at position i
  std::array<std::int8_t, kMaxCanonicalOrder> order{};
};

/// Core search over raw adjacency rows; n = rows.size() <= 12.
CanonicalResult canonicalize_rows(std::span<const std::uint64_t> rows);

PackedKey pack_rows(std::span<const std::uint64_t> rows);
std::vector<std::uint64_t> unpack_rows(int n, PackedKey key);
CanonicalForm form_from_key(int n, PackedKey key);

}  // namespace detail

}  // namespace cutbench
