#include "cutbench/canonical.hpp"

#include <algorithm>
#include <bit>

namespace cutbench {
namespace detail {
namespace {

// Ordered partition of the vertex set into cells.
struct Partition {
  std::array<std::uint64_t, kMaxCanonicalOrder> cell{};
  int count = 0;
};

// Splits cells by neighbour counts into each cell in turn until equitable.
// Sub-cells are ordered by ascending count, so the result depends only on the
// graph structure and the incoming cell order.
void refine(std::span<const std::uint64_t> adj, Partition& p) {
  const int n = static_cast<int>(adj.size());
  bool changed = true;
  while (changed && p.count < n) {
    changed = false;
    for (int s = 0; s < p.count && p.count < n; ++s) {
      const std::uint64_t splitter = p.cell[static_cast<std::size_t>(s)];
      Partition next;
      for (int c = 0; c < p.count; ++c) {
        const std::uint64_t members = p.cell[static_cast<std::size_t>(c)];
        if (std::has_single_bit(members)) {
          next.cell[static_cast<std::size_t>(next.count++)] = members;
          continue;
        }
        std::array<std::uint64_t, kMaxCanonicalOrder + 1> by_count{};
        std::uint32_t present = 0;
        for (std::uint64_t b = members; b != 0; b &= b - 1) {
          const int v = std::countr_zero(b);
          const int k = std::popcount(adj[static_cast<std::size_t>(v)] & splitter);
          by_count[static_cast<std::size_t>(k)] |= std::uint64_t{1} << v;
          present |= 1U << k;
        }
        if (std::has_single_bit(present)) {
          next.cell[static_cast<std::size_t>(next.count++)] = members;
          continue;
        }
        changed = true;
        for (std::uint32_t b = present; b != 0; b &= b - 1) {
          next.cell[static_cast<std::size_t>(next.count++)] = by_count[static_cast<std::size_t>(std::countr_zero(b))];
        }
      }
      p = next;
    }
  }
}

bool are_twins(std::span<const std::uint64_t> adj, int u, int v) {
  const std::uint64_t pair = (std::uint64_t{1} << u) | (std::uint64_t{1} << v);
  return ((adj[static_cast<std::size_t>(u)] ^ adj[static_cast<std::size_t>(v)]) & ~pair) == 0;
}

class Search {
 public:
  explicit Search(std::span<const std::uint64_t> adj) : adj_(adj), n_(static_cast<int>(adj.size())) {}

  CanonicalResult run() {
    Partition root;
    if (n_ > 0) {
      root.cell[0] = (n_ == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
      root.count = 1;
    }
    descend(root);
    return best_;
  }

 private:
  void descend(Partition p) {
    refine(adj_, p);
    if (p.count == n_) {
      leaf(p);
      return;
    }
    int target = 0;
    while (std::has_single_bit(p.cell[static_cast<std::size_t>(target)])) ++target;
    const std::uint64_t members = p.cell[static_cast<std::size_t>(target)];

    std::uint64_t tried = 0;
    for (std::uint64_t b = members; b != 0; b &= b - 1) {
      const int v = std::countr_zero(b);
      // Swapping twins is an automorphism fixing every individualized vertex,
      // so their subtrees produce identical leaves.
      bool redundant = false;
      for (std::uint64_t t = tried; t != 0 && !redundant; t &= t - 1) {
        redundant = are_twins(adj_, std::countr_zero(t), v);
      }
      if (redundant) continue;
      tried |= std::uint64_t{1} << v;

      Partition child;
      for (int c = 0; c < p.count; ++c) {
        if (c == target) {
          child.cell[static_cast<std::size_t>(child.count++)] = std::uint64_t{1} << v;
          child.cell[static_cast<std::size_t>(child.count++)] = members & ~(std::uint64_t{1} << v);
        } else {
          child.cell[static_cast<std::size_t>(child.count++)] = p.cell[static_cast<std::size_t>(c)];
        }
      }
      descend(child);
    }
  }

  void leaf(const Partition& p) {
    std::array<std::int8_t, kMaxCanonicalOrder> order{};
    for (int i = 0; i < n_; ++i) order[static_cast<std::size_t>(i)] = static_cast<std::int8_t>(std::countr_zero(p.cell[static_cast<std::size_t>(i)]));
    PackedKey key = 0;
    for (int i = 0; i < n_; ++i) {
      const std::uint64_t row = adj_[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])];
      for (int j = i + 1; j < n_; ++j) key = (key << 1) | ((row >> order[static_cast<std::size_t>(j)]) & 1U);
    }
    if (!have_best_ || key < best_.key) {
      best_.key = key;
      best_.order = order;
      have_best_ = true;
    }
  }

  std::span<const std::uint64_t> adj_;
  int n_;
  CanonicalResult best_;
  bool have_best_ = false;
};

}  // namespace

CanonicalResult canonicalize_rows(std::span<const std::uint64_t> rows) {
  if (rows.size() > static_cast<std::size_t>(kMaxCanonicalOrder)) {
    throw GraphError("canonical form supports at most 12 vertices, got " + std::to_string(rows.size()));
  }
  return Search(rows).run();
}

PackedKey pack_rows(std::span<const std::uint64_t> rows) {
  const int n = static_cast<int>(rows.size());
  PackedKey key = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) key = (key << 1) | ((rows[static_cast<std::size_t>(i)] >> j) & 1U);
  }
  return key;
}

std::vector<std::uint64_t> unpack_rows(int n, PackedKey key) {
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
  int shift = n * (n - 1) / 2;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      --shift;
      if (static_cast<unsigned>(key >> shift) & 1U) {
        rows[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
        rows[static_cast<std::size_t>(j)] |= std::uint64_t{1} << i;
      }
    }
  }
  return rows;
}

CanonicalForm form_from_key(int n, PackedKey key) {
  CanonicalForm f;
  f.bytes[0] = static_cast<std::uint8_t>(n);
  const int bits = n * (n - 1) / 2;
  for (int i = 0; i < bits; ++i) {
    if (static_cast<unsigned>(key >> (bits - 1 - i)) & 1U) {
      f.bytes[static_cast<std::size_t>(1 + i / 8)] |= static_cast<std::uint8_t>(0x80U >> (i % 8));
    }
  }
  return f;
}

}  // namespace detail

std::string CanonicalForm::hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  const int used = 1 + (order() * (order() - 1) / 2 + 7) / 8;
  std::string out;
  for (int i = 0; i < used; ++i) {
    out += kDigits[bytes[static_cast<std::size_t>(i)] >> 4];
    out += kDigits[bytes[static_cast<std::size_t>(i)] & 15U];
  }
  return out;
}

std::vector<int> canonical_labeling(const Graph& g) {
  const auto result = detail::canonicalize_rows(g.rows());
  std::vector<int> position(static_cast<std::size_t>(g.order()));
  for (int i = 0; i < g.order(); ++i) position[static_cast<std::size_t>(result.order[static_cast<std::size_t>(i)])] = i;
  return position;
}

CanonicalForm canonical_form(const Graph& g) {
  return detail::form_from_key(g.order(), detail::canonicalize_rows(g.rows()).key);
}

Graph canonical_graph(const Graph& g) {
  const auto result = detail::canonicalize_rows(g.rows());
  return Graph::from_rows(detail::unpack_rows(g.order(), result.key));
}

Graph permute(const Graph& g, std::span<const int> position) {
  const int n = g.order();
  if (static_cast<int>(position.size()) != n) throw GraphError("permutation length does not match graph order");
  std::uint64_t seen = 0;
  for (int p : position) {
    if (p < 0 || p >= n || ((seen >> p) & 1U)) throw GraphError("not a permutation of the vertex set");
    seen |= std::uint64_t{1} << p;
  }
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v) {
    for (int w : g.neighbors(v)) rows[static_cast<std::size_t>(position[static_cast<std::size_t>(v)])] |= std::uint64_t{1} << position[static_cast<std::size_t>(w)];
  }
  return Graph::from_rows(std::move(rows));
}

bool are_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
  std::vector<int> dg;
  std::vector<int> dh;
  for (int v = 0; v < g.order(); ++v) {
    dg.push_back(g.degree(v));
    dh.push_back(h.degree(v));
  }
  std::sort(dg.begin(), dg.end());
  std::sort(dh.begin(), dh.end());
  if (dg != dh) return false;
  return canonical_form(g) == canonical_form(h);
}

}  // namespace cutbench
