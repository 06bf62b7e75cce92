#include "cutbench/generate.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "cutbench/parallel.hpp"

namespace cutbench {
namespace {

using detail::PackedKey;

constexpr std::size_t kBufferLimit = std::size_t{1} << 22;

// Sorted, duplicate-free key set fed through an unsorted staging buffer.
class KeySet {
 public:
  void add(PackedKey key) {
    buffer_.push_back(key);
    if (buffer_.size() >= kBufferLimit) flush();
  }

  void flush() {
    if (buffer_.empty()) return;
    std::sort(buffer_.begin(), buffer_.end());
    buffer_.erase(std::unique(buffer_.begin(), buffer_.end()), buffer_.end());
    std::vector<PackedKey> merged;
    merged.reserve(sorted_.size() + buffer_.size());
    std::set_union(sorted_.begin(), sorted_.end(), buffer_.begin(), buffer_.end(), std::back_inserter(merged));
    sorted_ = std::move(merged);
    buffer_.clear();
  }

  void absorb(KeySet& other) {
    other.flush();
    for (PackedKey k : other.sorted_) add(k);
    other.sorted_.clear();
    other.sorted_.shrink_to_fit();
  }

  std::vector<PackedKey> take() {
    flush();
    return std::move(sorted_);
  }

 private:
  std::vector<PackedKey> sorted_;
  std::vector<PackedKey> buffer_;
};

// Smallest degree a vertex may have at order m and still reach min_degree by
// order horizon, gaining at most one neighbour per added vertex.
int degree_floor(const GenFilter& filter, int horizon, int m) { return filter.min_degree - (horizon - m); }

// All children of one parent (order m - 1) that survive the order-m prune.
void extend(std::span<const std::uint64_t> parent, const GenFilter& filter, int horizon, KeySet& out) {
  const int m = static_cast<int>(parent.size()) + 1;
  const int floor_m = degree_floor(filter, horizon, m);
  const std::uint64_t everyone = VertexSet::range(m - 1).bits();
  std::uint64_t required = 0;
  for (int v = 0; v < m - 1; ++v) {
    const int d = std::popcount(parent[static_cast<std::size_t>(v)]);
    if (d + 1 < floor_m) return;
    if (d < floor_m) required |= std::uint64_t{1} << v;
  }
  const std::uint64_t free = everyone & ~required;
  std::array<std::uint64_t, kMaxCanonicalOrder> rows{};
  const std::uint64_t fresh = std::uint64_t{1} << (m - 1);
  // Enumerate required | sub for every subset sub of free.
  std::uint64_t sub = 0;
  while (true) {
    const std::uint64_t mask = required | sub;
    const bool attached = !filter.connected_only || mask != 0 || m == 1;
    if (attached && std::popcount(mask) >= floor_m) {
      for (int v = 0; v < m - 1; ++v) {
        rows[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(v)] | (((mask >> v) & 1U) ? fresh : 0);
      }
      rows[static_cast<std::size_t>(m - 1)] = mask;
      out.add(detail::canonicalize_rows(std::span<const std::uint64_t>(rows.data(), static_cast<std::size_t>(m))).key);
    }
    if (sub == free) break;
    sub = (sub - free) & free;
  }
}

}  // namespace

bool passes_filter(const Graph& g, const GenFilter& filter) {
  if (filter.connected_only && !is_connected(g)) return false;
  return g.order() == 0 || g.min_degree() >= filter.min_degree;
}

namespace detail {

void generate_keys(int n_max, GenFilter filter, int workers,
                   const std::function<void(int, const std::vector<PackedKey>&)>& sink) {
  if (n_max < 1 || n_max > kMaxGenerationOrder) {
    throw std::out_of_range("generation order must be in [1, " + std::to_string(kMaxGenerationOrder) + "], got " +
                            std::to_string(n_max));
  }
  if (filter.min_degree < 0) throw std::invalid_argument("minimum degree must be non-negative");
  const int horizon = std::max(filter.max_n, n_max);

  std::vector<PackedKey> parents;
  if (degree_floor(filter, horizon, 1) <= 0) parents.push_back(0);

  for (int m = 1; m <= n_max; ++m) {
    if (m > 1) {
      std::vector<KeySet> local(static_cast<std::size_t>(std::max(1, workers)));
      parallel_for(
          parents.size(), workers,
          [&](std::size_t i, int worker) {
            const auto rows = unpack_rows(m - 1, parents[i]);
            extend(rows, filter, horizon, local[static_cast<std::size_t>(worker)]);
          },
          16);
      for (std::size_t w = 1; w < local.size(); ++w) local[0].absorb(local[w]);
      parents = local[0].take();
    }
    std::vector<PackedKey> emitted;
    for (PackedKey key : parents) {
      const auto rows = unpack_rows(m, key);
      int least = m;
      for (std::uint64_t r : rows) least = std::min(least, std::popcount(r));
      if (least >= filter.min_degree) emitted.push_back(key);
    }
    sink(m, emitted);
  }
}

}  // namespace detail

std::vector<GeneratedLevel> generate_levels(int n_max, GenFilter filter, int workers) {
  std::vector<GeneratedLevel> levels;
  detail::generate_keys(n_max, filter, workers, [&](int order, const std::vector<PackedKey>& keys) {
    GeneratedLevel level;
    level.order = order;
    level.graphs.reserve(keys.size());
    for (PackedKey key : keys) level.graphs.push_back(Graph::from_rows(detail::unpack_rows(order, key)));
    levels.push_back(std::move(level));
  });
  return levels;
}

std::vector<Graph> generate_all(int n, GenFilter filter, int workers) {
  auto levels = generate_levels(n, filter, workers);
  return std::move(levels.back().graphs);
}

}  // namespace cutbench
