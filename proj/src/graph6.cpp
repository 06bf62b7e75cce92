#include "cutbench/graph6.hpp"

#include <vector>

namespace cutbench {

std::string graph6_encode(const Graph& g) {
  const int n = g.order();
  std::string out;
  out += static_cast<char>(n + 63);
  int group = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      group = (group << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out += static_cast<char>(group + 63);
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out += static_cast<char>((group << (6 - filled)) + 63);
  return out;
}

Graph graph6_decode(std::string_view line) {
  if (line.empty()) throw Graph6Error("empty graph6 line");
  for (char c : line) {
    const int b = static_cast<unsigned char>(c);
    if (b < 63 || b > 126) throw Graph6Error("byte " + std::to_string(b) + " outside the graph6 range [63, 126]");
  }
  const int n = static_cast<unsigned char>(line[0]) - 63;
  if (n > kMaxOrder) throw Graph6Error("graph6 orders above 62 are not supported");
  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
  const std::size_t body = (bits + 5) / 6;
  if (line.size() < 1 + body) throw Graph6Error("truncated graph6 bit stream");
  if (line.size() > 1 + body) throw Graph6Error("trailing bytes after graph6 bit stream");

  std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = static_cast<unsigned char>(line[1 + k / 6]) - 63;
      if ((byte >> (5 - k % 6)) & 1) {
        rows[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
        rows[static_cast<std::size_t>(j)] |= std::uint64_t{1} << i;
      }
    }
  }
  return Graph::from_rows(std::move(rows));
}

std::optional<NumberedGraph> Graph6Reader::next() {
  std::string text;
  while (std::getline(in_, text)) {
    ++line_;
    if (!text.empty() && text.back() == '\r') text.pop_back();
    if (text.rfind(">>graph6<<", 0) == 0) text.erase(0, 10);
    if (text.empty()) continue;
    try {
      Graph g = graph6_decode(text);
      return NumberedGraph{line_, std::move(text), std::move(g)};
    } catch (const Graph6Error& e) {
      if (policy_ == DecodePolicy::abort) throw Graph6Error(e.what(), line_);
      ++skipped_;
    }
  }
  return std::nullopt;
}

}  // namespace cutbench
