#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "cutbench/graph.hpp"

namespace cutbench {

/// Decode failure; line() is 0 when the text did not come from a stream.
class Graph6Error : public std::runtime_error {
 public:
  Graph6Error(const std::string& what, std::size_t line = 0)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Standard graph6: one header byte n + 63, then the bits x(i,j) for
/// j = 1..n-1, i = 0..j-1 packed six to a byte, most significant first, each
/// byte offset by 63, zero padded.
std::string graph6_encode(const Graph& g);

/// Inverse of graph6_encode. Throws Graph6Error on bytes outside [63, 126],
/// orders above 62, truncated bit streams, or trailing bytes.
Graph graph6_decode(std::string_view line);

enum class DecodePolicy { abort, skip };

struct NumberedGraph {
  std::size_t line = 0;
  std::string text;
  Graph graph;
};

/// Reads one graph per nonempty line. An optional ">>graph6<<" prefix and a
/// trailing carriage return are tolerated. With DecodePolicy::abort a bad line
/// throws Graph6Error naming the line; with skip it is counted and dropped.
class Graph6Reader {
 public:
  Graph6Reader(std::istream& in, DecodePolicy policy) : in_(in), policy_(policy) {}

  std::optional<NumberedGraph> next();
  std::size_t skipped() const { return skipped_; }

 private:
  std::istream& in_;
  DecodePolicy policy_;
  std::size_t line_ = 0;
  std::size_t skipped_ = 0;
};

}  // namespace cutbench
