#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cutbench/graph.hpp"
#include "cutbench/subsets.hpp"

namespace cutbench {

enum class Verdict { witness, violation, premises_fail };

const char* to_string(Verdict v);
Verdict verdict_from_string(const std::string& s);

/// One tested removal and what was left: either a vertex set or an edge set
/// was deleted, and the remainder split into `components` (original labels).
struct Separation {
  VertexSet removed_vertices;
  std::vector<Edge> removed_edges;
  std::vector<VertexSet> components;

  bool operator==(const Separation&) const = default;
};

/// Verdict of one checker on one graph. The witness objects are re-verifiable
/// from graph_id alone:
///  - theorem1: witness -> an independent (k+1)-set, evidence = every
///    independent k-set with its remainder; violation -> the independent k-set
///    whose removal leaves a connected graph.
///  - cycles-vertex / cycles-edge: violation -> the nonadjacent pair (resp. the
///    two disjoint edges) whose removal leaves a connected graph; witness ->
///    evidence for every pair.
///  - corollary2: witness -> the matching; violation -> evidence for every
///    k-matching.
///  - conjecture3: witness -> the peripheral k-set; violation -> evidence for
///    every k-subset of the periphery.
///  - special-periphery: witness (a hit) -> evidence for every k-subset of the
///    periphery.
struct Certificate {
  std::string graph_id;
  std::string checker;
  int k = 0;
  bool premises_hold = false;
  Verdict verdict = Verdict::premises_fail;
  std::optional<VertexSet> witness_set;
  std::optional<Matching> witness_matching;
  std::vector<Separation> evidence;
  std::string detail;

  bool operator==(const Certificate&) const = default;
};

}  // namespace cutbench
