#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kcover/graph.hpp"

namespace kcover::cover {

/// Requirement that every edge lies in at least `l` copies of K_k.
struct CoverSpec {
  int k = 3;
  int l = 1;

  // Throws invalid_argument unless k >= 3 and l >= 1.
  void validate() const;
};

struct CoverDefect {
  Edge edge;
  int count = 0;
};

struct EdgeCount {
  Edge edge;
  int count = 0;
};

struct CoverReport {
  bool holds = true;
  CoverSpec spec;
  std::vector<CoverDefect> defects;  // sorted by edge
  std::vector<EdgeCount> counts;     // only with full_counts
};

// Per-edge counts stop at l unless full_counts is set.
CoverReport has_cover(const Graph& g, CoverSpec spec, bool full_counts = false);

// Yes/no only, no report allocation.
bool holds(const Graph& g, CoverSpec spec);

struct Truss {
  Graph graph;
  std::vector<int> vertex_map;  // truss vertex -> vertex of the input
};

struct PeelOptions {
  // When set, under-supported edges are removed in a seeded random order
  // instead of FIFO. The surviving edge set does not depend on it.
  std::optional<std::uint64_t> shuffle_seed;
};

// Same vertex set as g, keeping exactly the edges that survive support
// peeling at threshold l (supports recomputed inside the current survivor).
Graph truss_survivor(const Graph& g, int l, PeelOptions options = {});

// Connected components (with at least one edge) of the survivor.
std::vector<Truss> truss_decompose(const Graph& g, int l, PeelOptions options = {});

// Checks that a (k,1)-covered graph is also (3,k-2)-covered. Throws
// precondition_failed, naming the hypothesis, if g lacks a (k,1)-cover.
bool implied_truss_cover(const Graph& g, int k);

}  // namespace kcover::cover
