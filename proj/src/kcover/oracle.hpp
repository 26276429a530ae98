#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kcover/graph.hpp"

namespace kcover::oracle {

inline constexpr int kMaxSearchOrder = 8;
inline constexpr int kMaxEnumerationOrder = 8;

enum class Condition { edge_cover, vertex_cover };

const char* condition_name(Condition c);

struct SearchSpec {
  int n = 0;
  int k = 3;
  int l = 1;
  bool require_connected = true;
  std::optional<int> component_count;  // exact number of components
  Condition condition = Condition::edge_cover;

  void validate() const;
};

struct Minimizer {
  std::string canonical;
  Graph graph;
};

struct SearchReport {
  SearchSpec spec;
  std::optional<long long> minimum;
  int searched_from = 0;  // edge counts tried, inclusive
  int searched_to = 0;
  bool minimizers_collected = false;
  std::vector<Minimizer> minimizers;  // sorted by canonical form
  std::uint64_t subsets_examined = 0;
  double seconds = 0;
};

struct SearchOptions {
  bool collect_minimizers = true;
  unsigned workers = 1;
};

// Does g meet every constraint of the search spec (cover condition plus
// connectivity or component count)?
bool satisfies(const Graph& g, const SearchSpec& spec);

// Edge count below which no graph can satisfy the search spec, from connectivity,
// component count, and the minimum degree each condition forces.
int search_lower_bound(const SearchSpec& spec);

// Exact minimum by ascending edge count: for each m, every labeled m-edge
// subset of K_n (with degree pruning) is tested. Stops at the first m with a
// hit. Throws cap_exceeded above kMaxSearchOrder vertices.
SearchReport min_edges_bruteforce(const SearchSpec& spec, const SearchOptions& options = {});

// Minimizers up to isomorphism, sorted by canonical form.
std::vector<Graph> all_minimizers(const SearchSpec& spec, unsigned workers = 1);

// Connected graphs on n vertices up to isomorphism, sorted by canonical form.
// Grown one vertex at a time: every connected graph has a vertex whose
// removal leaves it connected.
std::vector<Graph> enumerate_connected(int n);

}  // namespace kcover::oracle
