#pragma once

#include <string>
#include <vector>

#include "kcover/graph.hpp"

namespace kcover {

inline constexpr int kMaxCanonicalOrder = 10;

// Relabeling that yields the lexicographically least upper-triangle bit
// string (graph6 column order) over all vertex permutations. order[i] is the
// original vertex placed at position i.
std::vector<int> canonical_order(const Graph& g);

// Graph relabeled by canonical_order.
Graph canonical_graph(const Graph& g);

// graph6 text of canonical_graph(g). Equal strings iff isomorphic graphs.
// Throws unsupported_size above kMaxCanonicalOrder vertices.
std::string canonical_form(const Graph& g);

}  // namespace kcover
