#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kcover/graph.hpp"
#include "kcover/hypertree.hpp"

namespace kcover::extremal {

// Integer arithmetic throughout; choose2(0) = choose2(1) = 0.
constexpr long long choose2(long long a) { return a < 2 ? 0 : a * (a - 1) / 2; }

struct Decomposition {
  long long q = 0;
  long long r = 0;

  bool operator==(const Decomposition&) const = default;
};

// n - k = q(k-1) + r with q >= 0 and 1 <= r <= k-1. Needs n > k >= 3.
Decomposition decompose(long long n, long long k);

// Minimum edge count of a connected n-vertex graph with a (k,1)-cover.
long long min_edges_kcover(long long n, long long k);

// Same when the graph has c components, each (k,1)-covered.
long long min_edges_components(long long n, long long k, long long c);

// Minimum edge count of an n-vertex graph with every vertex in a K_k
// (connectivity not required). Decomposes n - k = qk + r, 1 <= r <= k.
long long min_edges_vertex_kcover(long long n, long long k);

/// Ordered clique cover certifying membership in G_tree(qK_k, L).
struct ExtremalWitness {
  std::vector<std::vector<int>> cliques;  // C_0 .. C_{q+1}
  std::vector<int> overlaps;              // |U_j ∩ (U_0 ∪ .. ∪ U_{j-1})|, j >= 1
  std::optional<int> exceptional;         // j' with overlap k-r (only when k-r > 1)
  std::optional<int> partner;             // i < j' with |U_i ∩ U_j'| = k-r
};

enum class RecognitionFailure {
  none,
  too_few_vertices,
  disconnected,
  no_cover,
  edge_count,
  no_witness,
};

const char* failure_name(RecognitionFailure f);

struct Recognition {
  bool extremal = false;
  RecognitionFailure reason = RecognitionFailure::none;
  std::optional<ExtremalWitness> witness;
};

// Structural search only: an ordering of q+2 k-cliques covering every edge
// with running overlaps all 1 except at most one of size k-r realized inside a
// single earlier clique. No edge-count prefilter. Needs n > k.
std::optional<ExtremalWitness> find_structural_witness(const Graph& g, int k);

// Connectivity, (k,1)-cover and edge-count prefilter, then the structural
// search. n = k is accepted exactly for K_k (single-clique witness).
Recognition recognize_extremal(const Graph& g, int k);

struct ConvexMax {
  long long value = 0;
  std::vector<int> witness;
};

// max of sum C(x_j + 1, 2) over x in {0..m}^I with sum x = total.
ConvexMax maximize_convex_sum(int m, int I, int total);

struct CounterexampleReport {
  int l_half = 0;
  Graph graph;
  long long edges = 0;
  int cover_l = 0;    // 2 * l_half
  bool cover_holds = false;
  int bound_k = 0;    // 2 * l_half + 2
  long long bound = 0;
  bool strictly_smaller = false;
};

// K_{2l'+4} minus a perfect matching against the (2l'+2,1)-cover minimum.
CounterexampleReport cocktail_party_counterexample(int l_half);

}  // namespace kcover::extremal
