#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "kcover/bits.hpp"

namespace kcover {

using VertexSet = bits::Row;

/// Undirected edge, normalized so that u < v.
struct Edge {
  int u = 0;
  int v = 0;

  Edge() = default;
  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

  auto operator<=>(const Edge&) const = default;
};

/// Undirected simple graph on vertices 0..n-1 with one bitset word per
/// adjacency row. Capped at 64 vertices.
class Graph {
 public:
  static constexpr int kMaxVertices = 64;

  Graph() = default;
  explicit Graph(int n);
  static Graph from_edges(int n, std::span<const Edge> edges);
  static Graph from_rows(std::span<const VertexSet> rows);

  int n() const { return n_; }
  std::size_t edge_count() const;
  VertexSet neighbors(int v) const { return rows_[static_cast<std::size_t>(v)]; }
  int degree(int v) const { return bits::count(neighbors(v)); }
  bool has_edge(int u, int v) const;
  bool has_edge(Edge e) const { return has_edge(e.u, e.v); }
  VertexSet vertices() const { return bits::prefix(n_); }
  std::span<const VertexSet> rows() const { return rows_; }

  // Edges in lexicographic order of (u, v).
  std::vector<Edge> edges() const;

  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  bool operator==(const Graph&) const = default;

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::vector<VertexSet> rows_;
};

/// Records how contraction of `merged` relabels vertices. `image[x]` is f(x).
struct ContractionMap {
  int source_n = 0;
  int target_n = 0;
  Edge merged;
  int merged_image = 0;
  std::vector<int> image;
};

bool is_connected(const Graph& g);
std::vector<VertexSet> components(const Graph& g);

// T_G(uv): common neighbours of the endpoints. Throws invalid_edge if e is not
// an edge of g.
VertexSet triangle_vertices(const Graph& g, Edge e);

// Every k-set containing e that induces a clique, lexicographic by sorted
// vertex list.
std::vector<std::vector<int>> cliques_containing_edge(const Graph& g, Edge e,
                                                      int k);
// Same count, stopping at `limit`.
int count_cliques_containing_edge(const Graph& g, Edge e, int k, int limit);

// All k-cliques of g as bitsets, lexicographic by sorted vertex list.
std::vector<VertexSet> k_cliques(const Graph& g, int k);

// G.e with u_v at min(u, v) and higher labels shifted down past max(u, v).
std::pair<Graph, ContractionMap> contract_edge(const Graph& g, Edge e);

// Relabel: vertex x of g becomes perm[x].
Graph permute(const Graph& g, std::span<const int> perm);

// Subgraph on `keep` (renumbered in increasing order) restricted to the edges
// of `edges_from`, which must share g's vertex set. Returns the map back to g.
std::pair<Graph, std::vector<int>> restrict_to(const Graph& edges_from,
                                               VertexSet keep);

Graph complete_graph(int n);
Graph complete_multipartite_pairs(int m);

}  // namespace kcover
