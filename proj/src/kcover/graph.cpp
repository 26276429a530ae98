#include "kcover/graph.hpp"

#include <algorithm>
#include <string>

#include "kcover/error.hpp"

namespace kcover {

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices)
    throw Error(Errc::unsupported_size,
                "graph order " + std::to_string(n) + " outside 0.." +
                    std::to_string(kMaxVertices));
  rows_.assign(static_cast<std::size_t>(n), 0);
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (const Edge& e : edges) g.add_edge(e.u, e.v);
  return g;
}

Graph Graph::from_rows(std::span<const VertexSet> rows) {
  Graph g(static_cast<int>(rows.size()));
  for (int u = 0; u < g.n_; ++u) {
    for (VertexSet s = rows[static_cast<std::size_t>(u)]; s != 0; s &= s - 1) {
      const int v = bits::lowest(s);
      if (v == u || v >= g.n_ || !bits::test(rows[static_cast<std::size_t>(v)], u))
        throw Error(Errc::invalid_argument, "adjacency rows are not a simple undirected graph");
    }
    g.rows_[static_cast<std::size_t>(u)] = rows[static_cast<std::size_t>(u)];
  }
  return g;
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (VertexSet r : rows_) twice += static_cast<std::size_t>(bits::count(r));
  return twice / 2;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_)
    throw Error(Errc::invalid_edge, "vertex " + std::to_string(v) +
                                        " out of range for n=" + std::to_string(n_));
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
  return bits::test(rows_[static_cast<std::size_t>(u)], v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u)
    for (VertexSet s = rows_[static_cast<std::size_t>(u)] & ~bits::prefix(u + 1); s != 0; s &= s - 1)
      out.emplace_back(u, bits::lowest(s));
  return out;
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw Error(Errc::invalid_edge, "self-loop at vertex " + std::to_string(u));
  rows_[static_cast<std::size_t>(u)] |= bits::bit(v);
  rows_[static_cast<std::size_t>(v)] |= bits::bit(u);
}

void Graph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  rows_[static_cast<std::size_t>(u)] &= ~bits::bit(v);
  rows_[static_cast<std::size_t>(v)] &= ~bits::bit(u);
}

bool is_connected(const Graph& g) {
  if (g.n() <= 1) return true;
  return bits::reach(g.rows(), 0, g.vertices()) == g.vertices();
}

std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet left = g.vertices();
  while (left != 0) {
    const VertexSet c = bits::reach(g.rows(), bits::lowest(left), left);
    out.push_back(c);
    left &= ~c;
  }
  return out;
}

namespace {

void require_edge(const Graph& g, Edge e) {
  if (!g.has_edge(e))
    throw Error(Errc::invalid_edge, "{" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                        "} is not an edge");
}

void require_clique_order(int k) {
  if (k < 2) throw Error(Errc::invalid_argument, "clique order must be at least 2");
}

// Depth-first over `candidates` in increasing vertex order; `chosen` collects
// the partial clique.
void collect_cliques(std::span<const VertexSet> rows, VertexSet chosen, VertexSet candidates,
                     int remaining, std::vector<VertexSet>& out) {
  if (remaining == 0) {
    out.push_back(chosen);
    return;
  }
  while (bits::count(candidates) >= remaining) {
    const int v = bits::lowest(candidates);
    candidates &= candidates - 1;
    collect_cliques(rows, chosen | bits::bit(v), candidates & rows[static_cast<std::size_t>(v)],
                    remaining - 1, out);
  }
}

}  // namespace

VertexSet triangle_vertices(const Graph& g, Edge e) {
  require_edge(g, e);
  return g.neighbors(e.u) & g.neighbors(e.v);
}

std::vector<std::vector<int>> cliques_containing_edge(const Graph& g, Edge e, int k) {
  require_clique_order(k);
  require_edge(g, e);
  std::vector<VertexSet> sets;
  collect_cliques(g.rows(), bits::bit(e.u) | bits::bit(e.v),
                  g.neighbors(e.u) & g.neighbors(e.v), k - 2, sets);
  std::vector<std::vector<int>> out;
  out.reserve(sets.size());
  for (VertexSet s : sets) out.push_back(bits::members(s));
  std::sort(out.begin(), out.end());
  return out;
}

int count_cliques_containing_edge(const Graph& g, Edge e, int k, int limit) {
  require_clique_order(k);
  require_edge(g, e);
  return bits::count_cliques(g.rows(), g.neighbors(e.u) & g.neighbors(e.v), k - 2, limit);
}

std::vector<VertexSet> k_cliques(const Graph& g, int k) {
  require_clique_order(k);
  std::vector<VertexSet> out;
  collect_cliques(g.rows(), 0, g.vertices(), k, out);
  return out;
}

std::pair<Graph, ContractionMap> contract_edge(const Graph& g, Edge e) {
  require_edge(g, e);
  ContractionMap map;
  map.source_n = g.n();
  map.target_n = g.n() - 1;
  map.merged = e;
  map.merged_image = e.u;
  map.image.resize(static_cast<std::size_t>(g.n()));
  for (int x = 0; x < g.n(); ++x) {
    if (x == e.v)
      map.image[static_cast<std::size_t>(x)] = e.u;
    else
      map.image[static_cast<std::size_t>(x)] = x < e.v ? x : x - 1;
  }
  Graph out(g.n() - 1);
  for (const Edge& f : g.edges()) {
    const int a = map.image[static_cast<std::size_t>(f.u)];
    const int b = map.image[static_cast<std::size_t>(f.v)];
    if (a != b) out.add_edge(a, b);
  }
  return {std::move(out), std::move(map)};
}

Graph permute(const Graph& g, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != g.n())
    throw Error(Errc::invalid_argument, "permutation length does not match graph order");
  VertexSet seen = 0;
  for (int p : perm) {
    if (p < 0 || p >= g.n() || bits::test(seen, p))
      throw Error(Errc::invalid_argument, "not a permutation");
    seen |= bits::bit(p);
  }
  Graph out(g.n());
  for (const Edge& e : g.edges())
    out.add_edge(perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)]);
  return out;
}

std::pair<Graph, std::vector<int>> restrict_to(const Graph& edges_from, VertexSet keep) {
  const std::vector<int> back = bits::members(keep);
  std::vector<int> forward(static_cast<std::size_t>(edges_from.n()), -1);
  for (std::size_t i = 0; i < back.size(); ++i)
    forward[static_cast<std::size_t>(back[i])] = static_cast<int>(i);
  Graph out(static_cast<int>(back.size()));
  for (const Edge& e : edges_from.edges()) {
    const int a = forward[static_cast<std::size_t>(e.u)];
    const int b = forward[static_cast<std::size_t>(e.v)];
    if (a >= 0 && b >= 0) out.add_edge(a, b);
  }
  return {std::move(out), back};
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph complete_multipartite_pairs(int m) {
  if (m < 1) throw Error(Errc::invalid_argument, "part count must be at least 1");
  Graph g(2 * m);
  for (int u = 0; u < 2 * m; ++u)
    for (int v = u + 1; v < 2 * m; ++v)
      if (u / 2 != v / 2) g.add_edge(u, v);
  return g;
}

}  // namespace kcover
