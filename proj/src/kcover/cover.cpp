#include "kcover/cover.hpp"

#include <limits>
#include <random>
#include <string>

#include "kcover/error.hpp"

namespace kcover::cover {

void CoverSpec::validate() const {
  if (k < 3) throw Error(Errc::invalid_argument, "cover clique order k must be >= 3, got " + std::to_string(k));
  if (l < 1) throw Error(Errc::invalid_argument, "cover multiplicity l must be >= 1, got " + std::to_string(l));
}

CoverReport has_cover(const Graph& g, CoverSpec spec, bool full_counts) {
  spec.validate();
  CoverReport report;
  report.spec = spec;
  const int limit = full_counts ? std::numeric_limits<int>::max() : spec.l;
  for (const Edge& e : g.edges()) {
    const int found = bits::count_cliques(g.rows(), g.neighbors(e.u) & g.neighbors(e.v), spec.k - 2, limit);
    if (found < spec.l) report.defects.push_back({e, found});
    if (full_counts) report.counts.push_back({e, found});
  }
  report.holds = report.defects.empty();
  return report;
}

bool holds(const Graph& g, CoverSpec spec) {
  spec.validate();
  for (int u = 0; u < g.n(); ++u) {
    for (VertexSet s = g.neighbors(u) & ~bits::prefix(u + 1); s != 0; s &= s - 1) {
      const int v = bits::lowest(s);
      if (bits::count_cliques(g.rows(), g.neighbors(u) & g.neighbors(v), spec.k - 2, spec.l) < spec.l)
        return false;
    }
  }
  return true;
}

Graph truss_survivor(const Graph& g, int l, PeelOptions options) {
  if (l < 1) throw Error(Errc::invalid_argument, "truss threshold l must be >= 1");
  const int n = g.n();
  std::vector<int> support(static_cast<std::size_t>(n * n), 0);
  const auto at = [n](int u, int v) { return static_cast<std::size_t>(u < v ? u * n + v : v * n + u); };

  Graph live = g;
  std::vector<Edge> doomed;
  std::vector<char> queued(support.size(), 0);
  for (const Edge& e : g.edges()) {
    support[at(e.u, e.v)] = bits::count(g.neighbors(e.u) & g.neighbors(e.v));
    if (support[at(e.u, e.v)] < l) {
      doomed.push_back(e);
      queued[at(e.u, e.v)] = 1;
    }
  }

  std::mt19937_64 rng(options.shuffle_seed.value_or(0));
  std::size_t head = 0;
  while (head < doomed.size()) {
    if (options.shuffle_seed) {
      std::uniform_int_distribution<std::size_t> pick(head, doomed.size() - 1);
      std::swap(doomed[head], doomed[pick(rng)]);
    }
    const Edge e = doomed[head++];
    for (VertexSet w = live.neighbors(e.u) & live.neighbors(e.v); w != 0; w &= w - 1) {
      const int x = bits::lowest(w);
      for (int end : {e.u, e.v}) {
        const std::size_t key = at(end, x);
        if (--support[key] < l && !queued[key]) {
          queued[key] = 1;
          doomed.emplace_back(end, x);
        }
      }
    }
    live.remove_edge(e.u, e.v);
  }
  return live;
}

std::vector<Truss> truss_decompose(const Graph& g, int l, PeelOptions options) {
  const Graph live = truss_survivor(g, l, options);
  std::vector<Truss> out;
  for (VertexSet comp : components(live)) {
    if (bits::count(comp) < 2) continue;
    auto [sub, map] = restrict_to(live, comp);
    out.push_back({std::move(sub), std::move(map)});
  }
  return out;
}

bool implied_truss_cover(const Graph& g, int k) {
  if (k < 3) throw Error(Errc::invalid_argument, "k must be >= 3");
  if (!holds(g, {k, 1}))
    throw Error(Errc::precondition_failed,
                "hypothesis failed: graph has no (" + std::to_string(k) + ",1)-cover");
  return holds(g, {3, k - 2});
}

}  // namespace kcover::cover
