#include "kcover/shrink.hpp"

#include <algorithm>

#include "kcover/cover.hpp"
#include "kcover/error.hpp"
#include "kcover/extremal.hpp"

namespace kcover::shrink {

const char* policy_name(Policy p) { return p == Policy::lex ? "lex" : "max_overlap"; }

long long bound_from_steps(int k, const std::vector<Step>& steps) {
  long long bound = extremal::choose2(k);
  for (const Step& s : steps) bound += extremal::choose2(k) - extremal::choose2(s.x);
  return bound;
}

Trace run_procedure(const Graph& g, int k, Policy policy) {
  if (k < 3) throw Error(Errc::invalid_argument, "k must be >= 3");
  if (g.n() < k)
    throw Error(Errc::precondition_failed, "precondition n >= k failed (n=" + std::to_string(g.n()) +
                                               ", k=" + std::to_string(k) + ")");
  if (!is_connected(g)) throw Error(Errc::precondition_failed, "precondition failed: graph is disconnected");
  if (!cover::holds(g, {k, 1}))
    throw Error(Errc::precondition_failed,
                "precondition failed: graph has no (" + std::to_string(k) + ",1)-cover");

  Trace t;
  t.k = k;
  t.n = g.n();
  const std::vector<VertexSet> all = k_cliques(g, k);
  const VertexSet c0 = all.front();
  t.initial = bits::members(c0);

  VertexSet frontier = g.vertices() & ~c0;
  while (frontier != 0) {
    // Lex-least (v_j, u_j): smallest covered vertex with a frontier neighbour.
    int v = -1;
    int u = -1;
    for (VertexSet covered = g.vertices() & ~frontier; covered != 0 && v < 0; covered &= covered - 1) {
      const int c = bits::lowest(covered);
      if (const VertexSet out = g.neighbors(c) & frontier; out != 0) {
        v = c;
        u = bits::lowest(out);
      }
    }
    // Connectedness guarantees a crossing edge.
    const auto candidates = cliques_containing_edge(g, Edge(u, v), k);
    const auto covered_in = [&](const std::vector<int>& c) {
      return static_cast<int>(std::count_if(c.begin(), c.end(),
                                            [&](int w) { return !bits::test(frontier, w); }));
    };
    auto chosen = candidates.begin();
    if (policy == Policy::max_overlap) {
      for (auto it = candidates.begin(); it != candidates.end(); ++it)
        if (covered_in(*it) > covered_in(*chosen)) chosen = it;
    }
    Step step{u, v, *chosen, covered_in(*chosen)};
    frontier &= ~bits::from_members(step.clique);
    t.steps.push_back(std::move(step));
  }
  t.bound = bound_from_steps(k, t.steps);
  return t;
}

namespace {

bool is_k_clique(const Graph& g, const std::vector<int>& c, int k) {
  if (static_cast<int>(c.size()) != k) return false;
  for (int v : c)
    if (v < 0 || v >= g.n()) return false;
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = i + 1; j < c.size(); ++j)
      if (!g.has_edge(c[i], c[j])) return false;
  return true;
}

}  // namespace

TraceCheck verify_trace(const Graph& g, const Trace& t) {
  const auto fail = [](int step, std::string why) { return TraceCheck{false, step, std::move(why)}; };
  if (t.k < 3) return fail(-1, "k below 3");
  if (t.n != g.n()) return fail(-1, "trace n does not match graph");
  if (!is_k_clique(g, t.initial, t.k)) return fail(0, "C_0 is not a k-clique of the graph");

  // Edges already consumed by chosen cliques, as adjacency rows.
  std::vector<VertexSet> used(static_cast<std::size_t>(g.n()), 0);
  const auto consume = [&](const std::vector<int>& c) {
    const VertexSet s = bits::from_members(c);
    for (int w : c) used[static_cast<std::size_t>(w)] |= s & ~bits::bit(w);
  };
  consume(t.initial);
  VertexSet frontier = g.vertices() & ~bits::from_members(t.initial);

  for (std::size_t j = 0; j < t.steps.size(); ++j) {
    const Step& s = t.steps[j];
    const int idx = static_cast<int>(j) + 1;
    if (frontier == 0) return fail(idx, "frontier already empty");
    if (!g.has_edge(s.frontier, s.covered)) return fail(idx, "e_j is not an edge");
    if (!bits::test(frontier, s.frontier)) return fail(idx, "u_j is not in the frontier");
    if (bits::test(frontier, s.covered)) return fail(idx, "v_j is not covered");
    if (bits::test(used[static_cast<std::size_t>(s.frontier)], s.covered))
      return fail(idx, "e_j was already consumed");
    if (!is_k_clique(g, s.clique, t.k)) return fail(idx, "C_j is not a k-clique of the graph");
    const VertexSet c = bits::from_members(s.clique);
    if (!bits::test(c, s.frontier) || !bits::test(c, s.covered)) return fail(idx, "C_j does not contain e_j");
    const int x = bits::count(c & ~frontier);
    if (x != s.x) return fail(idx, "x_j mismatch: recorded " + std::to_string(s.x) + ", actual " + std::to_string(x));
    if (x < 1 || x > t.k - 1) return fail(idx, "x_j outside [1, k-1]");
    consume(s.clique);
    frontier &= ~c;
  }
  if (frontier != 0) return fail(-1, "frontier not exhausted");

  const long long iters = static_cast<long long>(t.steps.size());
  long long shifted = 0;
  for (const Step& s : t.steps) shifted += s.x - 1;
  if (shifted != iters * (t.k - 1) - (g.n() - t.k)) return fail(-1, "vertex-count identity fails");
  if (g.n() > t.k) {
    const extremal::Decomposition d = extremal::decompose(g.n(), t.k);
    if (iters < d.q + 1) return fail(-1, "fewer than q+1 iterations");
    if (shifted != (iters - d.q) * (t.k - 1) - d.r) return fail(-1, "x' sum identity fails");
  }
  if (bound_from_steps(t.k, t.steps) != t.bound) return fail(-1, "bound does not match recomputation");
  return {};
}

}  // namespace kcover::shrink
