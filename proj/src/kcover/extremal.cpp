#include "kcover/extremal.hpp"

#include <string>

#include "kcover/cover.hpp"
#include "kcover/error.hpp"

namespace kcover::extremal {

Decomposition decompose(long long n, long long k) {
  if (k < 3) throw Error(Errc::domain_error, "decompose needs k >= 3");
  if (n <= k)
    throw Error(Errc::domain_error, "decompose needs n > k (n=" + std::to_string(n) +
                                        ", k=" + std::to_string(k) + ")");
  const long long r = (n - k - 1) % (k - 1) + 1;
  return {(n - k - r) / (k - 1), r};
}

long long min_edges_kcover(long long n, long long k) {
  if (k < 3) throw Error(Errc::invalid_argument, "k must be >= 3");
  if (n < k)
    throw Error(Errc::no_such_graph, "no connected " + std::to_string(n) +
                                         "-vertex graph has a (" + std::to_string(k) + ",1)-cover");
  if (n == k) return choose2(k);
  const Decomposition d = decompose(n, k);
  return (d.q + 2) * choose2(k) - choose2(k - d.r);
}

long long min_edges_components(long long n, long long k, long long c) {
  if (k < 3) throw Error(Errc::invalid_argument, "k must be >= 3");
  if (c < 1) throw Error(Errc::invalid_argument, "component count must be >= 1");
  if (n < k + c - 1)
    throw Error(Errc::no_such_graph, "need n >= k + c - 1 = " + std::to_string(k + c - 1) +
                                         " for " + std::to_string(c) + " covered components");
  // n - k - c + 1 = q(k-1) + r is the connected decomposition of n - c + 1.
  return min_edges_kcover(n - c + 1, k);
}

long long min_edges_vertex_kcover(long long n, long long k) {
  if (k < 2) throw Error(Errc::invalid_argument, "k must be >= 2");
  if (n < k)
    throw Error(Errc::no_such_graph, "fewer than k vertices cannot all lie in a K_" + std::to_string(k));
  if (n == k) return choose2(k);
  const long long r = (n - k - 1) % k + 1;
  const long long q = (n - k - r) / k;
  return (q + 2) * choose2(k) - choose2(k - r);
}

const char* failure_name(RecognitionFailure f) {
  switch (f) {
    case RecognitionFailure::none: return "none";
    case RecognitionFailure::too_few_vertices: return "too-few-vertices";
    case RecognitionFailure::disconnected: return "disconnected";
    case RecognitionFailure::no_cover: return "no-cover";
    case RecognitionFailure::edge_count: return "edge-count";
    case RecognitionFailure::no_witness: return "no-witness";
  }
  return "unknown";
}

namespace {

class WitnessSearch {
 public:
  WitnessSearch(const Graph& g, int k, Decomposition d)
      : g_(g), k_(k), target_(static_cast<std::size_t>(d.q + 2)), exception_size_(static_cast<int>(k - d.r)),
        cliques_(k_cliques(g, k)), used_(cliques_.size(), 0) {}

  std::optional<ExtremalWitness> run() {
    for (std::size_t c = 0; c < cliques_.size(); ++c) {
      order_.assign(1, c);
      used_[c] = 1;
      if (descend(cliques_[c], false)) return witness();
      used_[c] = 0;
    }
    return std::nullopt;
  }

 private:
  bool covers_all_edges() const {
    std::vector<VertexSet> rows(static_cast<std::size_t>(g_.n()), 0);
    for (std::size_t idx : order_) {
      const VertexSet c = cliques_[idx];
      for (VertexSet s = c; s != 0; s &= s - 1)
        rows[static_cast<std::size_t>(bits::lowest(s))] |= c & ~bits::bit(bits::lowest(s));
    }
    for (int v = 0; v < g_.n(); ++v)
      if (rows[static_cast<std::size_t>(v)] != g_.neighbors(v)) return false;
    return true;
  }

  bool descend(VertexSet covered, bool exception_used) {
    if (order_.size() == target_) return covered == g_.vertices() && covers_all_edges();
    // Each later clique adds at most k-1 new vertices.
    const int missing = g_.n() - bits::count(covered);
    if (missing > static_cast<int>(target_ - order_.size()) * (k_ - 1)) return false;

    for (std::size_t c = 0; c < cliques_.size(); ++c) {
      if (used_[c]) continue;
      const VertexSet clique = cliques_[c];
      const int overlap = bits::count(clique & covered);
      std::optional<std::size_t> partner;
      if (overlap != 1) {
        if (exception_used || exception_size_ <= 1 || overlap != exception_size_) continue;
        for (std::size_t i = 0; i < order_.size() && !partner; ++i)
          if (bits::count(cliques_[order_[i]] & clique) == exception_size_) partner = i;
        if (!partner) continue;
      }
      order_.push_back(c);
      overlaps_.push_back(overlap);
      if (partner) {
        exceptional_ = static_cast<int>(order_.size() - 1);
        partner_ = static_cast<int>(*partner);
      }
      used_[c] = 1;
      if (descend(covered | clique, exception_used || partner.has_value())) return true;
      used_[c] = 0;
      if (partner) {
        exceptional_.reset();
        partner_.reset();
      }
      order_.pop_back();
      overlaps_.pop_back();
    }
    return false;
  }

  ExtremalWitness witness() const {
    ExtremalWitness w;
    for (std::size_t idx : order_) w.cliques.push_back(bits::members(cliques_[idx]));
    w.overlaps = overlaps_;
    w.exceptional = exceptional_;
    w.partner = partner_;
    return w;
  }

  const Graph& g_;
  int k_;
  std::size_t target_;
  int exception_size_;
  std::vector<VertexSet> cliques_;
  std::vector<char> used_;
  std::vector<std::size_t> order_;
  std::vector<int> overlaps_;
  std::optional<int> exceptional_;
  std::optional<int> partner_;
};

}  // namespace

std::optional<ExtremalWitness> find_structural_witness(const Graph& g, int k) {
  if (k < 3) throw Error(Errc::invalid_argument, "k must be >= 3");
  if (g.n() <= k) return std::nullopt;
  return WitnessSearch(g, k, decompose(g.n(), k)).run();
}

Recognition recognize_extremal(const Graph& g, int k) {
  if (k < 3) throw Error(Errc::invalid_argument, "k must be >= 3");
  Recognition out;
  const auto fail = [&](RecognitionFailure why) {
    out.extremal = false;
    out.reason = why;
    return out;
  };
  if (g.n() < k) return fail(RecognitionFailure::too_few_vertices);
  if (!is_connected(g)) return fail(RecognitionFailure::disconnected);
  if (!cover::holds(g, {k, 1})) return fail(RecognitionFailure::no_cover);
  if (static_cast<long long>(g.edge_count()) != min_edges_kcover(g.n(), k))
    return fail(RecognitionFailure::edge_count);
  if (g.n() == k) {
    out.extremal = true;
    out.witness = ExtremalWitness{{bits::members(g.vertices())}, {}, std::nullopt, std::nullopt};
    return out;
  }
  out.witness = find_structural_witness(g, k);
  if (!out.witness) return fail(RecognitionFailure::no_witness);
  out.extremal = true;
  return out;
}

ConvexMax maximize_convex_sum(int m, int I, int total) {
  if (m < 1 || I < 1) throw Error(Errc::domain_error, "need m >= 1 and I >= 1");
  if (total < 0 || static_cast<long long>(total) > static_cast<long long>(I) * m)
    throw Error(Errc::domain_error, "total " + std::to_string(total) + " not reachable with " +
                                        std::to_string(I) + " values in 0.." + std::to_string(m));
  const int full = total / m;
  const int rest = total % m;
  ConvexMax out;
  out.witness.assign(static_cast<std::size_t>(I), 0);
  for (int j = 0; j < full; ++j) out.witness[static_cast<std::size_t>(j)] = m;
  if (full < I) out.witness[static_cast<std::size_t>(full)] = rest;
  out.value = full * choose2(m + 1) + choose2(rest + 1);
  return out;
}

CounterexampleReport cocktail_party_counterexample(int l_half) {
  if (l_half < 1) throw Error(Errc::invalid_argument, "l_half must be >= 1");
  CounterexampleReport out;
  out.l_half = l_half;
  out.graph = complete_multipartite_pairs(l_half + 2);
  out.edges = static_cast<long long>(out.graph.edge_count());
  out.cover_l = 2 * l_half;
  out.cover_holds = cover::holds(out.graph, {3, out.cover_l});
  out.bound_k = 2 * l_half + 2;
  out.bound = min_edges_kcover(out.graph.n(), out.bound_k);
  out.strictly_smaller = out.edges < out.bound;
  return out;
}

}  // namespace kcover::extremal
