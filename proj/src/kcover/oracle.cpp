#include "kcover/oracle.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <map>
#include <mutex>
#include <thread>

#include "kcover/canon.hpp"
#include "kcover/cover.hpp"
#include "kcover/error.hpp"

namespace kcover::oracle {

const char* condition_name(Condition c) { return c == Condition::edge_cover ? "edge_cover" : "vertex_cover"; }

void SearchSpec::validate() const {
  if (n < 0) throw Error(Errc::invalid_argument, "n must be >= 0");
  if (n > kMaxSearchOrder)
    throw Error(Errc::cap_exceeded, "exhaustive search is capped at n=" + std::to_string(kMaxSearchOrder) +
                                        ", got n=" + std::to_string(n));
  if (condition == Condition::edge_cover && k < 3)
    throw Error(Errc::invalid_argument, "edge_cover needs k >= 3");
  if (condition == Condition::vertex_cover && k < 2)
    throw Error(Errc::invalid_argument, "vertex_cover needs k >= 2");
  if (condition == Condition::vertex_cover && l != 1)
    throw Error(Errc::invalid_argument, "vertex_cover supports l = 1 only");
  if (l < 1) throw Error(Errc::invalid_argument, "l must be >= 1");
  if (component_count && (*component_count < 1 || *component_count > std::max(n, 1)))
    throw Error(Errc::invalid_argument, "component count must be in 1..n");
}

namespace {

using bits::Row;

int exact_components(const SearchSpec& spec) {
  if (spec.component_count) return *spec.component_count;
  return spec.require_connected ? 1 : 0;  // 0 = unconstrained
}

// Smallest degree an edge endpoint can have under the condition.
int min_degree(const SearchSpec& spec) {
  if (spec.condition == Condition::vertex_cover) return spec.k - 1;
  // An edge uv lies in at most C(deg(u)-1, k-2) copies of K_k.
  for (int d = spec.k - 1;; ++d) {
    long long ways = 1;
    for (int i = 0; i < spec.k - 2; ++i) ways = ways * (d - 1 - i) / (i + 1);
    if (ways >= spec.l) return d;
  }
}

bool isolated_allowed(const SearchSpec& spec) {
  if (spec.n <= 1) return true;
  if (spec.condition == Condition::vertex_cover) return false;
  return exact_components(spec) != 1;
}

bool satisfies_rows(std::span<const Row> rows, int n, const SearchSpec& spec) {
  const int want = exact_components(spec);
  if (want != 0) {
    int found = 0;
    for (Row left = bits::prefix(n); left != 0; ++found) {
      if (found >= want) return false;
      left &= ~bits::reach(rows, bits::lowest(left), left);
    }
    if (found != want) return false;
  }
  if (spec.condition == Condition::vertex_cover) {
    for (int v = 0; v < n; ++v)
      if (!bits::has_clique(rows, rows[static_cast<std::size_t>(v)], spec.k - 1)) return false;
    return true;
  }
  for (int u = 0; u < n; ++u) {
    for (Row s = rows[static_cast<std::size_t>(u)] & ~bits::prefix(u + 1); s != 0; s &= s - 1) {
      const int v = bits::lowest(s);
      const Row common = rows[static_cast<std::size_t>(u)] & rows[static_cast<std::size_t>(v)];
      if (bits::count_cliques(rows, common, spec.k - 2, spec.l) < spec.l) return false;
    }
  }
  return true;
}

// Depth-first over the edges of K_n in lex order, deciding each in or out.
// Vertex u's edges are all decided once its block of pairs (u, *) is done,
// so degree pruning bites early.
class SubsetSearch {
 public:
  struct State {
    std::array<Row, kMaxSearchOrder> rows{};
    std::array<std::int8_t, kMaxSearchOrder> deg{};
    std::array<std::int8_t, kMaxSearchOrder> rem{};
    int chosen = 0;
    std::uint32_t mask = 0;
    int next = 0;  // index of the first undecided pair
  };

  struct Result {
    std::vector<std::uint32_t> hits;
    std::uint64_t leaves = 0;
  };

  SubsetSearch(const SearchSpec& spec, int m, bool collect, std::atomic<bool>& stop)
      : spec_(spec), n_(spec.n), m_(m), dmin_(min_degree(spec)), zero_ok_(isolated_allowed(spec)),
        collect_(collect), stop_(stop) {
    for (int u = 0; u < n_; ++u)
      for (int v = u + 1; v < n_; ++v) pairs_.emplace_back(u, v);
  }

  State root() const {
    State s;
    for (int v = 0; v < n_; ++v) s.rem[static_cast<std::size_t>(v)] = static_cast<std::int8_t>(n_ - 1);
    return s;
  }

  // Partial states after deciding the first `depth` pairs.
  std::vector<State> split(int depth) {
    std::vector<State> out;
    State s = root();
    Result sink;
    split_rec(s, std::min<int>(depth, static_cast<int>(pairs_.size())), out, sink);
    return out;
  }

  Result run(State s) {
    Result r;
    descend(s, r);
    return r;
  }

 private:
  bool feasible(const State& s, int v) const {
    const int d = s.deg[static_cast<std::size_t>(v)];
    return d + s.rem[static_cast<std::size_t>(v)] >= dmin_ || (zero_ok_ && d == 0);
  }

  bool final_degrees_ok(const State& s) const {
    for (int v = 0; v < n_; ++v) {
      const int d = s.deg[static_cast<std::size_t>(v)];
      if (d < dmin_ && !(zero_ok_ && d == 0)) return false;
    }
    return true;
  }

  void leaf(const State& s, Result& r) {
    ++r.leaves;
    if (!final_degrees_ok(s)) return;
    if (!satisfies_rows(std::span<const Row>(s.rows.data(), static_cast<std::size_t>(n_)), n_, spec_)) return;
    r.hits.push_back(s.mask);
    if (!collect_) stop_.store(true, std::memory_order_relaxed);
  }

  template <typename AtDepth>
  void branch(State& s, Result& r, AtDepth&& at_depth) {
    const auto idx = static_cast<std::size_t>(s.next);
    const auto [u, v] = pairs_[idx];
    const auto uu = static_cast<std::size_t>(u);
    const auto vv = static_cast<std::size_t>(v);
    --s.rem[uu];
    --s.rem[vv];
    ++s.next;
    const int undecided = static_cast<int>(pairs_.size()) - s.next;

    if (s.chosen < m_) {
      ++s.deg[uu];
      ++s.deg[vv];
      s.rows[uu] |= bits::bit(v);
      s.rows[vv] |= bits::bit(u);
      s.mask |= 1U << idx;
      ++s.chosen;
      at_depth(s, r);
      --s.chosen;
      s.mask &= ~(1U << idx);
      s.rows[uu] &= ~bits::bit(v);
      s.rows[vv] &= ~bits::bit(u);
      --s.deg[uu];
      --s.deg[vv];
    }
    if (s.chosen + undecided >= m_ && feasible(s, u) && feasible(s, v)) at_depth(s, r);

    --s.next;
    ++s.rem[uu];
    ++s.rem[vv];
  }

  void descend(State& s, Result& r) {
    if (stop_.load(std::memory_order_relaxed)) return;
    if (s.chosen == m_ || s.next == static_cast<int>(pairs_.size())) {
      if (s.chosen == m_) leaf(s, r);
      return;
    }
    branch(s, r, [this](State& st, Result& rr) { descend(st, rr); });
  }

  void split_rec(State& s, int depth, std::vector<State>& out, Result& sink) {
    if (s.next == depth || s.chosen == m_) {
      out.push_back(s);
      return;
    }
    branch(s, sink, [&](State& st, Result& rr) { split_rec(st, depth, out, rr); });
  }

  const SearchSpec& spec_;
  int n_;
  int m_;
  int dmin_;
  bool zero_ok_;
  bool collect_;
  std::atomic<bool>& stop_;
  std::vector<std::pair<int, int>> pairs_;
};

template <typename Fn>
void parallel_for(std::size_t count, unsigned workers, Fn&& fn) {
  workers = std::max(1U, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) fn(i);
    });
  for (auto& t : pool) t.join();
}

Graph graph_from_mask(int n, std::uint32_t mask) {
  Graph g(n);
  int idx = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++idx)
      if ((mask >> idx) & 1U) g.add_edge(u, v);
  return g;
}

}  // namespace

bool satisfies(const Graph& g, const SearchSpec& spec) {
  if (g.n() != spec.n) return false;
  return satisfies_rows(g.rows(), g.n(), spec);
}

int search_lower_bound(const SearchSpec& spec) {
  spec.validate();
  int lb = 0;
  if (!isolated_allowed(spec)) lb = (spec.n * min_degree(spec) + 1) / 2;
  if (const int c = exact_components(spec); c != 0) lb = std::max(lb, spec.n - c);
  return lb;
}

SearchReport min_edges_bruteforce(const SearchSpec& spec, const SearchOptions& options) {
  spec.validate();
  const auto started = std::chrono::steady_clock::now();
  SearchReport report;
  report.spec = spec;
  report.minimizers_collected = options.collect_minimizers;
  const int total_pairs = spec.n * (spec.n - 1) / 2;
  report.searched_from = std::min(search_lower_bound(spec), total_pairs);
  report.searched_to = report.searched_from;

  std::vector<std::uint32_t> hits;
  for (int m = report.searched_from; m <= total_pairs; ++m) {
    report.searched_to = m;
    std::atomic<bool> stop{false};
    SubsetSearch search(spec, m, options.collect_minimizers, stop);
    const std::vector<SubsetSearch::State> tasks = search.split(8);
    std::vector<SubsetSearch::Result> results(tasks.size());
    parallel_for(tasks.size(), options.workers, [&](std::size_t i) { results[i] = search.run(tasks[i]); });
    for (const auto& r : results) {
      report.subsets_examined += r.leaves;
      hits.insert(hits.end(), r.hits.begin(), r.hits.end());
    }
    if (!hits.empty()) {
      report.minimum = m;
      break;
    }
  }

  if (report.minimum) {
    if (!options.collect_minimizers) hits.resize(1);
    std::vector<std::string> forms(hits.size());
    parallel_for(hits.size(), options.workers,
                 [&](std::size_t i) { forms[i] = canonical_form(graph_from_mask(spec.n, hits[i])); });
    std::map<std::string, std::size_t> first;
    for (std::size_t i = 0; i < hits.size(); ++i) first.emplace(forms[i], i);
    for (const auto& [form, i] : first) report.minimizers.push_back({form, graph_from_mask(spec.n, hits[i])});
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return report;
}

std::vector<Graph> all_minimizers(const SearchSpec& spec, unsigned workers) {
  SearchReport report = min_edges_bruteforce(spec, {true, workers});
  std::vector<Graph> out;
  out.reserve(report.minimizers.size());
  for (auto& m : report.minimizers) out.push_back(std::move(m.graph));
  return out;
}

std::vector<Graph> enumerate_connected(int n) {
  if (n < 0) throw Error(Errc::invalid_argument, "n must be >= 0");
  if (n > kMaxEnumerationOrder)
    throw Error(Errc::cap_exceeded, "connected-graph enumeration is capped at n=" +
                                        std::to_string(kMaxEnumerationOrder));
  if (n == 0) return {Graph(0)};

  static std::mutex guard;
  static std::vector<std::vector<Graph>> levels{{}, {Graph(1)}};
  std::lock_guard lock(guard);
  while (static_cast<int>(levels.size()) <= n) {
    const int order = static_cast<int>(levels.size());
    std::map<std::string, Graph> seen;
    for (const Graph& base : levels.back()) {
      for (Row attach = 1; attach < bits::bit(order - 1); ++attach) {
        Graph g(order);
        for (const Edge& e : base.edges()) g.add_edge(e.u, e.v);
        for (Row s = attach; s != 0; s &= s - 1) g.add_edge(bits::lowest(s), order - 1);
        std::string form = canonical_form(g);
        if (!seen.contains(form)) seen.emplace(std::move(form), canonical_graph(g));
      }
    }
    std::vector<Graph> level;
    level.reserve(seen.size());
    for (auto& [form, g] : seen) level.push_back(std::move(g));
    levels.push_back(std::move(level));
  }
  return levels[static_cast<std::size_t>(n)];
}

}  // namespace kcover::oracle
