#include "kcover/checks.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "kcover/canon.hpp"
#include "kcover/cover.hpp"
#include "kcover/error.hpp"
#include "kcover/extremal.hpp"
#include "kcover/oracle.hpp"
#include "kcover/reduce.hpp"
#include "kcover/shrink.hpp"

namespace kcover::checks {
namespace {

using FormSet = std::set<std::string>;

struct Outcome {
  bool passed = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (passed) detail << "FAILED: ";
      detail << what << "; ";
      passed = false;
    }
  }
};

FormSet forms_of(const std::vector<Graph>& graphs) {
  FormSet out;
  for (const Graph& g : graphs) out.insert(canonical_form(g));
  return out;
}

oracle::SearchSpec connected_spec(int n, int k, int l) {
  oracle::SearchSpec s;
  s.n = n;
  s.k = k;
  s.l = l;
  return s;
}

void formula_vs_oracle(Outcome& out, const Options& opt) {
  const std::vector<std::pair<int, std::pair<int, int>>> ranges{{3, {4, 8}}, {4, {5, 8}}};
  for (const auto& [k, span] : ranges) {
    for (int n = span.first; n <= span.second; ++n) {
      const auto rep = oracle::min_edges_bruteforce(connected_spec(n, k, 1), {false, opt.workers});
      const long long f = extremal::min_edges_kcover(n, k);
      out.require(rep.minimum && *rep.minimum == f,
                  "k=" + std::to_string(k) + " n=" + std::to_string(n) + " oracle " +
                      (rep.minimum ? std::to_string(*rep.minimum) : "none") + " formula " + std::to_string(f));
      out.detail << "k" << k << "n" << n << "=" << f << " ";
    }
  }
}

void equality_class(Outcome& out, const Options& opt) {
  const std::vector<std::pair<int, std::pair<int, int>>> ranges{{3, {4, 7}}, {4, {5, 7}}};
  for (const auto& [k, span] : ranges) {
    for (int n = span.first; n <= span.second; ++n) {
      const std::string tag = "k=" + std::to_string(k) + " n=" + std::to_string(n);
      const FormSet minimizers = forms_of(oracle::all_minimizers(connected_spec(n, k, 1), opt.workers));
      const FormSet family = forms_of(extremal::enumerate_extremal(n, k));
      FormSet recognized;
      FormSet structural;
      for (const Graph& g : oracle::enumerate_connected(n)) {
        if (!cover::holds(g, {k, 1})) continue;
        if (extremal::recognize_extremal(g, k).extremal) recognized.insert(canonical_form(g));
        if (extremal::find_structural_witness(g, k)) structural.insert(canonical_form(g));
      }
      out.require(minimizers == family, tag + " minimizers != G_tree family");
      out.require(recognized == minimizers, tag + " recognition != minimizers");
      out.require(structural == minimizers, tag + " structural witnesses != minimizers");
      out.detail << tag << ": " << minimizers.size() << " classes; ";
    }
  }
}

void star_example(Outcome& out) {
  const Graph g = extremal::build_extremal(12, 4, extremal::Shape::star);
  out.require(g.n() == 12, "vertex count " + std::to_string(g.n()));
  out.require(g.edge_count() == 23, "edge count " + std::to_string(g.edge_count()));
  out.require(extremal::min_edges_kcover(12, 4) == 23, "formula F(12,4) != 23");
  out.require(cover::holds(g, {4, 1}), "no (4,1)-cover");
  out.require(is_connected(g), "disconnected");
  out.require(extremal::recognize_extremal(g, 4).extremal, "recognition failed");
  out.detail << "12 vertices, " << g.edge_count() << " edges";
}

void three_two_minimizers(Outcome& out, const Options& opt) {
  const long long expected[] = {9, 11, 12};
  for (int n = 5; n <= 7; ++n) {
    const auto rep = oracle::min_edges_bruteforce(connected_spec(n, 3, 2), {true, opt.workers});
    const long long want = expected[n - 5];
    out.require(rep.minimum && *rep.minimum == want && want == extremal::min_edges_kcover(n, 4),
                "n=" + std::to_string(n) + " minimum mismatch");
    for (const auto& m : rep.minimizers)
      out.require(cover::holds(m.graph, {4, 1}), "n=" + std::to_string(n) + " minimizer " + m.canonical +
                                                     " lacks a (4,1)-cover");
    out.detail << "n=" << n << ": min " << (rep.minimum ? *rep.minimum : -1) << ", "
               << rep.minimizers.size() << " minimizers; ";
  }
}

void contraction_lemma(Outcome& out) {
  long long contractions = 0;
  long long violations = 0;
  long long graphs = 0;
  for (int n = 5; n <= 7; ++n) {
    for (const Graph& g : oracle::enumerate_connected(n)) {
      if (!cover::holds(g, {3, 2})) continue;
      ++graphs;
      for (const Edge& e : g.edges()) {
        if (bits::has_clique(g.rows(), g.neighbors(e.u) & g.neighbors(e.v), 2)) continue;
        ++contractions;
        try {
          reduce::contract_and_verify(g, e);
        } catch (const Error& err) {
          ++violations;
          out.require(false, err.what());
        }
      }
    }
  }
  out.require(contractions > 0, "no qualifying contraction was exercised");
  out.detail << graphs << " (3,2)-covered graphs, " << contractions << " contractions, " << violations
             << " violations";
}

// Union of k-cliques grown from K_k: each new clique reuses 1..k existing
// vertices (1 = tree-like gluing, larger = L-like or extra chords).
Graph random_covered_graph(std::mt19937_64& rng, int k, int target) {
  std::vector<std::vector<int>> cliques{{}};
  for (int v = 0; v < k; ++v) cliques[0].push_back(v);
  int n = k;
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  const auto add_clique = [&](int reuse) {
    std::vector<int> pool(static_cast<std::size_t>(n));
    std::iota(pool.begin(), pool.end(), 0);
    std::shuffle(pool.begin(), pool.end(), rng);
    std::vector<int> c(pool.begin(), pool.begin() + reuse);
    for (int i = reuse; i < k; ++i) c.push_back(n++);
    cliques.push_back(std::move(c));
  };
  while (n < target) {
    int reuse = 1;
    if (coin(rng) < 0.3) reuse = std::uniform_int_distribution<int>(2, k - 1)(rng);
    reuse = std::max(reuse, k - (target - n));
    reuse = std::min(reuse, n);
    add_clique(reuse);
  }
  const int extras = std::uniform_int_distribution<int>(0, 2)(rng);
  for (int i = 0; i < extras && n >= k; ++i) add_clique(k);

  Graph g(n);
  for (const auto& c : cliques)
    for (std::size_t a = 0; a < c.size(); ++a)
      for (std::size_t b = a + 1; b < c.size(); ++b) g.add_edge(c[a], c[b]);
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return permute(g, perm);
}

void procedure_soundness(Outcome& out, const Options& opt) {
  std::mt19937_64 rng(opt.seed);
  int runs = 0;
  int tight = 0;
  for (int i = 0; i < 1000; ++i) {
    const int k = i % 2 == 0 ? 3 : 4;
    const int target = std::uniform_int_distribution<int>(k, 16)(rng);
    const Graph g = random_covered_graph(rng, k, target);
    const long long f = extremal::min_edges_kcover(g.n(), k);
    const auto m = static_cast<long long>(g.edge_count());
    for (auto policy : {shrink::Policy::lex, shrink::Policy::max_overlap}) {
      const shrink::Trace t = shrink::run_procedure(g, k, policy);
      ++runs;
      const std::string tag = "graph " + std::to_string(i) + " policy " + shrink::policy_name(policy);
      out.require(f <= t.bound && t.bound <= m, tag + " bound outside [F, |E|]");
      if (g.n() > k) {
        const auto d = extremal::decompose(g.n(), k);
        long long shifted = 0;
        for (const auto& s : t.steps) shifted += s.x - 1;
        out.require(shifted == (t.iterations() - d.q) * (k - 1) - d.r, tag + " x' sum identity");
        out.require(t.iterations() >= d.q + 1, tag + " I < q+1");
      }
      const auto check = shrink::verify_trace(g, t);
      out.require(check.ok, tag + " verify_trace: " + check.reason);
      if (t.bound == f) ++tight;
    }
  }
  out.detail << runs << " traces checked, " << tight << " with bound = F(n,k)";
}

void counterexample(Outcome& out) {
  const auto r = extremal::cocktail_party_counterexample(3);
  out.require(r.graph.n() == 10 && r.edges == 40, "l'=3 should give 10 vertices, 40 edges");
  out.require(r.cover_holds, "l'=3 (3,6)-cover fails");
  out.require(r.bound == 41, "l'=3 bound " + std::to_string(r.bound));
  out.require(r.strictly_smaller, "l'=3 not strictly smaller");
  for (int h = 3; h <= 10; ++h) {
    const auto rh = extremal::cocktail_party_counterexample(h);
    out.require(rh.strictly_smaller && rh.cover_holds, "l'=" + std::to_string(h) + " not a counterexample");
  }
  out.require(!extremal::cocktail_party_counterexample(2).strictly_smaller, "l'=2 unexpectedly strict");
  out.detail << "l'=3: 40 edges vs bound 41; strict for l'=3..10, not at l'=2";
}

void convexity(Outcome& out) {
  int cases = 0;
  for (int m = 1; m <= 4; ++m) {
    for (int I = 1; I <= 5; ++I) {
      for (int total = 0; total <= I * m; ++total) {
        ++cases;
        long long best = -1;
        std::vector<std::vector<int>> argmax;
        std::vector<int> x(static_cast<std::size_t>(I), 0);
        while (true) {
          if (std::accumulate(x.begin(), x.end(), 0) == total) {
            long long v = 0;
            for (int xi : x) v += extremal::choose2(xi + 1);
            if (v > best) {
              best = v;
              argmax.clear();
            }
            if (v == best) argmax.push_back(x);
          }
          std::size_t i = 0;
          while (i < x.size() && x[i] == m) x[i++] = 0;
          if (i == x.size()) break;
          ++x[i];
        }
        const auto got = extremal::maximize_convex_sum(m, I, total);
        const std::string tag = "m=" + std::to_string(m) + " I=" + std::to_string(I) + " t=" + std::to_string(total);
        out.require(got.value == best, tag + " max mismatch");
        long long wv = 0;
        for (int xi : got.witness) wv += extremal::choose2(xi + 1);
        out.require(wv == best && std::accumulate(got.witness.begin(), got.witness.end(), 0) == total,
                    tag + " witness not optimal");
        for (const auto& a : argmax)
          out.require(std::count_if(a.begin(), a.end(), [m](int v) { return v != 0 && v != m; }) <= 1,
                      tag + " optimum with two interior coordinates");
      }
    }
  }
  out.detail << cases << " (m, I, total) cases";
}

void delta_lemma(Outcome& out) {
  int threes = 0;
  for (int n = 6; n <= 1000; ++n) {
    const long long delta = extremal::min_edges_kcover(n, 4) - extremal::min_edges_kcover(n - 1, 4);
    const bool r_is_one = extremal::decompose(n, 4).r == 1;
    out.require(delta >= 1 && delta <= 3, "n=" + std::to_string(n) + " delta " + std::to_string(delta));
    out.require((delta == 3) == r_is_one, "n=" + std::to_string(n) + " delta=3 iff r=1 fails");
    threes += delta == 3;
  }
  out.detail << "n=6..1000, delta=3 at " << threes << " values";
}

void observation(Outcome& out) {
  long long checked = 0;
  for (int k = 3; k <= 5; ++k) {
    for (int n = 1; n <= 8; ++n) {
      for (const Graph& g : oracle::enumerate_connected(n)) {
        if (!cover::holds(g, {k, 1})) continue;
        ++checked;
        out.require(cover::holds(g, {3, k - 2}),
                    "k=" + std::to_string(k) + " counterexample " + canonical_form(g));
      }
    }
  }
  out.detail << checked << " (k,1)-covered connected graphs checked";
}

void other_formulas(Outcome& out, const Options& opt) {
  int cases = 0;
  for (int k = 2; k <= 4; ++k) {
    for (int n = k; n <= 8; ++n) {
      oracle::SearchSpec s;
      s.n = n;
      s.k = k;
      s.require_connected = false;
      s.condition = oracle::Condition::vertex_cover;
      const auto rep = oracle::min_edges_bruteforce(s, {false, opt.workers});
      const long long f = extremal::min_edges_vertex_kcover(n, k);
      out.require(rep.minimum && *rep.minimum == f,
                  "vertex k=" + std::to_string(k) + " n=" + std::to_string(n));
      ++cases;
    }
  }
  for (const auto& [k, c] : std::vector<std::pair<int, int>>{{3, 2}, {3, 3}, {4, 2}}) {
    for (int n = k + c - 1; n <= 8; ++n) {
      oracle::SearchSpec s = connected_spec(n, k, 1);
      s.component_count = c;
      const auto rep = oracle::min_edges_bruteforce(s, {false, opt.workers});
      const long long f = extremal::min_edges_components(n, k, c);
      out.require(rep.minimum && *rep.minimum == f, "components k=" + std::to_string(k) +
                                                        " c=" + std::to_string(c) + " n=" + std::to_string(n));
      ++cases;
    }
  }
  out.detail << cases << " (variant, k, n) cases";
}

}  // namespace

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> list{
      {1, "(k,1)-cover minimum formula vs exhaustive search"},
      {2, "equality class: minimizers = G_tree family = recognized"},
      {3, "12-vertex (4,1)-cover example with 23 edges"},
      {4, "(3,2)-cover minimizers are (4,1)-covered with F(n) edges"},
      {5, "contraction lemma over all small (3,2)-covered graphs"},
      {6, "clique-peeling bound soundness on 1000 random graphs"},
      {7, "cocktail-party counterexample for (3,2l')-covers"},
      {8, "convexity lemma vs brute force"},
      {9, "F(n)-F(n-1) in {1,2,3}, = 3 iff r = 1"},
      {10, "(k,1)-cover implies (3,k-2)-cover"},
      {11, "vertex-variant and multi-component formulas vs search"},
  };
  return list;
}

std::vector<CriterionResult> run_acceptance(const Options& options, const Progress& progress) {
  std::vector<CriterionResult> results;
  for (const Criterion& c : criteria()) {
    if (!options.only.empty() && std::find(options.only.begin(), options.only.end(), c.id) == options.only.end())
      continue;
    const auto started = std::chrono::steady_clock::now();
    Outcome out;
    try {
      switch (c.id) {
        case 1: formula_vs_oracle(out, options); break;
        case 2: equality_class(out, options); break;
        case 3: star_example(out); break;
        case 4: three_two_minimizers(out, options); break;
        case 5: contraction_lemma(out); break;
        case 6: procedure_soundness(out, options); break;
        case 7: counterexample(out); break;
        case 8: convexity(out); break;
        case 9: delta_lemma(out); break;
        case 10: observation(out); break;
        case 11: other_formulas(out, options); break;
        default: break;
      }
    } catch (const std::exception& e) {
      out.require(false, std::string("exception: ") + e.what());
    }
    CriterionResult r{c.id, c.title, out.passed, out.detail.str(),
                      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count()};
    if (progress) progress(r);
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace kcover::checks
