#pragma once

#include <string>
#include <vector>

#include "kcover/graph.hpp"

namespace kcover::shrink {

enum class Policy { lex, max_overlap };

const char* policy_name(Policy p);

struct Step {
  int frontier = 0;  // u_j, still uncovered before the step
  int covered = 0;   // v_j, already covered
  std::vector<int> clique;
  int x = 0;  // |C_j ∩ covered vertices|, in [1, k-1]
};

/// Transcript of one clique-peeling run. The bound is certified: every
/// connected (k,1)-covered graph satisfies F(n,k) <= bound <= |E|.
struct Trace {
  int k = 0;
  int n = 0;
  std::vector<int> initial;  // C_0
  std::vector<Step> steps;
  long long bound = 0;

  int iterations() const { return static_cast<int>(steps.size()); }
};

// C(k,2) + sum_j (C(k,2) - C(x_j,2)).
long long bound_from_steps(int k, const std::vector<Step>& steps);

// Runs the peeling procedure. C_0 is the lex-first k-clique; each step takes
// the lex-least crossing pair (covered v_j, frontier u_j) and a k-clique on
// it: lex-first, or the one with the most covered vertices under
// max_overlap. Throws precondition_failed for n < k, a disconnected graph, or
// a missing (k,1)-cover.
Trace run_procedure(const Graph& g, int k, Policy policy = Policy::lex);

struct TraceCheck {
  bool ok = true;
  int step = -1;  // 0 = C_0, j = step j; -1 for whole-trace checks
  std::string reason;

  explicit operator bool() const { return ok; }
};

// Replays the trace against g from scratch: cliques, crossings, x_j values,
// exhaustion of the frontier, the vertex-count identity
// sum (x_j - 1) = I(k-1) - (n-k), and the bound.
TraceCheck verify_trace(const Graph& g, const Trace& t);

}  // namespace kcover::shrink
