#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kcover/graph.hpp"

namespace kcover::reduce {

// Lex-least edge that lies in no K_4, if any.
std::optional<Edge> find_edge_not_in_k4(const Graph& g);

struct ContractionReport {
  int n_in = 0;
  long long m_in = 0;
  Edge edge;
  Graph output;
  ContractionMap map;
  int n_out = 0;
  long long m_out = 0;
  bool connected = false;
  bool cover_32 = false;
  long long edge_drop = 0;
  std::vector<std::string> violations;  // failed conclusions, empty if all hold
};

// Contracts e in a connected (3,2)-covered graph with n > 4 where e lies in no
// K_4, then checks the conclusions: G.e connected, (3,2)-covered, at least
// three edges fewer. A failed hypothesis throws precondition_failed naming
// it; a failed conclusion throws theorem_violation.
ContractionReport contract_and_verify(const Graph& g, Edge e);

// Contracts e and measures the result without checking any hypothesis.
ContractionReport contract_unchecked(const Graph& g, Edge e);

// Same hypothesis checks as contract_and_verify, but failed conclusions are recorded in the report
// instead of thrown.
ContractionReport contract_and_check(const Graph& g, Edge e);

struct Reduction {
  Graph final_graph;
  std::vector<ContractionReport> steps;
};

// Contracts lex-least non-K_4 edges until every edge lies in a K_4 or n = 4.
Reduction reduce_to_k4_covered(const Graph& g);

}  // namespace kcover::reduce
