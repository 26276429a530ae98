#include "kcover/reduce.hpp"

#include <string>

#include "kcover/cover.hpp"
#include "kcover/error.hpp"

namespace kcover::reduce {

std::optional<Edge> find_edge_not_in_k4(const Graph& g) {
  for (const Edge& e : g.edges())
    if (!bits::has_clique(g.rows(), g.neighbors(e.u) & g.neighbors(e.v), 2)) return e;
  return std::nullopt;
}

namespace {

std::string edge_text(Edge e) { return "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}"; }

}  // namespace

ContractionReport contract_unchecked(const Graph& g, Edge e) {
  if (!g.has_edge(e)) throw Error(Errc::invalid_edge, edge_text(e) + " is not an edge");
  ContractionReport rep;
  rep.n_in = g.n();
  rep.m_in = static_cast<long long>(g.edge_count());
  rep.edge = e;
  auto [out, map] = contract_edge(g, e);
  rep.output = std::move(out);
  rep.map = std::move(map);
  rep.n_out = rep.output.n();
  rep.m_out = static_cast<long long>(rep.output.edge_count());
  rep.connected = is_connected(rep.output);
  rep.cover_32 = cover::holds(rep.output, {3, 2});
  rep.edge_drop = rep.m_in - rep.m_out;
  return rep;
}

ContractionReport contract_and_check(const Graph& g, Edge e) {
  if (!g.has_edge(e)) throw Error(Errc::invalid_edge, edge_text(e) + " is not an edge");
  if (!is_connected(g)) throw Error(Errc::precondition_failed, "hypothesis 'connected' failed");
  if (g.n() <= 4)
    throw Error(Errc::precondition_failed, "hypothesis 'n > 4' failed (n=" + std::to_string(g.n()) + ")");
  if (!cover::holds(g, {3, 2})) throw Error(Errc::precondition_failed, "hypothesis '(3,2)-cover' failed");
  if (bits::has_clique(g.rows(), g.neighbors(e.u) & g.neighbors(e.v), 2))
    throw Error(Errc::precondition_failed, "hypothesis 'edge in no K_4' failed for " + edge_text(e));

  ContractionReport rep = contract_unchecked(g, e);
  if (rep.n_out != rep.n_in - 1) rep.violations.emplace_back("vertex-count");
  if (!rep.connected) rep.violations.emplace_back("connected");
  if (!rep.cover_32) rep.violations.emplace_back("(3,2)-cover");
  if (rep.edge_drop < 3) rep.violations.emplace_back("edge-drop>=3");
  return rep;
}

ContractionReport contract_and_verify(const Graph& g, Edge e) {
  ContractionReport rep = contract_and_check(g, e);
  if (!rep.violations.empty()) {
    std::string broken;
    for (const auto& v : rep.violations) broken += " " + v;
    throw Error(Errc::theorem_violation, "contraction lemma conclusion failed on " + edge_text(e) + ":" + broken);
  }
  return rep;
}

Reduction reduce_to_k4_covered(const Graph& g) {
  if (!is_connected(g)) throw Error(Errc::precondition_failed, "hypothesis 'connected' failed");
  if (!cover::holds(g, {3, 2})) throw Error(Errc::precondition_failed, "hypothesis '(3,2)-cover' failed");
  Reduction out{g, {}};
  while (out.final_graph.n() > 4) {
    const auto e = find_edge_not_in_k4(out.final_graph);
    if (!e) break;
    ContractionReport rep = contract_and_verify(out.final_graph, *e);
    out.final_graph = rep.output;
    out.steps.push_back(std::move(rep));
  }
  return out;
}

}  // namespace kcover::reduce
