#include "kcover/report_json.hpp"

#include "kcover/error.hpp"
#include "kcover/io.hpp"

namespace kcover::json {
namespace {

Json edge_pair(const Edge& e) { return Json::array({e.u, e.v}); }

Json edge_list(const Graph& g) {
  Json out = Json::array();
  for (const Edge& e : g.edges()) out.push_back(edge_pair(e));
  return out;
}

}  // namespace

Json graph_summary(const Graph& g) {
  Json j;
  j["n"] = g.n();
  j["m"] = g.edge_count();
  if (g.n() <= 62) j["graph6"] = encode_graph6(g);
  j["edges"] = edge_list(g);
  return j;
}

Json to_json(const cover::CoverReport& r) {
  Json j;
  j["holds"] = r.holds;
  j["k"] = r.spec.k;
  j["l"] = r.spec.l;
  Json defects = Json::array();
  for (const auto& d : r.defects) defects.push_back({{"u", d.edge.u}, {"v", d.edge.v}, {"count", d.count}});
  j["defects"] = std::move(defects);
  if (!r.counts.empty()) {
    Json counts = Json::array();
    for (const auto& c : r.counts) counts.push_back({{"u", c.edge.u}, {"v", c.edge.v}, {"count", c.count}});
    j["counts"] = std::move(counts);
  }
  return j;
}

Json to_json(const std::vector<cover::Truss>& trusses, int l) {
  Json j;
  j["l"] = l;
  Json list = Json::array();
  for (const auto& t : trusses) {
    Json edges = Json::array();
    for (const Edge& e : t.graph.edges())
      edges.push_back(Json::array({t.vertex_map[static_cast<std::size_t>(e.u)],
                                   t.vertex_map[static_cast<std::size_t>(e.v)]}));
    list.push_back({{"vertices", t.vertex_map}, {"edges", std::move(edges)}});
  }
  j["trusses"] = std::move(list);
  return j;
}

Json to_json(const extremal::ExtremalWitness& w) {
  Json j;
  j["cliques"] = w.cliques;
  j["overlaps"] = w.overlaps;
  j["exceptional"] = w.exceptional ? Json(*w.exceptional) : Json(nullptr);
  j["partner"] = w.partner ? Json(*w.partner) : Json(nullptr);
  return j;
}

Json to_json(const extremal::Recognition& r, int k) {
  Json j;
  j["extremal"] = r.extremal;
  j["k"] = k;
  j["reason"] = extremal::failure_name(r.reason);
  j["witness"] = r.witness ? to_json(*r.witness) : Json(nullptr);
  return j;
}

Json to_json(const extremal::ConvexMax& c) { return {{"max", c.value}, {"witness", c.witness}}; }

Json to_json(const extremal::CounterexampleReport& r) {
  Json j;
  j["l_half"] = r.l_half;
  j["n"] = r.graph.n();
  j["edges"] = r.edges;
  j["cover"] = {{"k", 3}, {"l", r.cover_l}, {"holds", r.cover_holds}};
  j["bound_k"] = r.bound_k;
  j["bound"] = r.bound;
  j["strictly_smaller"] = r.strictly_smaller;
  j["graph6"] = encode_graph6(r.graph);
  return j;
}

Json to_json(const shrink::Trace& t) {
  Json j;
  j["k"] = t.k;
  j["n"] = t.n;
  j["c0"] = t.initial;
  Json steps = Json::array();
  for (const auto& s : t.steps)
    steps.push_back({{"e", Json::array({s.frontier, s.covered})}, {"clique", s.clique}, {"x", s.x}});
  j["steps"] = std::move(steps);
  j["bound"] = t.bound;
  return j;
}

Json to_json(const reduce::ContractionReport& r) {
  Json j;
  j["n_in"] = r.n_in;
  j["m_in"] = r.m_in;
  j["edge"] = edge_pair(r.edge);
  j["merged_image"] = r.map.merged_image;
  j["map"] = r.map.image;
  j["n_out"] = r.n_out;
  j["m_out"] = r.m_out;
  j["connected"] = r.connected;
  j["cover_32"] = r.cover_32;
  j["edge_drop"] = r.edge_drop;
  j["violations"] = r.violations;
  j["output"] = graph_summary(r.output);
  return j;
}

Json to_json(const reduce::Reduction& r) {
  Json j;
  j["steps"] = Json::array();
  for (const auto& s : r.steps) j["steps"].push_back(to_json(s));
  j["final"] = graph_summary(r.final_graph);
  return j;
}

Json to_json(const shrink::TraceCheck& c) {
  Json j;
  j["ok"] = c.ok;
  j["step"] = c.step;
  j["reason"] = c.reason;
  return j;
}

Json to_json(const oracle::SearchReport& r) {
  Json j;
  j["n"] = r.spec.n;
  j["k"] = r.spec.k;
  j["l"] = r.spec.l;
  j["condition"] = oracle::condition_name(r.spec.condition);
  j["connected"] = r.spec.require_connected && !r.spec.component_count;
  j["components"] = r.spec.component_count ? Json(*r.spec.component_count) : Json(nullptr);
  j["minimum"] = r.minimum ? Json(*r.minimum) : Json(nullptr);
  j["searched"] = Json::array({r.searched_from, r.searched_to});
  j["subsets_examined"] = r.subsets_examined;
  if (r.minimizers_collected) {
    Json mins = Json::array();
    for (const auto& m : r.minimizers) mins.push_back({{"canonical", m.canonical}, {"graph", graph_summary(m.graph)}});
    j["minimizers"] = std::move(mins);
  }
  j["seconds"] = r.seconds;
  return j;
}

shrink::Trace trace_from_json(const Json& j) {
  try {
    shrink::Trace t;
    t.k = j.at("k").get<int>();
    t.n = j.at("n").get<int>();
    t.initial = j.at("c0").get<std::vector<int>>();
    for (const auto& s : j.at("steps")) {
      const auto e = s.at("e").get<std::vector<int>>();
      if (e.size() != 2) throw Error(Errc::parse_error, "trace step edge must have two endpoints");
      t.steps.push_back({e[0], e[1], s.at("clique").get<std::vector<int>>(), s.at("x").get<int>()});
    }
    t.bound = j.at("bound").get<long long>();
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::parse_error, std::string("malformed trace: ") + e.what());
  }
}

}  // namespace kcover::json
