#include "kcover.h"

#include <cstring>
#include <exception>
#include <new>
#include <string>
#include <vector>

#include "kcover/canon.hpp"
#include "kcover/checks.hpp"
#include "kcover/cover.hpp"
#include "kcover/error.hpp"
#include "kcover/extremal.hpp"
#include "kcover/hypertree.hpp"
#include "kcover/io.hpp"
#include "kcover/oracle.hpp"
#include "kcover/reduce.hpp"
#include "kcover/report_json.hpp"
#include "kcover/shrink.hpp"

struct kc_graph {
  kcover::Graph g;
};

struct kc_graph_list {
  std::vector<kc_graph> items;
};

namespace {

using kcover::Errc;
using kcover::Error;
using kcover::Graph;
using kcover::json::Json;

thread_local std::string last_error;
thread_local std::int64_t last_offset = -1;

void set_error(const std::string& msg, std::int64_t offset = -1) {
  last_error = msg;
  last_offset = offset;
}

template <typename F>
kc_status guard(F&& body) {
  last_error.clear();
  last_offset = -1;
  try {
    return body();
  } catch (const Error& e) {
    set_error(e.what(), e.offset() ? static_cast<std::int64_t>(*e.offset()) : -1);
    return static_cast<kc_status>(static_cast<int>(e.code()));
  } catch (const std::bad_alloc&) {
    set_error("out of memory");
    return KC_ERR_INTERNAL;
  } catch (const std::exception& e) {
    set_error(e.what());
    return KC_ERR_INTERNAL;
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw Error(Errc::invalid_argument, what);
}

char* dup(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit(char** out, const Json& j) {
  if (out) *out = dup(j.dump(2));
}

const Graph& ref(const kc_graph* g) {
  require(g != nullptr, "null graph handle");
  return g->g;
}

kc_graph* wrap(Graph g) { return new kc_graph{std::move(g)}; }

kc_graph_list* wrap_list(std::vector<Graph> graphs) {
  auto* list = new kc_graph_list;
  list->items.reserve(graphs.size());
  for (auto& g : graphs) list->items.push_back({std::move(g)});
  return list;
}

kcover::extremal::Shape shape_of(kc_shape s) {
  require(s == KC_SHAPE_PATH || s == KC_SHAPE_STAR, "unknown shape");
  return s == KC_SHAPE_STAR ? kcover::extremal::Shape::star : kcover::extremal::Shape::path;
}

}  // namespace

extern "C" {

const char* kc_version(void) { return "1.0.0"; }

const char* kc_status_name(kc_status status) {
  if (status == KC_OK) return "ok";
  if (status >= KC_ERR_INVALID_ARGUMENT && status <= KC_ERR_CAP_EXCEEDED)
    return kcover::errc_name(static_cast<Errc>(static_cast<int>(status)));
  return "internal";
}

const char* kc_last_error(void) { return last_error.c_str(); }

int64_t kc_last_error_offset(void) { return last_offset; }

void kc_string_free(char* s) { delete[] s; }

kc_status kc_graph_new(int n, kc_graph** out) {
  return guard([&] {
    require(out != nullptr, "null output");
    *out = wrap(Graph(n));
    return KC_OK;
  });
}

kc_status kc_graph_from_edges(int n, const int* pairs, size_t edge_count, kc_graph** out) {
  return guard([&] {
    require(out != nullptr, "null output");
    require(pairs != nullptr || edge_count == 0, "null edge array");
    std::vector<kcover::Edge> edges;
    edges.reserve(edge_count);
    for (size_t i = 0; i < edge_count; ++i) edges.push_back({pairs[2 * i], pairs[2 * i + 1]});
    *out = wrap(Graph::from_edges(n, edges));
    return KC_OK;
  });
}

kc_status kc_graph_clone(const kc_graph* g, kc_graph** out) {
  return guard([&] {
    require(out != nullptr, "null output");
    *out = wrap(ref(g));
    return KC_OK;
  });
}

void kc_graph_free(kc_graph* g) { delete g; }

int kc_graph_order(const kc_graph* g) { return g ? g->g.n() : 0; }

size_t kc_graph_size(const kc_graph* g) { return g ? g->g.edge_count() : 0; }

int kc_graph_has_edge(const kc_graph* g, int u, int v) {
  if (!g || u == v || u < 0 || v < 0 || u >= g->g.n() || v >= g->g.n()) return 0;
  return g->g.has_edge(u, v) ? 1 : 0;
}

kc_status kc_graph_add_edge(kc_graph* g, int u, int v) {
  return guard([&] {
    require(g != nullptr, "null graph handle");
    g->g.add_edge(u, v);
    return KC_OK;
  });
}

kc_status kc_graph_edges(const kc_graph* g, int* pairs) {
  return guard([&] {
    require(pairs != nullptr || ref(g).edge_count() == 0, "null edge array");
    size_t i = 0;
    for (const auto& e : ref(g).edges()) {
      pairs[i++] = e.u;
      pairs[i++] = e.v;
    }
    return KC_OK;
  });
}

kc_status kc_graph_to_graph6(const kc_graph* g, char** out) {
  return guard([&] {
    require(out != nullptr, "null output");
    *out = dup(kcover::encode_graph6(ref(g)));
    return KC_OK;
  });
}

kc_status kc_graph_to_edge_list(const kc_graph* g, char** out) {
  return guard([&] {
    require(out != nullptr, "null output");
    *out = dup(kcover::format_edge_list(ref(g)));
    return KC_OK;
  });
}

kc_status kc_graph_to_dot(const kc_graph* g, char** out) {
  return guard([&] {
    require(out != nullptr, "null output");
    *out = dup(kcover::to_dot(ref(g)));
    return KC_OK;
  });
}

kc_status kc_graph_canonical_form(const kc_graph* g, char** out) {
  return guard([&] {
    require(out != nullptr, "null output");
    *out = dup(kcover::canonical_form(ref(g)));
    return KC_OK;
  });
}

int kc_graph_is_connected(const kc_graph* g) { return g && kcover::is_connected(g->g) ? 1 : 0; }

kc_status kc_graph_parse(const char* text, kc_format format, kc_graph_list** out) {
  return guard([&] {
    require(text != nullptr && out != nullptr, "null argument");
    kcover::GraphFormat f = kcover::GraphFormat::automatic;
    if (format == KC_FORMAT_GRAPH6) f = kcover::GraphFormat::graph6;
    else if (format == KC_FORMAT_EDGE_LIST) f = kcover::GraphFormat::edge_list;
    else require(format == KC_FORMAT_AUTO, "unknown format");
    *out = wrap_list(kcover::parse_graphs(text, f));
    return KC_OK;
  });
}

size_t kc_graph_list_size(const kc_graph_list* list) { return list ? list->items.size() : 0; }

const kc_graph* kc_graph_list_at(const kc_graph_list* list, size_t index) {
  if (!list || index >= list->items.size()) return nullptr;
  return &list->items[index];
}

void kc_graph_list_free(kc_graph_list* list) { delete list; }

kc_status kc_cover_check(const kc_graph* g, int k, int l, int full_counts, int* holds, char** json) {
  return guard([&] {
    const auto rep = kcover::cover::has_cover(ref(g), {k, l}, full_counts != 0);
    if (holds) *holds = rep.holds ? 1 : 0;
    emit(json, kcover::json::to_json(rep));
    return KC_OK;
  });
}

kc_status kc_truss(const kc_graph* g, int l, const uint64_t* shuffle_seed, char** json) {
  return guard([&] {
    kcover::cover::PeelOptions opt;
    if (shuffle_seed) opt.shuffle_seed = *shuffle_seed;
    emit(json, kcover::json::to_json(kcover::cover::truss_decompose(ref(g), l, opt), l));
    return KC_OK;
  });
}

kc_status kc_bound_edge(int64_t n, int64_t k, int64_t components, int64_t* out) {
  return guard([&] {
    require(out != nullptr, "null output");
    *out = components == 1 ? kcover::extremal::min_edges_kcover(n, k)
                           : kcover::extremal::min_edges_components(n, k, components);
    return KC_OK;
  });
}

kc_status kc_bound_vertex(int64_t n, int64_t k, int64_t* out) {
  return guard([&] {
    require(out != nullptr, "null output");
    *out = kcover::extremal::min_edges_vertex_kcover(n, k);
    return KC_OK;
  });
}

kc_status kc_construct(int n, int k, kc_shape shape, kc_graph** out) {
  return guard([&] {
    require(out != nullptr, "null output");
    *out = wrap(kcover::extremal::build_extremal(n, k, shape_of(shape)));
    return KC_OK;
  });
}

kc_status kc_extremal_spec(int n, int k, kc_shape shape, char** spec_text) {
  return guard([&] {
    require(spec_text != nullptr, "null output");
    *spec_text = dup(kcover::extremal::extremal_spec(n, k, shape_of(shape)).to_text());
    return KC_OK;
  });
}

kc_status kc_build_gtree(const char* spec_text, kc_graph** out) {
  return guard([&] {
    require(spec_text != nullptr && out != nullptr, "null argument");
    *out = wrap(kcover::extremal::build_gtree(kcover::extremal::HypertreeSpec::parse(spec_text)));
    return KC_OK;
  });
}

kc_status kc_enumerate_extremal(int n, int k, kc_graph_list** out) {
  return guard([&] {
    require(out != nullptr, "null output");
    *out = wrap_list(kcover::extremal::enumerate_extremal(n, k));
    return KC_OK;
  });
}

kc_status kc_recognize(const kc_graph* g, int k, int* extremal, char** json) {
  return guard([&] {
    const auto rec = kcover::extremal::recognize_extremal(ref(g), k);
    if (extremal) *extremal = rec.extremal ? 1 : 0;
    emit(json, kcover::json::to_json(rec, k));
    return KC_OK;
  });
}

kc_status kc_shrink(const kc_graph* g, int k, kc_policy policy, int64_t* bound, char** trace_json) {
  return guard([&] {
    require(policy == KC_POLICY_LEX || policy == KC_POLICY_MAX_OVERLAP, "unknown policy");
    const auto t = kcover::shrink::run_procedure(
        ref(g), k, policy == KC_POLICY_LEX ? kcover::shrink::Policy::lex : kcover::shrink::Policy::max_overlap);
    if (bound) *bound = t.bound;
    emit(trace_json, kcover::json::to_json(t));
    return KC_OK;
  });
}

kc_status kc_verify_trace(const kc_graph* g, const char* trace_json, int* ok, char** json) {
  return guard([&] {
    require(trace_json != nullptr, "null trace");
    Json doc;
    try {
      doc = Json::parse(trace_json);
    } catch (const nlohmann::json::parse_error& e) {
      throw Error(Errc::parse_error, std::string("trace is not JSON: ") + e.what(), e.byte);
    }
    const auto check = kcover::shrink::verify_trace(ref(g), kcover::json::trace_from_json(doc));
    if (ok) *ok = check.ok ? 1 : 0;
    emit(json, kcover::json::to_json(check));
    return KC_OK;
  });
}

kc_status kc_contract(const kc_graph* g, int u, int v, int verify, kc_graph** out, char** json) {
  return guard([&] {
    const Graph& in = ref(g);
    require(u >= 0 && v >= 0 && u < in.n() && v < in.n() && u != v, "edge endpoints out of range");
    const kcover::Edge e{u, v};
    const auto rep = verify ? kcover::reduce::contract_and_check(in, e) : kcover::reduce::contract_unchecked(in, e);
    if (out) *out = wrap(rep.output);
    emit(json, kcover::json::to_json(rep));
    if (!rep.violations.empty()) {
      std::string broken;
      for (const auto& s : rep.violations) broken += " " + s;
      set_error("contraction lemma conclusion failed:" + broken);
      return KC_ERR_THEOREM_VIOLATION;
    }
    return KC_OK;
  });
}

kc_status kc_reduce(const kc_graph* g, kc_graph** out, char** json) {
  return guard([&] {
    const auto red = kcover::reduce::reduce_to_k4_covered(ref(g));
    if (out) *out = wrap(red.final_graph);
    emit(json, kcover::json::to_json(red));
    return KC_OK;
  });
}

kc_status kc_search(const kc_search_spec* spec, int collect, unsigned workers, int64_t* minimum, char** json) {
  return guard([&] {
    require(spec != nullptr, "null spec");
    require(spec->components >= 0, "negative component count");
    kcover::oracle::SearchSpec s;
    s.n = spec->n;
    s.k = spec->k;
    s.l = spec->l;
    s.require_connected = spec->require_connected != 0;
    if (spec->components > 0) s.component_count = spec->components;
    s.condition = spec->vertex_variant ? kcover::oracle::Condition::vertex_cover
                                       : kcover::oracle::Condition::edge_cover;
    const auto rep = kcover::oracle::min_edges_bruteforce(s, {collect != 0, workers == 0 ? 1U : workers});
    if (minimum) *minimum = rep.minimum ? *rep.minimum : -1;
    emit(json, kcover::json::to_json(rep));
    return KC_OK;
  });
}

kc_status kc_enumerate_connected(int n, kc_graph_list** out) {
  return guard([&] {
    require(out != nullptr, "null output");
    *out = wrap_list(kcover::oracle::enumerate_connected(n));
    return KC_OK;
  });
}

kc_status kc_counterexample(int l_half, kc_graph** graph, char** json) {
  return guard([&] {
    const auto rep = kcover::extremal::cocktail_party_counterexample(l_half);
    if (graph) *graph = wrap(rep.graph);
    emit(json, kcover::json::to_json(rep));
    return KC_OK;
  });
}

kc_status kc_convex_max(int m, int count, int total, int64_t* value, char** json) {
  return guard([&] {
    const auto c = kcover::extremal::maximize_convex_sum(m, count, total);
    if (value) *value = c.value;
    emit(json, kcover::json::to_json(c));
    return KC_OK;
  });
}

kc_status kc_run_acceptance(uint64_t seed, unsigned workers, const int* only, size_t only_count,
                          kc_criterion_cb callback, void* user, int* failed) {
  return guard([&] {
    require(only != nullptr || only_count == 0, "null criterion list");
    kcover::checks::Options opt;
    opt.seed = seed;
    opt.workers = workers == 0 ? 1U : workers;
    for (size_t i = 0; i < only_count; ++i) {
      require(only[i] >= 1 && only[i] <= static_cast<int>(kcover::checks::criteria().size()),
              "unknown criterion id");
      opt.only.push_back(only[i]);
    }
    int bad = 0;
    kcover::checks::run_acceptance(opt, [&](const kcover::checks::CriterionResult& r) {
      bad += r.passed ? 0 : 1;
      if (callback) callback(r.id, r.title.c_str(), r.passed ? 1 : 0, r.detail.c_str(), r.seconds, user);
    });
    if (failed) *failed = bad;
    return KC_OK;
  });
}

}  // extern "C"
