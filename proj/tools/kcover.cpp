// kcover: command-line front end over the C API.
#include <kcover.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

enum Exit { kOk = 0, kFalse = 1, kUsage = 2, kViolation = 3 };

struct Failure {
  kc_status status;
  std::string message;
};

struct GraphDeleter {
  void operator()(kc_graph* g) const { kc_graph_free(g); }
};
struct ListDeleter {
  void operator()(kc_graph_list* l) const { kc_graph_list_free(l); }
};
using GraphPtr = std::unique_ptr<kc_graph, GraphDeleter>;
using ListPtr = std::unique_ptr<kc_graph_list, ListDeleter>;

// Owns a char* from the library.
struct Text {
  char* p = nullptr;
  Text() = default;
  Text(const Text&) = delete;
  Text& operator=(const Text&) = delete;
  ~Text() { kc_string_free(p); }
  char** out() { return &p; }
  std::string str() const { return p ? p : ""; }
  Json json() const { return Json::parse(str()); }
};

void check(kc_status s) {
  if (s == KC_OK) return;
  std::string msg = kc_last_error();
  const int64_t off = kc_last_error_offset();
  if (off >= 0 && msg.find("byte") == std::string::npos) msg += " (at byte " + std::to_string(off) + ")";
  throw Failure{s, msg};
}

struct Config {
  bool json = false;
  std::string format = "auto";
  std::string dot_path;
  std::uint64_t seed = 0;
  unsigned workers = 1;
};

Config cfg;

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{KC_ERR_INVALID_ARGUMENT, "cannot open " + path};
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

kc_format input_format(const std::string& path) {
  if (cfg.format == "graph6") return KC_FORMAT_GRAPH6;
  if (cfg.format == "edgelist") return KC_FORMAT_EDGE_LIST;
  for (const char* ext : {".g6", ".graph6"})
    if (ends_with(path, ext)) return KC_FORMAT_GRAPH6;
  for (const char* ext : {".txt", ".el", ".edges", ".edgelist"})
    if (ends_with(path, ext)) return KC_FORMAT_EDGE_LIST;
  return KC_FORMAT_AUTO;
}

ListPtr read_graphs(const std::string& path) {
  const std::string text = read_input(path);
  kc_graph_list* raw = nullptr;
  check(kc_graph_parse(text.c_str(), input_format(path), &raw));
  ListPtr list(raw);
  if (kc_graph_list_size(list.get()) == 0) throw Failure{KC_ERR_PARSE, "no graph in input"};
  return list;
}

// Most commands take exactly one graph.
GraphPtr read_graph(const std::string& path) {
  ListPtr list = read_graphs(path);
  if (kc_graph_list_size(list.get()) != 1)
    throw Failure{KC_ERR_INVALID_ARGUMENT, "expected one graph, got " + std::to_string(kc_graph_list_size(list.get()))};
  kc_graph* copy = nullptr;
  check(kc_graph_clone(kc_graph_list_at(list.get(), 0), &copy));
  return GraphPtr(copy);
}

std::string graph6(const kc_graph* g) {
  Text t;
  check(kc_graph_to_graph6(g, t.out()));
  return t.str();
}

Json graph_json(const kc_graph* g) {
  Json j;
  j["n"] = kc_graph_order(g);
  j["m"] = kc_graph_size(g);
  j["graph6"] = graph6(g);
  std::vector<int> pairs(2 * kc_graph_size(g));
  check(kc_graph_edges(g, pairs.data()));
  Json edges = Json::array();
  for (std::size_t i = 0; i < pairs.size(); i += 2) edges.push_back({pairs[i], pairs[i + 1]});
  j["edges"] = edges;
  return j;
}

void write_dot(const kc_graph* g) {
  if (cfg.dot_path.empty() || !g) return;
  Text t;
  check(kc_graph_to_dot(g, t.out()));
  std::ofstream out(cfg.dot_path);
  if (!out) throw Failure{KC_ERR_INVALID_ARGUMENT, "cannot write " + cfg.dot_path};
  out << t.str();
}

Json envelope(const std::string& command, Json result) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  j["result"] = std::move(result);
  return j;
}

void print_json(const std::string& command, Json result) { std::cout << envelope(command, std::move(result)).dump(2) << "\n"; }

std::pair<int, int> parse_edge(const std::string& s) {
  const auto comma = s.find(',');
  try {
    if (comma == std::string::npos) throw std::invalid_argument("");
    std::size_t a = 0;
    std::size_t b = 0;
    const int u = std::stoi(s.substr(0, comma), &a);
    const int v = std::stoi(s.substr(comma + 1), &b);
    if (a != comma || b != s.size() - comma - 1) throw std::invalid_argument("");
    return {u, v};
  } catch (const std::exception&) {
    throw Failure{KC_ERR_INVALID_ARGUMENT, "edge must look like u,v: '" + s + "'"};
  }
}

// --- subcommands -----------------------------------------------------------

struct CoverArgs {
  int k = 3;
  int l = 1;
  bool counts = false;
  std::string file;
};

int run_cover_check(const CoverArgs& a) {
  ListPtr list = read_graphs(a.file);
  const std::size_t count = kc_graph_list_size(list.get());
  std::vector<int> holds(count, 0);
  std::vector<std::string> reports(count);
  std::vector<std::optional<Failure>> errors(count);
  const auto work = [&](std::size_t begin, std::size_t step) {
    for (std::size_t i = begin; i < count; i += step) {
      Text t;
      const kc_status s = kc_cover_check(kc_graph_list_at(list.get(), i), a.k, a.l, a.counts, &holds[i], t.out());
      if (s != KC_OK) errors[i] = Failure{s, kc_last_error()};
      reports[i] = t.str();
    }
  };
  const unsigned workers = std::max(1U, std::min<unsigned>(cfg.workers, static_cast<unsigned>(count)));
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work, w, workers);
  work(0, workers);
  for (auto& t : pool) t.join();
  for (const auto& e : errors)
    if (e) throw *e;

  if (count == 1) write_dot(kc_graph_list_at(list.get(), 0));
  const bool all = std::all_of(holds.begin(), holds.end(), [](int h) { return h != 0; });
  if (cfg.json) {
    if (count == 1) {
      print_json("cover check", Json::parse(reports[0]));
    } else {
      Json arr = Json::array();
      for (const auto& r : reports) arr.push_back(Json::parse(r));
      print_json("cover check", arr);
    }
  } else {
    for (std::size_t i = 0; i < count; ++i) {
      const Json r = Json::parse(reports[i]);
      const std::string g6 = graph6(kc_graph_list_at(list.get(), i));
      std::cout << g6 << ": (" << a.k << "," << a.l << ")-cover " << (holds[i] ? "holds" : "fails");
      if (!holds[i]) std::cout << " (" << r["defects"].size() << " defective edges)";
      std::cout << "\n";
      if (count == 1) {
        for (const auto& d : r["defects"])
          std::cout << "  edge " << d["u"] << "-" << d["v"] << " lies in " << d["count"] << " K_" << a.k << "\n";
        if (r.contains("counts"))
          for (const auto& c : r["counts"])
            std::cout << "  edge " << c["u"] << "-" << c["v"] << ": " << c["count"] << "\n";
      }
    }
  }
  return all ? kOk : kFalse;
}

int run_truss(int l, bool shuffle, const std::string& file) {
  GraphPtr g = read_graph(file);
  Text t;
  check(kc_truss(g.get(), l, shuffle ? &cfg.seed : nullptr, t.out()));
  write_dot(g.get());
  const Json r = t.json();
  if (cfg.json) {
    print_json("truss", r);
  } else {
    std::cout << r["trusses"].size() << " " << l << "-truss component(s)\n";
    for (const auto& tr : r["trusses"]) {
      std::cout << "  vertices";
      for (const auto& v : tr["vertices"]) std::cout << " " << v;
      std::cout << "; " << tr["edges"].size() << " edges\n";
    }
  }
  return kOk;
}

int run_bound(std::int64_t n, std::int64_t k, std::int64_t components, bool vertex_variant) {
  std::int64_t value = 0;
  if (vertex_variant) {
    if (components != 1) throw Failure{KC_ERR_INVALID_ARGUMENT, "--components does not apply to --vertex-variant"};
    check(kc_bound_vertex(n, k, &value));
  } else {
    check(kc_bound_edge(n, k, components, &value));
  }
  if (cfg.json) {
    Json j;
    j["n"] = n;
    j["k"] = k;
    j["components"] = components;
    j["variant"] = vertex_variant ? "vertex" : "edge";
    j["min_edges"] = value;
    print_json("bound", j);
  } else {
    std::cout << value << "\n";
  }
  return kOk;
}

void print_graph(const std::string& command, const kc_graph* g, Json extra = Json::object()) {
  write_dot(g);
  if (cfg.json) {
    Json j = graph_json(g);
    for (auto& [key, value] : extra.items()) j[key] = value;
    print_json(command, j);
  } else {
    std::cout << graph6(g) << "\n";
  }
}

int run_construct(int n, int k, const std::string& shape, const std::string& spec_file, bool print_spec) {
  kc_graph* raw = nullptr;
  std::string spec_text;
  if (!spec_file.empty()) {
    spec_text = read_input(spec_file);
    check(kc_build_gtree(spec_text.c_str(), &raw));
  } else {
    const kc_shape s = shape == "star" ? KC_SHAPE_STAR : KC_SHAPE_PATH;
    check(kc_construct(n, k, s, &raw));
    Text t;
    check(kc_extremal_spec(n, k, s, t.out()));
    spec_text = t.str();
  }
  GraphPtr g(raw);
  if (print_spec && !cfg.json) std::cout << spec_text;
  Json extra;
  extra["spec"] = spec_text;
  print_graph("construct", g.get(), extra);
  return kOk;
}

int run_recognize(int k, const std::string& file) {
  GraphPtr g = read_graph(file);
  int extremal = 0;
  Text t;
  check(kc_recognize(g.get(), k, &extremal, t.out()));
  write_dot(g.get());
  const Json r = t.json();
  if (cfg.json) {
    print_json("recognize", r);
  } else if (extremal) {
    std::cout << "extremal: " << r["witness"]["cliques"].size() << " cliques";
    if (!r["witness"]["exceptional"].is_null()) std::cout << ", exceptional overlap at clique " << r["witness"]["exceptional"];
    std::cout << "\n";
  } else {
    std::cout << "not extremal: " << r["reason"].get<std::string>() << "\n";
  }
  return extremal ? kOk : kFalse;
}

int run_shrink(int k, const std::string& policy, const std::string& check_file, const std::string& file) {
  GraphPtr g = read_graph(file);
  write_dot(g.get());
  if (!check_file.empty()) {
    std::string trace = read_input(check_file);
    // Accept the CLI's own --json envelope as well as a bare trace.
    if (const Json doc = Json::parse(trace, nullptr, false); doc.is_object() && doc.contains("schema_version") && doc.contains("result"))
      trace = doc["result"].dump();
    int ok = 0;
    Text t;
    check(kc_verify_trace(g.get(), trace.c_str(), &ok, t.out()));
    const Json r = t.json();
    if (cfg.json) print_json("shrink", r);
    else if (ok) std::cout << "trace verified\n";
    else std::cout << "trace rejected at step " << r["step"] << ": " << r["reason"].get<std::string>() << "\n";
    return ok ? kOk : kFalse;
  }
  std::int64_t bound = 0;
  Text t;
  check(kc_shrink(g.get(), k, policy == "max-overlap" ? KC_POLICY_MAX_OVERLAP : KC_POLICY_LEX, &bound, t.out()));
  const Json r = t.json();
  if (cfg.json) {
    print_json("shrink", r);
    return kOk;
  }
  std::cout << "C_0 =";
  for (const auto& v : r["c0"]) std::cout << " " << v;
  std::cout << "\n";
  int j = 1;
  for (const auto& s : r["steps"]) {
    std::cout << "step " << j++ << ": edge " << s["e"][0] << "-" << s["e"][1] << ", clique";
    for (const auto& v : s["clique"]) std::cout << " " << v;
    std::cout << ", x = " << s["x"] << "\n";
  }
  std::cout << "bound " << bound << "\n";
  return kOk;
}

int run_contract(const std::string& edge, bool raw, const std::string& file) {
  GraphPtr g = read_graph(file);
  const auto [u, v] = parse_edge(edge);
  kc_graph* out = nullptr;
  Text t;
  const kc_status s = kc_contract(g.get(), u, v, raw ? 0 : 1, &out, t.out());
  GraphPtr result(out);
  if (s != KC_OK && s != KC_ERR_THEOREM_VIOLATION) check(s);
  const Json r = t.json();
  if (cfg.json) {
    print_json("contract", r);
    write_dot(result.get());
  } else {
    print_graph("contract", result.get());
    std::cout << "edges " << r["m_in"] << " -> " << r["m_out"] << " (drop " << r["edge_drop"] << ")"
              << ", connected " << r["connected"] << ", (3,2)-cover " << r["cover_32"] << "\n";
  }
  if (s == KC_ERR_THEOREM_VIOLATION) {
    std::cerr << "theorem violation: " << kc_last_error() << "\n";
    return kViolation;
  }
  return kOk;
}

int run_reduce(const std::string& file) {
  GraphPtr g = read_graph(file);
  kc_graph* out = nullptr;
  Text t;
  check(kc_reduce(g.get(), &out, t.out()));
  GraphPtr result(out);
  const Json r = t.json();
  if (cfg.json) {
    print_json("reduce", r);
    write_dot(result.get());
  } else {
    for (const auto& s : r["steps"])
      std::cout << "contract " << s["edge"][0] << "-" << s["edge"][1] << ": n " << s["n_in"] << " -> " << s["n_out"]
                << ", m " << s["m_in"] << " -> " << s["m_out"] << "\n";
    print_graph("reduce", result.get());
  }
  return kOk;
}

struct SearchArgs {
  int n = 0;
  int k = 3;
  int l = 1;
  bool all = false;
  bool vertex_variant = false;
  int components = 0;
  bool disconnected = false;
};

int run_search(const SearchArgs& a) {
  kc_search_spec spec{a.n, a.k, a.l, a.disconnected || a.vertex_variant ? 0 : 1, a.components, a.vertex_variant ? 1 : 0};
  std::int64_t minimum = -1;
  Text t;
  check(kc_search(&spec, a.all ? 1 : 0, cfg.workers, &minimum, t.out()));
  const Json r = t.json();
  if (cfg.json) {
    print_json("search", r);
  } else {
    if (minimum < 0) std::cout << "no graph satisfies the constraints\n";
    else std::cout << minimum << "\n";
    if (r.contains("minimizers"))
      for (const auto& m : r["minimizers"]) std::cout << "  " << m["canonical"].get<std::string>() << "\n";
  }
  return minimum < 0 ? kFalse : kOk;
}

int run_counterexample(int l_half) {
  kc_graph* raw = nullptr;
  Text t;
  check(kc_counterexample(l_half, &raw, t.out()));
  GraphPtr g(raw);
  write_dot(g.get());
  Json r = t.json();
  if (cfg.json) print_json("counterexample", r);
  else std::cout << r.dump(2) << "\n";
  return kOk;
}

std::vector<int> parse_id_list(const std::string& s) {
  std::vector<int> ids;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      ids.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw Failure{KC_ERR_INVALID_ARGUMENT, "bad criterion id '" + item + "'"};
    }
  }
  return ids;
}

int run_acceptance_table(const std::string& only) {
  const std::vector<int> ids = parse_id_list(only);
  Json rows = Json::array();
  int failed = 0;
  struct Ctx {
    Json* rows;
  } ctx{&rows};
  const auto cb = [](int id, const char* title, int passed, const char* detail, double seconds, void* user) {
    auto* c = static_cast<Ctx*>(user);
    Json row;
    row["id"] = id;
    row["title"] = title;
    row["passed"] = passed != 0;
    row["detail"] = detail;
    row["seconds"] = seconds;
    if (!cfg.json) {
      std::printf("%2d  %-4s  %-62s %7.2fs\n      %s\n", id, passed ? "PASS" : "FAIL", title, seconds, detail);
      std::fflush(stdout);
    }
    c->rows->push_back(std::move(row));
  };
  if (!cfg.json) std::printf("id  result criterion\n");
  check(kc_run_acceptance(cfg.seed, cfg.workers, ids.empty() ? nullptr : ids.data(), ids.size(), cb, &ctx, &failed));
  if (cfg.json) {
    Json j;
    j["seed"] = cfg.seed;
    j["criteria"] = rows;
    j["failed"] = failed;
    print_json("verify-paper", j);
  } else {
    std::printf("%zu criteria, %d failed\n", rows.size(), failed);
  }
  return failed == 0 ? kOk : kFalse;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Clique edge covers: bounds, extremal graphs, certificates, and exhaustive checks"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", cfg.json, "Emit JSON instead of text");
  app.add_option("--format", cfg.format, "Input format (default: from file extension, else sniffed)")
      ->check(CLI::IsMember({"auto", "graph6", "edgelist"}));
  app.add_option("--dot", cfg.dot_path, "Also write the relevant graph as DOT to this path");
  app.add_option("--seed", cfg.seed, "Seed for randomized steps")->capture_default_str();
  app.add_option("--workers", cfg.workers, "Worker threads for exhaustive searches")
      ->check(CLI::Range(1U, 256U))
      ->capture_default_str();

  std::function<int()> action;

  auto* cover = app.add_subcommand("cover", "Clique edge cover checks");
  cover->require_subcommand(1);
  CoverArgs cover_args;
  auto* cover_check = cover->add_subcommand("check", "Does every edge lie in at least l k-cliques?");
  cover_check->add_option("-k", cover_args.k, "Clique size")->capture_default_str();
  cover_check->add_option("-l", cover_args.l, "Cliques required per edge")->capture_default_str();
  cover_check->add_flag("--counts", cover_args.counts, "Report the clique count of every edge");
  cover_check->add_option("FILE", cover_args.file, "Input graph(s); stdin if omitted");
  cover_check->callback([&] { action = [&] { return run_cover_check(cover_args); }; });

  int truss_l = 1;
  bool truss_shuffle = false;
  std::string truss_file;
  auto* truss = app.add_subcommand("truss", "Maximal subgraphs where every edge is in l triangles");
  truss->add_option("-l", truss_l, "Triangles required per edge")->capture_default_str();
  truss->add_flag("--shuffle", truss_shuffle, "Peel in a random order drawn from --seed");
  truss->add_option("FILE", truss_file, "Input graph; stdin if omitted");
  truss->callback([&] { action = [&] { return run_truss(truss_l, truss_shuffle, truss_file); }; });

  std::int64_t bound_n = 0;
  std::int64_t bound_k = 0;
  std::int64_t bound_c = 1;
  bool bound_vertex = false;
  auto* bound = app.add_subcommand("bound", "Least edge count of a (k,1)-covered graph");
  bound->add_option("--n", bound_n, "Vertices")->required();
  bound->add_option("--k", bound_k, "Clique size")->required();
  bound->add_option("--components", bound_c, "Exact number of components")->capture_default_str();
  bound->add_flag("--vertex-variant", bound_vertex, "Only require every vertex to lie in a k-clique");
  bound->callback([&] { action = [&] { return run_bound(bound_n, bound_k, bound_c, bound_vertex); }; });

  int cons_n = 0;
  int cons_k = 0;
  std::string cons_shape = "path";
  std::string cons_spec;
  bool cons_print_spec = false;
  auto* construct = app.add_subcommand("construct", "Build an extremal graph");
  construct->add_option("--n", cons_n, "Vertices");
  construct->add_option("--k", cons_k, "Clique size");
  construct->add_option("--shape", cons_shape, "Block layout")
      ->check(CLI::IsMember({"path", "star"}))
      ->capture_default_str();
  construct->add_option("--spec", cons_spec, "Build from a hypertree spec file instead");
  construct->add_flag("--print-spec", cons_print_spec, "Print the hypertree spec before the graph");
  construct->callback([&] {
    if (cons_spec.empty() && (cons_n == 0 || cons_k == 0)) throw CLI::ValidationError("construct", "--n and --k are required without --spec");
    action = [&] { return run_construct(cons_n, cons_k, cons_shape, cons_spec, cons_print_spec); };
  });

  int rec_k = 3;
  std::string rec_file;
  auto* recognize = app.add_subcommand("recognize", "Is the graph an extremal (k,1)-covered graph?");
  recognize->add_option("-k", rec_k, "Clique size")->capture_default_str();
  recognize->add_option("FILE", rec_file, "Input graph; stdin if omitted");
  recognize->callback([&] { action = [&] { return run_recognize(rec_k, rec_file); }; });

  int shrink_k = 3;
  std::string shrink_policy = "lex";
  std::string shrink_check;
  std::string shrink_file;
  auto* shrink = app.add_subcommand("shrink", "Run the clique-peeling procedure and print its certified bound");
  shrink->add_option("-k", shrink_k, "Clique size")->capture_default_str();
  shrink->add_option("--policy", shrink_policy, "Clique choice per step")
      ->check(CLI::IsMember({"lex", "max-overlap"}))
      ->capture_default_str();
  shrink->add_option("--check", shrink_check, "Verify a JSON trace against the graph instead");
  shrink->add_option("FILE", shrink_file, "Input graph; stdin if omitted");
  shrink->callback([&] { action = [&] { return run_shrink(shrink_k, shrink_policy, shrink_check, shrink_file); }; });

  std::string contract_edge;
  bool contract_raw = false;
  std::string contract_file;
  auto* contract = app.add_subcommand("contract", "Contract an edge of a (3,2)-covered graph and check the result");
  contract->add_option("-e", contract_edge, "Edge as u,v")->required();
  contract->add_flag("--raw", contract_raw, "Contract without checking hypotheses or conclusions");
  contract->add_option("FILE", contract_file, "Input graph; stdin if omitted");
  contract->callback([&] { action = [&] { return run_contract(contract_edge, contract_raw, contract_file); }; });

  std::string reduce_file;
  auto* reduce = app.add_subcommand("reduce", "Contract edges outside K_4s until none is left");
  reduce->add_option("FILE", reduce_file, "Input graph; stdin if omitted");
  reduce->callback([&] { action = [&] { return run_reduce(reduce_file); }; });

  SearchArgs search_args;
  auto* search = app.add_subcommand("search", "Exhaustive minimum edge count (n <= 8)");
  search->add_option("--n", search_args.n, "Vertices")->required();
  search->add_option("--k", search_args.k, "Clique size")->capture_default_str();
  search->add_option("--l", search_args.l, "Cliques required per edge")->capture_default_str();
  search->add_flag("--all", search_args.all, "List every minimizer up to isomorphism");
  search->add_flag("--vertex-variant", search_args.vertex_variant, "Every vertex in a k-clique (connectivity not required)");
  search->add_option("--components", search_args.components, "Exact number of components");
  search->add_flag("--disconnected", search_args.disconnected, "Drop the connectivity requirement");
  search->callback([&] { action = [&] { return run_search(search_args); }; });

  int l_half = 3;
  auto* counter = app.add_subcommand("counterexample", "Cocktail-party graph beating the (2l'+2,1) bound");
  counter->add_option("--l-half", l_half, "l' (the cover needs 2l' triangles per edge)")->capture_default_str();
  counter->callback([&] { action = [&] { return run_counterexample(l_half); }; });

  std::string only;
  auto* verify = app.add_subcommand("verify-paper", "Run every reproduction criterion and print a pass/fail table");
  verify->add_option("--only", only, "Comma-separated criterion ids");
  verify->callback([&] { action = [&] { return run_acceptance_table(only); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    return action();
  } catch (const Failure& f) {
    std::cerr << "error: " << kc_status_name(f.status) << ": " << f.message << "\n";
    return f.status == KC_ERR_THEOREM_VIOLATION ? kViolation : kUsage;
  } catch (const Json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
