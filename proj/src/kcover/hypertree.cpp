#include "kcover/hypertree.hpp"

#include <cctype>
#include <charconv>
#include <map>
#include <sstream>

#include "kcover/canon.hpp"
#include "kcover/error.hpp"
#include "kcover/extremal.hpp"

namespace kcover::extremal {

int BlockTemplate::vertex_count() const { return kind == Kind::clique ? k : k + r; }

long long BlockTemplate::edge_count() const {
  if (kind == Kind::clique) return choose2(k);
  return 2 * choose2(k) - choose2(k - r);
}

std::vector<Edge> BlockTemplate::local_edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < k; ++u)
    for (int v = u + 1; v < k; ++v) out.emplace_back(u, v);
  if (kind == Kind::lblock) {
    std::vector<int> second;
    for (int s = 0; s < k - r; ++s) second.push_back(s);
    for (int p = k; p < k + r; ++p) second.push_back(p);
    for (std::size_t i = 0; i < second.size(); ++i)
      for (std::size_t j = i + 1; j < second.size(); ++j)
        if (second[j] >= k) out.emplace_back(second[i], second[j]);
  }
  return out;
}

void BlockTemplate::validate() const {
  if (k < 2) throw Error(Errc::spec_error, "block clique order must be >= 2");
  if (kind == Kind::lblock && (r < 1 || r > k - 1))
    throw Error(Errc::spec_error, "L block needs 1 <= r <= k-1, got L " + std::to_string(k) +
                                      " " + std::to_string(r));
}

namespace {

[[noreturn]] void spec_fail(int line, const std::string& what) {
  throw Error(Errc::spec_error, "hypertree spec line " + std::to_string(line) + ": " + what);
}

int parse_int(std::string_view tok, int line) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size() || value < 0)
    spec_fail(line, "expected a non-negative integer, got '" + std::string(tok) + "'");
  return value;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t at = s.find(sep, pos);
    out.push_back(s.substr(pos, at == std::string_view::npos ? std::string_view::npos : at - pos));
    if (at == std::string_view::npos) break;
    pos = at + 1;
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

HypertreeSpec HypertreeSpec::parse(std::string_view text) {
  HypertreeSpec spec;
  int line_no = 0;
  for (std::string_view raw : split(text, '\n')) {
    ++line_no;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::string_view line = trim(raw);
    if (line.empty()) continue;

    std::string_view head = line;
    std::string_view tail;
    if (const auto at = line.find('@'); at != std::string_view::npos) {
      head = trim(line.substr(0, at));
      tail = trim(line.substr(at + 1));
    }

    std::vector<std::string_view> words;
    for (std::size_t i = 0; i < head.size();) {
      while (i < head.size() && std::isspace(static_cast<unsigned char>(head[i]))) ++i;
      const std::size_t start = i;
      while (i < head.size() && !std::isspace(static_cast<unsigned char>(head[i]))) ++i;
      if (i > start) words.push_back(head.substr(start, i - start));
    }

    Block block;
    if (words.size() == 2 && words[0] == "K") {
      block.shape = BlockTemplate::clique(parse_int(words[1], line_no));
    } else if (words.size() == 3 && words[0] == "L") {
      block.shape = BlockTemplate::lblock(parse_int(words[1], line_no), parse_int(words[2], line_no));
    } else {
      spec_fail(line_no, "expected 'K k' or 'L k r'");
    }

    if (line.find('@') != std::string_view::npos) {
      const auto colon = tail.find(':');
      if (colon == std::string_view::npos) spec_fail(line_no, "attachment must be '@ block: v[,v...]'");
      Attachment attach;
      attach.parent = static_cast<std::size_t>(parse_int(trim(tail.substr(0, colon)), line_no));
      for (std::string_view item : split(tail.substr(colon + 1), ',')) {
        item = trim(item);
        if (item.empty()) spec_fail(line_no, "empty glue entry");
        Glue glue;
        if (const auto eq = item.find('='); eq != std::string_view::npos) {
          glue.parent_vertex = parse_int(trim(item.substr(0, eq)), line_no);
          glue.self_vertex = parse_int(trim(item.substr(eq + 1)), line_no);
        } else {
          glue.parent_vertex = parse_int(item, line_no);
        }
        attach.glue.push_back(glue);
      }
      block.attach = std::move(attach);
    }
    spec.blocks.push_back(std::move(block));
  }
  spec.validate();
  return spec;
}

std::string HypertreeSpec::to_text() const {
  std::ostringstream out;
  for (const Block& b : blocks) {
    if (b.shape.kind == BlockTemplate::Kind::clique)
      out << "K " << b.shape.k;
    else
      out << "L " << b.shape.k << ' ' << b.shape.r;
    if (b.attach) {
      out << " @ " << b.attach->parent << ':';
      for (std::size_t i = 0; i < b.attach->glue.size(); ++i) {
        const Glue& g = b.attach->glue[i];
        out << (i == 0 ? " " : ",") << g.parent_vertex;
        if (g.self_vertex != 0) out << '=' << g.self_vertex;
      }
    }
    out << '\n';
  }
  return out.str();
}

void HypertreeSpec::validate() const {
  if (blocks.empty()) throw Error(Errc::spec_error, "hypertree spec has no blocks");
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const Block& b = blocks[i];
    b.shape.validate();
    const std::string where = "block " + std::to_string(i) + ": ";
    if (i == 0) {
      if (b.attach) throw Error(Errc::spec_error, where + "the first block cannot attach");
      continue;
    }
    if (!b.attach) throw Error(Errc::spec_error, where + "missing attachment");
    const Attachment& a = *b.attach;
    if (a.parent >= i)
      throw Error(Errc::spec_error, where + "attaches to block " + std::to_string(a.parent) +
                                        " which is not an earlier block");
    if (a.glue.empty()) throw Error(Errc::spec_error, where + "empty glue list");
    if (a.glue.size() > 1)
      throw Error(Errc::spec_error, where + "glue list touches " + std::to_string(a.glue.size()) +
                                        " vertices of block " + std::to_string(a.parent) +
                                        "; linear hypertrees share at most one");
    const Glue& g = a.glue.front();
    if (g.parent_vertex < 0 || g.parent_vertex >= blocks[a.parent].shape.vertex_count())
      throw Error(Errc::spec_error, where + "block " + std::to_string(a.parent) + " has no vertex " +
                                        std::to_string(g.parent_vertex));
    if (g.self_vertex < 0 || g.self_vertex >= b.shape.vertex_count())
      throw Error(Errc::spec_error, where + "no local vertex " + std::to_string(g.self_vertex));
  }
  if (vertex_count() > Graph::kMaxVertices)
    throw Error(Errc::unsupported_size, "hypertree has " + std::to_string(vertex_count()) +
                                            " vertices; at most " +
                                            std::to_string(Graph::kMaxVertices) + " supported");
}

int HypertreeSpec::vertex_count() const {
  int n = 1;
  for (const Block& b : blocks) n += b.shape.vertex_count() - 1;
  return blocks.empty() ? 0 : n;
}

long long HypertreeSpec::edge_count() const {
  long long m = 0;
  for (const Block& b : blocks) m += b.shape.edge_count();
  return m;
}

Graph build_gtree(const HypertreeSpec& spec) {
  spec.validate();
  Graph g(spec.vertex_count());
  std::vector<std::vector<int>> ids(spec.blocks.size());
  int next = 0;
  for (std::size_t i = 0; i < spec.blocks.size(); ++i) {
    const Block& b = spec.blocks[i];
    std::vector<int>& local = ids[i];
    local.assign(static_cast<std::size_t>(b.shape.vertex_count()), -1);
    if (b.attach) {
      const Glue& glue = b.attach->glue.front();
      local[static_cast<std::size_t>(glue.self_vertex)] =
          ids[b.attach->parent][static_cast<std::size_t>(glue.parent_vertex)];
    }
    for (int& v : local)
      if (v < 0) v = next++;
    for (const Edge& e : b.shape.local_edges())
      g.add_edge(local[static_cast<std::size_t>(e.u)], local[static_cast<std::size_t>(e.v)]);
  }
  return g;
}

HypertreeSpec extremal_spec(int n, int k, Shape shape) {
  if (n == k && k >= 3) return HypertreeSpec{{Block{BlockTemplate::clique(k), std::nullopt}}};
  const Decomposition d = decompose(n, k);
  std::vector<BlockTemplate> shapes;
  if (d.r < k - 1) {
    shapes.push_back(BlockTemplate::lblock(k, static_cast<int>(d.r)));
  } else {
    shapes.push_back(BlockTemplate::clique(k));
    shapes.push_back(BlockTemplate::clique(k));
  }
  for (long long i = 0; i < d.q; ++i) shapes.push_back(BlockTemplate::clique(k));

  HypertreeSpec spec;
  for (std::size_t i = 0; i < shapes.size(); ++i) {
    Block b{shapes[i], std::nullopt};
    if (i > 0) {
      if (shape == Shape::star) {
        b.attach = Attachment{0, {Glue{0, 0}}};
      } else {
        const int last = shapes[i - 1].vertex_count() - 1;
        b.attach = Attachment{i - 1, {Glue{last, 0}}};
      }
    }
    spec.blocks.push_back(b);
  }
  return spec;
}

Graph build_extremal(int n, int k, Shape shape) { return build_gtree(extremal_spec(n, k, shape)); }

std::vector<Graph> enumerate_extremal(int n, int k, std::size_t cap) {
  if (n == k && k >= 3) return {complete_graph(k)};
  const Decomposition d = decompose(n, k);
  if (n > kMaxCanonicalOrder)
    throw Error(Errc::unsupported_size, "enumeration dedups by canonical form; n <= " +
                                            std::to_string(kMaxCanonicalOrder) + " required");

  // Root the hypertree at the L block; every member is then the root with K_k
  // leaves glued on one at a time, so isomorphism classes can be grown level
  // by level.
  HypertreeSpec root;
  long long leaves = d.q;
  if (d.r < k - 1) {
    root.blocks.push_back({BlockTemplate::lblock(k, static_cast<int>(d.r)), std::nullopt});
  } else {
    root.blocks.push_back({BlockTemplate::clique(k), std::nullopt});
    ++leaves;
  }

  std::map<std::string, Graph> level{{canonical_form(build_gtree(root)), build_gtree(root)}};
  for (long long step = 0; step < leaves; ++step) {
    std::map<std::string, Graph> next;
    for (const auto& [form, g] : level) {
      for (int v = 0; v < g.n(); ++v) {
        Graph grown(g.n() + k - 1);
        for (const Edge& e : g.edges()) grown.add_edge(e.u, e.v);
        std::vector<int> block{v};
        for (int i = 0; i < k - 1; ++i) block.push_back(g.n() + i);
        for (std::size_t a = 0; a < block.size(); ++a)
          for (std::size_t b = a + 1; b < block.size(); ++b) grown.add_edge(block[a], block[b]);
        next.emplace(canonical_form(grown), std::move(grown));
        if (next.size() > cap)
          throw Error(Errc::cap_exceeded, "enumeration exceeded cap of " + std::to_string(cap) +
                                              " classes (" + std::to_string(next.size()) +
                                              " found before stopping)");
      }
    }
    level = std::move(next);
  }

  std::vector<Graph> out;
  out.reserve(level.size());
  for (auto& [form, g] : level) out.push_back(std::move(g));
  return out;
}

}  // namespace kcover::extremal
