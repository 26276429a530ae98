#include "kcover/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "kcover/error.hpp"

namespace kcover {
namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";
constexpr int kGraph6ShortMax = 62;

[[noreturn]] void parse_fail(std::size_t offset, const std::string& what) {
  throw Error(Errc::parse_error, what + " at byte " + std::to_string(offset), offset);
}

std::string_view trim_line_end(std::string_view s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace

Graph decode_graph6(std::string_view text) {
  std::size_t base = 0;
  if (text.starts_with(kGraph6Header)) base = kGraph6Header.size();
  const std::string_view body = trim_line_end(text.substr(base));
  if (body.empty()) parse_fail(base, "empty graph6 line");

  const auto byte = [&](std::size_t i) {
    const auto c = static_cast<unsigned char>(body[i]);
    if (c < 63 || c > 126) parse_fail(base + i, "byte outside graph6 range 63..126");
    return static_cast<int>(c) - 63;
  };

  const int n = byte(0);
  if (n == 63) parse_fail(base, "graph6 long form (n > 62) is not supported");
  const std::size_t pairs = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
  const std::size_t needed = (pairs + 5) / 6;
  if (body.size() - 1 < needed)
    parse_fail(base + body.size(), "truncated graph6 bit stream (need " +
                                       std::to_string(needed) + " data bytes)");
  if (body.size() - 1 > needed) parse_fail(base + 1 + needed, "trailing bytes after graph6 data");

  Graph g(n);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int chunk = byte(1 + k / 6);
      if ((chunk >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  for (std::size_t i = 1; i < body.size(); ++i) byte(i);
  return g;
}

std::string encode_graph6(const Graph& g) {
  if (g.n() > kGraph6ShortMax)
    throw Error(Errc::unsupported_size, "graph6 short form holds at most 62 vertices");
  std::string out(1, static_cast<char>(g.n() + 63));
  int chunk = 0;
  int filled = 0;
  for (int j = 1; j < g.n(); ++j) {
    for (int i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(chunk + 63));
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + 63));
  return out;
}

Graph parse_edge_list(std::string_view text) {
  struct Pending {
    int u, v;
    std::size_t offset;
  };
  std::vector<Pending> pending;
  int declared = -1;
  int max_index = -1;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    // Tokenize on whitespace, remembering offsets.
    std::vector<std::pair<std::string_view, std::size_t>> tokens;
    for (std::size_t i = 0; i < line.size();) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      const std::size_t start = i;
      while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      if (i > start) tokens.emplace_back(line.substr(start, i - start), pos + start);
    }

    const auto number = [&](const std::pair<std::string_view, std::size_t>& tok) {
      int value = 0;
      const auto* first = tok.first.data();
      const auto* last = first + tok.first.size();
      const auto [ptr, ec] = std::from_chars(first, last, value);
      if (ec != std::errc{} || ptr != last || value < 0)
        parse_fail(tok.second, "expected a non-negative vertex index, got '" +
                                   std::string(tok.first) + "'");
      return value;
    };

    if (!tokens.empty()) {
      if (tokens[0].first == "n") {
        if (declared >= 0 || !pending.empty()) parse_fail(tokens[0].second, "header 'n' must come first");
        if (tokens.size() != 2) parse_fail(tokens[0].second, "header must be 'n <count>'");
        declared = number(tokens[1]);
        if (declared > Graph::kMaxVertices)
          parse_fail(tokens[1].second, "vertex count exceeds " + std::to_string(Graph::kMaxVertices));
      } else {
        if (tokens.size() != 2) parse_fail(tokens[0].second, "expected 'u v'");
        const int u = number(tokens[0]);
        const int v = number(tokens[1]);
        if (u == v) parse_fail(tokens[0].second, "self-loop");
        if (std::max(u, v) >= Graph::kMaxVertices)
          parse_fail(tokens[0].second, "vertex index exceeds " + std::to_string(Graph::kMaxVertices - 1));
        if (declared >= 0 && std::max(u, v) >= declared)
          parse_fail(tokens[0].second, "vertex index not below declared n");
        pending.push_back({u, v, tokens[0].second});
        max_index = std::max({max_index, u, v});
      }
    }
    pos = end + 1;
  }

  Graph g(declared >= 0 ? declared : max_index + 1);
  for (const Pending& p : pending) g.add_edge(p.u, p.v);
  return g;
}

std::string format_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "n " << g.n() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

std::string to_dot(const Graph& g, std::string_view name) {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (int v = 0; v < g.n(); ++v)
    if (g.degree(v) == 0) out << "  " << v << ";\n";
  for (const Edge& e : g.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
  out << "}\n";
  return out.str();
}

std::vector<Graph> parse_graphs(std::string_view text, GraphFormat format) {
  if (format == GraphFormat::automatic) {
    format = GraphFormat::graph6;
    // graph6 bytes never include digits, whitespace inside a line, or '#'.
    for (std::size_t pos = 0; pos < text.size();) {
      std::size_t end = text.find('\n', pos);
      if (end == std::string_view::npos) end = text.size();
      const std::string_view line = trim_line_end(text.substr(pos, end - pos));
      if (!line.empty()) {
        const bool edgeish = std::isdigit(static_cast<unsigned char>(line[0])) || line[0] == '#' ||
                             line.find_first_of(" \t") != std::string_view::npos;
        if (edgeish) format = GraphFormat::edge_list;
        break;
      }
      pos = end + 1;
    }
  }

  if (format == GraphFormat::edge_list) return {parse_edge_list(text)};

  std::vector<Graph> out;
  for (std::size_t pos = 0; pos < text.size();) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = trim_line_end(text.substr(pos, end - pos));
    if (!line.empty() && line != kGraph6Header) {
      try {
        out.push_back(decode_graph6(line));
      } catch (const Error& e) {
        const std::size_t at = pos + e.offset().value_or(0);
        throw Error(Errc::parse_error,
                    std::string(e.what()).substr(0, std::string(e.what()).rfind(" at byte")) +
                        " at byte " + std::to_string(at),
                    at);
      }
    }
    pos = end + 1;
  }
  return out;
}

GraphFormat format_for_path(std::string_view path) {
  const auto dot = path.rfind('.');
  if (dot == std::string_view::npos) return GraphFormat::automatic;
  const std::string_view ext = path.substr(dot + 1);
  if (ext == "g6" || ext == "graph6") return GraphFormat::graph6;
  if (ext == "txt" || ext == "el" || ext == "edges" || ext == "edgelist") return GraphFormat::edge_list;
  return GraphFormat::automatic;
}

}  // namespace kcover
