#include "tds/graph_io.hpp"

#include <cctype>
#include <charconv>
#include <istream>
#include <set>
#include <sstream>

#include "tds/error.hpp"

namespace tds {

namespace {

constexpr int kBias = 63;

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

bool to_int(std::string_view token, int& out) {
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, out);
  return ec == std::errc{} && ptr == end;
}

Graph parse_graph6_at(std::string_view text, int line) {
  text = trim(text);
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  if (text.empty()) throw ParseError(line, "graph6: empty input");
  for (char c : text) {
    if (c < kBias || c > 126) throw ParseError(line, "graph6: byte outside [63, 126]");
  }
  std::size_t pos = 0;
  long n = 0;
  if (text[0] != 126) {
    n = text[0] - kBias;
    pos = 1;
  } else {
    if (text.size() >= 2 && text[1] == 126) throw ParseError(line, "graph6: order too large");
    if (text.size() < 4) throw ParseError(line, "graph6: truncated order header");
    n = ((text[1] - kBias) << 12) | ((text[2] - kBias) << 6) | (text[3] - kBias);
    pos = 4;
  }
  if (n > kMaxVertices) throw ParseError(line, "graph6: order " + std::to_string(n) + " exceeds 64");
  const long bits = n * (n - 1) / 2;
  const std::size_t expected = pos + static_cast<std::size_t>((bits + 5) / 6);
  if (text.size() != expected) {
    throw ParseError(line, "graph6: expected " + std::to_string(expected) + " bytes, got " +
                            std::to_string(text.size()));
  }
  std::vector<Edge> edges;
  long k = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++k) {
      const int byte = text[pos + static_cast<std::size_t>(k / 6)] - kBias;
      if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(u, v);
    }
  }
  return Graph(static_cast<int>(n), edges);
}

}  // namespace

Graph parse_graph6(std::string_view text) { return parse_graph6_at(text, 1); }

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
    out.push_back(static_cast<char>((n & 63) + kBias));
  }
  int acc = 0;
  int filled = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  int n = -1;
  std::vector<Edge> edges;
  std::set<Edge> seen;
  while (std::getline(in, line)) {
    ++line_no;
    const auto t = tokens(line);
    if (t.empty() || t[0].starts_with("#")) continue;
    if (n < 0) {
      if (t.size() != 2 || t[0] != "n" || !to_int(t[1], n) || n < 0) {
        throw ParseError(line_no, "expected header 'n <count>'");
      }
      if (n > kMaxVertices) throw ParseError(line_no, "order exceeds 64");
      continue;
    }
    int u = 0;
    int v = 0;
    if (t.size() != 2 || !to_int(t[0], u) || !to_int(t[1], v)) {
      throw ParseError(line_no, "expected 'u v'");
    }
    if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError(line_no, "vertex id out of range");
    if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
    if (!seen.insert(Edge(u, v)).second) throw ParseError(line_no, "duplicate edge");
    edges.emplace_back(u, v);
  }
  if (n < 0) throw ParseError(line_no == 0 ? 1 : line_no, "missing header 'n <count>'");
  return Graph(n, edges);
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "n " << g.order() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

GraphFormat detect_format(std::string_view text) {
  const auto t = trim(text);
  if (t.starts_with("n ") || t.starts_with("n\t") || t.starts_with("#")) return GraphFormat::edge_list;
  return GraphFormat::graph6;
}

Graph parse_graph(std::string_view text, GraphFormat format) {
  return format == GraphFormat::graph6 ? parse_graph6(text) : parse_edge_list(text);
}

std::string serialize(const Graph& g, GraphFormat format) {
  return format == GraphFormat::graph6 ? to_graph6(g) + "\n" : to_edge_list(g);
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    out.push_back(parse_graph6_at(line, line_no));
  }
  return out;
}

std::string format_sequence(const std::vector<int>& sequence) {
  std::string out;
  for (std::size_t i = 0; i < sequence.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(sequence[i]);
  }
  return out;
}

std::vector<int> parse_sequence(std::string_view line) {
  std::vector<int> out;
  for (auto t : tokens(line)) {
    int v = 0;
    if (!to_int(t, v)) throw ParseError(1, "sequence: expected integer, got '" + std::string(t) + "'");
    out.push_back(v);
  }
  return out;
}

}  // namespace tds
