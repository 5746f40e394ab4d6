#include "normgraph/io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace normgraph {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

[[noreturn]] void malformed6(const std::string& why) { throw GraphError(ErrorCode::kMalformedGraph6, why); }

}  // namespace

Graph parse_graph6(std::string_view text) {
  text = trim(text);
  constexpr std::string_view kHeader = ">>graph6<<";
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  if (text.empty()) malformed6("empty string");
  for (char ch : text) {
    if (ch < 63 || ch > 126) malformed6("byte outside 63..126");
  }
  std::size_t pos = 0;
  int n = 0;
  if (text[0] != 126) {
    n = text[0] - 63;
    pos = 1;
  } else {
    if (text.size() < 4 || text[1] == 126) malformed6("unsupported or truncated order header");
    n = ((text[1] - 63) << 12) | ((text[2] - 63) << 6) | (text[3] - 63);
    pos = 4;
  }
  if (n > kMaxOrder) malformed6("order " + std::to_string(n) + " above " + std::to_string(kMaxOrder));
  const std::size_t bits = static_cast<std::size_t>(n) * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() - pos != bytes) {
    malformed6("expected " + std::to_string(bytes) + " data bytes, found " + std::to_string(text.size() - pos));
  }
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = text[pos + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) edges.push_back({i, j});
    }
  }
  return Graph::from_edges(n, edges);
}

std::string emit_graph6(const Graph& g) {
  if (!g.is_simple()) throw GraphError(ErrorCode::kNotSimple, "graph6 encodes simple graphs only");
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(126);
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

std::vector<Graph> parse_graph6_lines(std::string_view text) {
  std::vector<Graph> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = trim(text.substr(start, end - start));
    if (!line.empty() && line.front() != '#') out.push_back(parse_graph6(line));
    start = end + 1;
  }
  return out;
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  long long n = -1;
  long long m = -1;
  if (!(in >> n >> m) || n < 0 || m < 0) {
    throw GraphError(ErrorCode::kMalformedEdgeList, "first line must be \"n m\" with non-negative counts");
  }
  std::vector<Edge> edges;
  for (long long i = 0; i < m; ++i) {
    long long u = 0;
    long long v = 0;
    if (!(in >> u >> v)) {
      throw GraphError(ErrorCode::kMalformedEdgeList, "expected " + std::to_string(m) + " edge lines, got " +
                                                          std::to_string(i));
    }
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw GraphError(ErrorCode::kMalformedEdgeList,
                       "endpoint out of range in edge " + std::to_string(u) + " " + std::to_string(v));
    }
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  std::string rest;
  if (in >> rest) throw GraphError(ErrorCode::kMalformedEdgeList, "trailing data after " + std::to_string(m) + " edges");
  try {
    return Graph::from_edges(static_cast<int>(n), edges);
  } catch (const GraphError& e) {
    throw GraphError(ErrorCode::kMalformedEdgeList, e.what());
  }
}

std::string emit_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
  for (const Edge& e : g.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

std::string emit_dot(const Graph& g, const DotAnnotations& annotations) {
  std::vector<std::string> vclass(g.order());
  if (annotations.vertices) {
    const auto& c = *annotations.vertices;
    for (Vertex v : c.boundary) vclass[v] = "boundary";
    for (Vertex v : c.inside) vclass[v] = "inside";
    for (Vertex v : c.cut_points) vclass[v] = "cut";
    for (Vertex v : c.other) vclass[v] = "other";
  }
  auto listed = [](const std::vector<Edge>& list, const Edge& e) {
    return std::find(list.begin(), list.end(), e) != list.end();
  };

  std::ostringstream out;
  out << "graph G {\n";
  for (Vertex v = 0; v < g.order(); ++v) {
    out << "  " << v;
    if (vclass[v] == "inside") {
      out << " [class=\"inside\", style=filled, fillcolor=black, fontcolor=white]";
    } else if (vclass[v] == "boundary") {
      out << " [class=\"boundary\"]";
    } else if (vclass[v] == "cut") {
      out << " [class=\"cut\", shape=box]";
    } else if (!vclass[v].empty()) {
      out << " [class=\"" << vclass[v] << "\"]";
    }
    out << ";\n";
  }
  for (const Edge& e : g.edges()) {
    out << "  " << e.u << " -- " << e.v;
    if (listed(annotations.deleted, e)) {
      out << " [deleted=true, style=dashed]";
    } else if (listed(annotations.forced, e)) {
      out << " [forced=true, penwidth=3]";
    }
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace normgraph
