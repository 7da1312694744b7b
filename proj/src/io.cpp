#include "bergesat/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <sstream>

namespace bergesat {
namespace {

// Splits on single spaces; rejects empty tokens (double spaces, leading or
// trailing blanks) and anything that is not a decimal id.
std::vector<Vertex> parse_ids(std::string_view line, std::size_t line_no) {
  std::vector<Vertex> ids;
  std::size_t pos = 0;
  while (true) {
    std::size_t next = line.find(' ', pos);
    std::string_view token = line.substr(pos, next == std::string_view::npos ? line.npos : next - pos);
    if (token.empty()) throw ParseError(line_no, "malformed line (expected ids separated by single spaces)");
    Vertex value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw ParseError(line_no, "malformed vertex id '" + std::string(token) + "'");
    }
    ids.push_back(value);
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return ids;
}

bool skip_line(std::string_view line) { return line.empty() || line.front() == '#'; }

std::string_view strip_cr(const std::string& line) {
  std::string_view view(line);
  if (!view.empty() && view.back() == '\r') view.remove_suffix(1);
  return view;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

Graph parse_graph(std::istream& in, std::vector<Vertex>* original_ids) {
  std::vector<GraphEdge> edges;
  std::map<GraphEdge, std::size_t> seen;
  std::size_t line_no = 0;
  Vertex max_id = 0;
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = strip_cr(raw);
    if (skip_line(line)) continue;
    auto ids = parse_ids(line, line_no);
    if (ids.size() != 2) throw ParseError(line_no, "expected exactly two vertex ids");
    if (ids[0] == ids[1]) throw ParseError(line_no, "self-loop at vertex " + std::to_string(ids[0]));
    GraphEdge e{std::min(ids[0], ids[1]), std::max(ids[0], ids[1])};
    auto [it, inserted] = seen.emplace(e, line_no);
    if (!inserted) {
      throw ParseError(line_no, "duplicate edge (first seen on line " + std::to_string(it->second) + ")");
    }
    edges.push_back(e);
    max_id = std::max(max_id, e.second);
  }
  const std::size_t n = edges.empty() ? 0 : std::size_t{max_id} + 1;
  Graph raw_graph(n, std::move(edges));
  return raw_graph.normalized(original_ids);
}

Graph parse_graph(std::string_view text, std::vector<Vertex>* original_ids) {
  std::istringstream in{std::string(text)};
  return parse_graph(in, original_ids);
}

Hypergraph parse_hypergraph(std::istream& in) {
  std::optional<std::size_t> declared_n;
  std::vector<VertexSet> edges;
  std::vector<std::size_t> edge_lines;
  std::size_t line_no = 0;
  std::size_t max_id_plus_one = 0;
  bool seen_content = false;
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = strip_cr(raw);
    if (skip_line(line)) continue;
    if (line.starts_with("n ")) {
      if (seen_content) throw ParseError(line_no, "'n <count>' header must precede all edges");
      auto ids = parse_ids(line.substr(2), line_no);
      if (ids.size() != 1) throw ParseError(line_no, "malformed 'n <count>' header");
      declared_n = ids[0];
      seen_content = true;
      continue;
    }
    seen_content = true;
    VertexSet edge = parse_ids(line, line_no);
    if (edge.size() < 2) throw ParseError(line_no, "edge of size < 2");
    if (!canonicalize(edge)) throw ParseError(line_no, "edge repeats a vertex");
    max_id_plus_one = std::max<std::size_t>(max_id_plus_one, std::size_t{edge.back()} + 1);
    edges.push_back(std::move(edge));
    edge_lines.push_back(line_no);
  }
  const std::size_t n = declared_n.value_or(max_id_plus_one);
  if (max_id_plus_one > n) {
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (edges[i].back() >= n) throw ParseError(edge_lines[i], "vertex id exceeds declared n");
    }
  }
  std::unordered_map<VertexSet, std::size_t, VertexSetHash> first_line;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto [it, inserted] = first_line.emplace(edges[i], edge_lines[i]);
    if (!inserted) {
      throw ParseError(edge_lines[i],
                       "duplicate edge set (first seen on line " + std::to_string(it->second) + ")");
    }
  }
  return Hypergraph(n, std::move(edges));
}

Hypergraph parse_hypergraph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_hypergraph(in);
}

std::string serialize_graph(const Graph& g) {
  std::string out;
  for (const auto& [u, v] : g.edges()) {
    out += std::to_string(u) + ' ' + std::to_string(v) + '\n';
  }
  return out;
}

std::string serialize_hypergraph(const Hypergraph& h) {
  std::vector<VertexSet> edges = h.edges();
  std::sort(edges.begin(), edges.end());
  std::string out = "n " + std::to_string(h.vertex_count()) + '\n';
  for (const auto& e : edges) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i != 0) out += ' ';
      out += std::to_string(e[i]);
    }
    out += '\n';
  }
  return out;
}

VertexSet parse_csv_vertices(std::string_view csv) {
  VertexSet out;
  if (csv.empty()) return out;
  std::size_t pos = 0;
  while (true) {
    std::size_t next = csv.find(',', pos);
    std::string_view token = csv.substr(pos, next == std::string_view::npos ? csv.npos : next - pos);
    Vertex value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
      throw std::invalid_argument("malformed vertex list '" + std::string(csv) + "'");
    }
    out.push_back(value);
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  if (!canonicalize(out)) throw std::invalid_argument("vertex list repeats a vertex");
  return out;
}

Graph read_graph_file(const std::string& path, std::vector<Vertex>* original_ids) {
  return parse_graph(read_file(path), original_ids);
}

Hypergraph read_hypergraph_file(const std::string& path) { return parse_hypergraph(read_file(path)); }

void write_text_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << contents;
  if (!out) throw std::runtime_error("write failed for " + path);
}

}  // namespace bergesat
