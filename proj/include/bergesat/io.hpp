#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bergesat/graph.hpp"
#include "bergesat/hypergraph.hpp"

namespace bergesat {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Graph file: one edge per line, "u v" (single space). '#' lines are
// comments, blank lines are skipped. Isolated ids are dropped and the
// remaining ids renumbered ascending; `original_ids[new] = old`.
Graph parse_graph(std::istream& in, std::vector<Vertex>* original_ids = nullptr);
Graph parse_graph(std::string_view text, std::vector<Vertex>* original_ids = nullptr);

// Hypergraph file: one edge per line, ids separated by single spaces, at
// least two per line. An optional leading "n <count>" line fixes the vertex
// count; otherwise n = max id + 1.
Hypergraph parse_hypergraph(std::istream& in);
Hypergraph parse_hypergraph(std::string_view text);

/// Edges ascending, one per line.
std::string serialize_graph(const Graph& g);

/// "n <count>" header, then edges in canonical order (each ascending, edge
/// list sorted lexicographically).
std::string serialize_hypergraph(const Hypergraph& h);

/// Parses "1,2,3" into a sorted vertex set. Throws std::invalid_argument.
VertexSet parse_csv_vertices(std::string_view csv);

Graph read_graph_file(const std::string& path, std::vector<Vertex>* original_ids = nullptr);
Hypergraph read_hypergraph_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& contents);

}  // namespace bergesat
