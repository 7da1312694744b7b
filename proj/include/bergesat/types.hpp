#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace bergesat {

/// Vertices are dense ids in [0, n).
using Vertex = std::uint32_t;

/// Sorted, duplicate-free list of vertices. Hyperedges and core sets use it.
using VertexSet = std::vector<Vertex>;

/// Raised when an exhaustive routine is asked to work above its size cap.
class CapExceeded : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Sorts and deduplicates in place; returns false if duplicates were found.
bool canonicalize(VertexSet& set);

bool is_subset(const VertexSet& small, const VertexSet& big);

bool contains_vertex(const VertexSet& set, Vertex v);

/// "{0,1,2}"
std::string format_vertex_set(const VertexSet& set);

}  // namespace bergesat
