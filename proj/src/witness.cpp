#include "bergesat/witness.hpp"

#include <algorithm>

namespace bergesat {

std::optional<std::string> witness_error(const Graph& f, const Hypergraph& h, const BergeWitness& w,
                                         const SearchConstraints& constraints) {
  if (w.core_map.size() != f.vertex_count()) return "core map has wrong size";
  if (w.edge_map.size() != f.edge_count()) return "edge map has wrong size";
  std::vector<Vertex> images = w.core_map;
  std::sort(images.begin(), images.end());
  if (std::adjacent_find(images.begin(), images.end()) != images.end()) return "core map is not injective";
  if (!images.empty() && images.back() >= h.vertex_count()) return "core vertex out of range";

  std::vector<std::size_t> used = w.edge_map;
  std::sort(used.begin(), used.end());
  if (std::adjacent_find(used.begin(), used.end()) != used.end()) return "edge map reuses a hyperedge";
  if (!used.empty() && used.back() >= h.edge_count()) return "edge map refers to a missing hyperedge";

  for (std::size_t i = 0; i < f.edge_count(); ++i) {
    const auto [x, y] = f.edge(i);
    const VertexSet& target = h.edge(w.edge_map[i]);
    if (std::find(target.begin(), target.end(), w.core_map[x]) == target.end() ||
        std::find(target.begin(), target.end(), w.core_map[y]) == target.end()) {
      return "hyperedge for pattern edge {" + std::to_string(x) + "," + std::to_string(y) +
             "} does not contain both core images";
    }
  }

  for (Vertex v : constraints.required_core) {
    if (std::find(images.begin(), images.end(), v) == images.end()) {
      return "required core vertex " + std::to_string(v) + " unused";
    }
  }
  for (Vertex v : constraints.forbidden_core) {
    if (std::find(images.begin(), images.end(), v) != images.end()) {
      return "forbidden core vertex " + std::to_string(v) + " used";
    }
  }
  if (constraints.required_edge) {
    VertexSet wanted = *constraints.required_edge;
    std::sort(wanted.begin(), wanted.end());
    const bool hit = std::any_of(w.edge_map.begin(), w.edge_map.end(),
                                 [&](std::size_t id) { return h.edge(id) == wanted; });
    if (!hit) return "required edge " + format_vertex_set(wanted) + " unused";
  }
  return std::nullopt;
}

std::string format_witness(const Graph& f, const Hypergraph& h, const BergeWitness& w,
                           const std::vector<Vertex>& pattern_labels) {
  auto label = [&](Vertex x) {
    return std::to_string(pattern_labels.empty() ? x : pattern_labels[x]);
  };
  std::string out = "core:";
  for (Vertex x = 0; x < w.core_map.size(); ++x) {
    out += ' ' + label(x) + "->" + std::to_string(w.core_map[x]);
  }
  out += '\n';
  for (std::size_t i = 0; i < f.edge_count(); ++i) {
    const auto [x, y] = f.edge(i);
    out += "edge: {" + label(x) + ',' + label(y) + "} -> " + format_vertex_set(h.edge(w.edge_map[i])) + '\n';
  }
  return out;
}

}  // namespace bergesat
