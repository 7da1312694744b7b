#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bergesat/berge.hpp"

namespace bergesat {

/// Independent check of a witness against F and H: injective core map,
/// distinct hyperedges, containment, and the constraints (a required edge
/// must be an edge of H). Returns a description of the first problem found,
/// or nullopt if the witness is valid.
std::optional<std::string> witness_error(const Graph& f, const Hypergraph& h, const BergeWitness& w,
                                         const SearchConstraints& constraints = {});

inline bool is_valid_witness(const Graph& f, const Hypergraph& h, const BergeWitness& w,
                             const SearchConstraints& constraints = {}) {
  return !witness_error(f, h, w, constraints).has_value();
}

/// Text form:
///
///   core: 0->4 1->2 2->7
///   edge: {0,1} -> {2,4,5}
///   edge: {0,2} -> {4,6,7}
///
/// One `core:` line listing x->w for every pattern vertex in id order, then
/// one `edge:` line per pattern edge in the pattern's edge order. Pattern
/// vertices are printed through `pattern_labels` when it is non-empty.
std::string format_witness(const Graph& f, const Hypergraph& h, const BergeWitness& w,
                           const std::vector<Vertex>& pattern_labels = {});

}  // namespace bergesat
