#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "bergesat/graph.hpp"
#include "bergesat/types.hpp"

namespace bergesat {

inline constexpr int kUnmatched = -1;

/// Maximum bipartite matching by Hopcroft-Karp, O(E sqrt(V)).
/// `adjacency[l]` lists the right vertices (in [0, right_count)) that left
/// vertex l may take. Returns the partner of every left vertex, or
/// kUnmatched. Adjacency order is respected, so results are deterministic.
std::vector<int> max_bipartite_matching(const std::vector<std::vector<int>>& adjacency, int right_count);

/// Injective assignment of each demand pair to a supply set containing it.
/// Entry i is an index into `supply`. nullopt iff no such assignment exists.
std::optional<std::vector<std::size_t>> edge_assignment(std::span<const GraphEdge> demands,
                                                        std::span<const VertexSet> supply);

}  // namespace bergesat
