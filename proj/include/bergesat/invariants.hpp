#pragma once

#include <cstddef>
#include <optional>

#include "bergesat/graph.hpp"

namespace bergesat {

// Exact invariants of small pattern graphs. All routines are exhaustive and
// throw CapExceeded above their documented vertex caps.

inline constexpr std::size_t kIndependenceCap = 32;
inline constexpr std::size_t kGirthCap = 32;
inline constexpr std::size_t kFeedbackCap = 24;

/// alpha(F) by branch and bound over vertex bitmasks. |V| <= 32.
std::size_t independence_number(const Graph& g);

/// beta(F) by branching on uncovered edges. Computed independently of
/// independence_number so the two can cross-check each other. |V| <= 32.
std::size_t vertex_cover_number(const Graph& g);

/// Length of a shortest cycle, or nullopt for a forest. |V| <= 32.
std::optional<std::size_t> girth(const Graph& g);

bool is_acyclic(const Graph& g);

struct FeedbackSet {
  std::size_t size = 0;
  VertexSet vertices;  // lexicographically least minimum feedback set
};

/// Minimum vertex feedback set by increasing-size subset search. |V| <= 24.
FeedbackSet feedback_number(const Graph& g);

/// Throws std::invalid_argument on a graph without vertices.
std::size_t min_degree(const Graph& g);

struct InvariantReport {
  std::size_t alpha = 0;
  std::size_t beta = 0;
  std::size_t delta = 0;
  std::optional<std::size_t> girth;  // nullopt = acyclic
  FeedbackSet feedback;
};

InvariantReport compute_invariants(const Graph& g);

// Generators. Parameters below the stated minimum throw std::invalid_argument.
Graph make_clique(std::size_t ell);       // K_ell, ell >= 2
Graph make_star(std::size_t ell);         // K_{1,ell}, centre 0, ell >= 2
Graph make_cycle(std::size_t ell);        // C_ell, ell >= 3
Graph make_path(std::size_t vertices);    // P_vertices, vertices >= 2
Graph make_empty(std::size_t vertices);   // edgeless graph

/// F ∨ G: F on [0, |V(F)|), G shifted after it, plus every F-G pair.
Graph complete_join(const Graph& f, const Graph& g);

}  // namespace bergesat
