#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "bergesat/graph.hpp"
#include "bergesat/hypergraph.hpp"

namespace bergesat {

// Slow reference algorithms. They share no search code with the Berge
// engine so the two can be cross-checked.

inline constexpr std::size_t kOraclePatternEdgeCap = 6;
inline constexpr std::size_t kOracleHostEdgeCap = 8;

/// Exhaustive Berge containment: every injection V(F) -> V(H), and for each
/// every injective E(F) -> E(H) built edge by edge with a containment test.
/// If `required_edge` is an edge id of H, only maps using it count.
/// Caps: |E(F)| <= 6, |E(H)| <= 8.
bool berge_oracle(const Graph& f, const Hypergraph& h, std::optional<std::size_t> required_edge = {});

struct GreedyOrder {
  enum class Kind { lexicographic, reverse_lexicographic, shuffled };
  Kind kind = Kind::lexicographic;
  std::uint64_t seed = 0;  // shuffled only
};

/// Adds missing k-edges in the given order whenever H stays Berge-F-free.
/// One pass suffices: an edge rejected earlier still creates a Berge-F in
/// every later supergraph. The result is re-verified in full mode; a failed
/// verification throws std::logic_error. Throws std::invalid_argument if H
/// is not Berge-F-free or not k-uniform.
Hypergraph greedy_saturate(const Hypergraph& h, const Graph& f, std::size_t k, GreedyOrder order = {});

struct MinSatOptions {
  /// Skip edge subsets that are not the lexicographically least member of
  /// their orbit under vertex permutations (n <= 8).
  bool isomorph_reject = false;
};

struct SearchResult {
  std::size_t m_star = 0;
  Hypergraph witness;
  std::uint64_t examined = 0;  // edge subsets tested for saturation
};

inline constexpr std::uint64_t kMinSatEdgeCap = 25;  // C(n,k)
inline constexpr std::size_t kMinSatMaxM = 6;
inline constexpr std::size_t kIsomorphRejectVertexCap = 8;

/// Smallest m <= m_max such that some m-edge k-uniform hypergraph on n
/// vertices is Berge-F-saturated, with the lexicographically least such edge
/// subset (edges indexed in lexicographic order). nullopt if none exists.
/// Caps: C(n,k) <= 25, m_max <= 6.
std::optional<SearchResult> min_saturation_search(std::size_t n, std::size_t k, const Graph& f, std::size_t m_max,
                                                  const MinSatOptions& options = {});

}  // namespace bergesat
