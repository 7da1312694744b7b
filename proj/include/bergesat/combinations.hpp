#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "bergesat/types.hpp"

namespace bergesat {

/// Binomial coefficient C(n, k). Throws std::overflow_error if the value
/// does not fit in 64 bits.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// Advances `subset` (sorted, distinct, values < n) to the next k-subset in
/// lexicographic order. Returns false when `subset` was the last one.
bool next_combination(std::vector<Vertex>& subset, std::size_t n);

/// Lexicographic rank of a sorted k-subset of [0, n).
std::uint64_t rank_combination(std::span<const Vertex> subset, std::size_t n);

/// Inverse of rank_combination.
VertexSet unrank_combination(std::uint64_t rank, std::size_t n, std::size_t k);

}  // namespace bergesat
