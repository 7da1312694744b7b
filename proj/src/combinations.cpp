#include "bergesat/combinations.hpp"

#include <algorithm>
#include <stdexcept>

namespace bergesat {

bool canonicalize(VertexSet& set) {
  std::sort(set.begin(), set.end());
  auto last = std::unique(set.begin(), set.end());
  bool had_duplicates = last != set.end();
  set.erase(last, set.end());
  return !had_duplicates;
}

bool is_subset(const VertexSet& small, const VertexSet& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

bool contains_vertex(const VertexSet& set, Vertex v) {
  return std::binary_search(set.begin(), set.end(), v);
}

std::string format_vertex_set(const VertexSet& set) {
  std::string out = "{";
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(set[i]);
  }
  out += '}';
  return out;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // result * (n - k + i) / i stays integral at every step.
    result = result * (n - k + i) / i;
    if (result > UINT64_MAX) throw std::overflow_error("binomial coefficient overflows 64 bits");
  }
  return static_cast<std::uint64_t>(result);
}

bool next_combination(std::vector<Vertex>& subset, std::size_t n) {
  const std::size_t k = subset.size();
  if (k == 0) return false;
  std::size_t i = k;
  while (i > 0) {
    --i;
    if (subset[i] < n - k + i) {
      ++subset[i];
      for (std::size_t j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::uint64_t rank_combination(std::span<const Vertex> subset, std::size_t n) {
  const std::size_t k = subset.size();
  std::uint64_t rank = 0;
  Vertex lo = 0;
  for (std::size_t i = 0; i < k; ++i) {
    // Count subsets whose i-th element is smaller than subset[i].
    for (Vertex v = lo; v < subset[i]; ++v) rank += binomial(n - v - 1, k - i - 1);
    lo = subset[i] + 1;
  }
  return rank;
}

VertexSet unrank_combination(std::uint64_t rank, std::size_t n, std::size_t k) {
  if (k > n || rank >= binomial(n, k)) throw std::out_of_range("combination rank out of range");
  VertexSet subset;
  subset.reserve(k);
  Vertex v = 0;
  for (std::size_t i = 0; i < k; ++i) {
    while (true) {
      const std::uint64_t block = binomial(n - v - 1, k - i - 1);
      if (rank < block) break;
      rank -= block;
      ++v;
    }
    subset.push_back(v);
    ++v;
  }
  return subset;
}

}  // namespace bergesat
