#include "bergesat/matching.hpp"

#include <limits>
#include <queue>

namespace bergesat {
namespace {

class HopcroftKarp {
 public:
  HopcroftKarp(const std::vector<std::vector<int>>& adjacency, int right_count)
      : adj_(adjacency),
        match_left_(adjacency.size(), kUnmatched),
        match_right_(static_cast<std::size_t>(right_count), kUnmatched),
        layer_(adjacency.size()),
        next_(adjacency.size()) {}

  std::vector<int> run() {
    while (build_layers()) {
      std::fill(next_.begin(), next_.end(), 0);
      for (std::size_t l = 0; l < adj_.size(); ++l) {
        if (match_left_[l] == kUnmatched) augment(static_cast<int>(l));
      }
    }
    return std::move(match_left_);
  }

 private:
  static constexpr int kInf = std::numeric_limits<int>::max();

  // BFS from free left vertices over alternating paths; true if some free
  // right vertex is reachable.
  bool build_layers() {
    std::queue<int> queue;
    for (std::size_t l = 0; l < adj_.size(); ++l) {
      if (match_left_[l] == kUnmatched) {
        layer_[l] = 0;
        queue.push(static_cast<int>(l));
      } else {
        layer_[l] = kInf;
      }
    }
    bool found = false;
    while (!queue.empty()) {
      const int l = queue.front();
      queue.pop();
      for (int r : adj_[l]) {
        const int partner = match_right_[r];
        if (partner == kUnmatched) {
          found = true;
        } else if (layer_[partner] == kInf) {
          layer_[partner] = layer_[l] + 1;
          queue.push(partner);
        }
      }
    }
    return found;
  }

  bool augment(int l) {
    for (int& i = next_[l]; i < static_cast<int>(adj_[l].size()); ++i) {
      const int r = adj_[l][i];
      const int partner = match_right_[r];
      if (partner == kUnmatched || (layer_[partner] == layer_[l] + 1 && augment(partner))) {
        match_left_[l] = r;
        match_right_[r] = l;
        ++i;
        return true;
      }
    }
    layer_[l] = kInf;
    return false;
  }

  const std::vector<std::vector<int>>& adj_;
  std::vector<int> match_left_;
  std::vector<int> match_right_;
  std::vector<int> layer_;
  std::vector<int> next_;
};

}  // namespace

std::vector<int> max_bipartite_matching(const std::vector<std::vector<int>>& adjacency, int right_count) {
  return HopcroftKarp(adjacency, right_count).run();
}

std::optional<std::vector<std::size_t>> edge_assignment(std::span<const GraphEdge> demands,
                                                        std::span<const VertexSet> supply) {
  std::vector<std::vector<int>> adjacency(demands.size());
  for (std::size_t i = 0; i < demands.size(); ++i) {
    const auto& [u, v] = demands[i];
    for (std::size_t s = 0; s < supply.size(); ++s) {
      if (contains_vertex(supply[s], u) && contains_vertex(supply[s], v)) {
        adjacency[i].push_back(static_cast<int>(s));
      }
    }
  }
  const auto match = max_bipartite_matching(adjacency, static_cast<int>(supply.size()));
  std::vector<std::size_t> assignment;
  assignment.reserve(match.size());
  for (int r : match) {
    if (r == kUnmatched) return std::nullopt;
    assignment.push_back(static_cast<std::size_t>(r));
  }
  return assignment;
}

}  // namespace bergesat
