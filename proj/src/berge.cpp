#include "bergesat/berge.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "bergesat/combinations.hpp"
#include "bergesat/invariants.hpp"
#include "bergesat/matching.hpp"

namespace bergesat {

// One search invocation: host view (H plus an optional appended edge),
// constraints, and the mutable backtracking state.
class SearchRun {
 public:
  SearchRun(const BergeSearcher& s, const SearchConstraints& c, const VertexSet* extra,
            std::optional<std::size_t> forced)
      : s_(s), h_(s.h_), f_(s.f_), c_(c), extra_(extra), extra_id_(s.h_.edge_count()), forced_(forced) {
    if (forced_) forced_set_ = *forced_ == extra_id_ ? extra_ : &h_.edge(*forced_);
  }

  std::optional<BergeWitness> run() {
    const std::size_t pattern_n = f_.vertex_count();
    if (pattern_n > h_.vertex_count()) return std::nullopt;
    if (c_.required_core.size() > pattern_n) return std::nullopt;
    for (Vertex v : c_.required_core) {
      if (v >= h_.vertex_count() || contains_vertex(c_.forbidden_core, v)) return std::nullopt;
    }
    if (forced_ && f_.edge_count() == 0) return std::nullopt;

    build_candidates();
    core_.assign(pattern_n, kNone);
    used_.assign(h_.vertex_count(), 0);
    bool found = s_.complete_pattern_ ? search_clique() : search_general();
    if (!found) return std::nullopt;
    return std::move(result_);
  }

 private:
  static constexpr Vertex kNone = static_cast<Vertex>(-1);

  bool in_extra(Vertex v) const { return extra_ && contains_vertex(*extra_, v); }
  bool in_forced(Vertex v) const { return forced_set_ && contains_vertex(*forced_set_, v); }
  std::size_t effective_degree(Vertex v) const { return h_.degree(v) + (in_extra(v) ? 1 : 0); }
  bool required(Vertex v) const { return contains_vertex(c_.required_core, v); }

  // Host vertices usable as core (not forbidden, degree >= min pattern
  // degree), sorted by effective degree descending then id.
  void build_candidates() {
    std::size_t min_needed = SIZE_MAX;
    for (Vertex x = 0; x < f_.vertex_count(); ++x) min_needed = std::min(min_needed, f_.degree(x));
    if (min_needed == SIZE_MAX) min_needed = 0;
    const std::size_t base_floor = min_needed == 0 ? 0 : min_needed - 1;
    for (Vertex w : s_.by_degree_) {
      const std::size_t d = h_.degree(w);
      if (d < base_floor) break;
      if (d + (in_extra(w) ? 1 : 0) < min_needed) continue;
      if (contains_vertex(c_.forbidden_core, w)) continue;
      candidates_.push_back(w);
    }
    std::stable_sort(candidates_.begin(), candidates_.end(), [this](Vertex a, Vertex b) {
      const std::size_t da = effective_degree(a);
      const std::size_t db = effective_degree(b);
      return da != db ? da > db : a < b;
    });
  }

  // Collects up to `cap` hyperedges of H + extra containing both u and v.
  // Any `cap` = (number of demands) options suffice for an exact Hall test:
  // a demand with that many options can always be served last.
  void supply(Vertex u, Vertex v, std::size_t cap, std::vector<int>& out) const {
    const std::uint64_t* row_u = &s_.bits_[std::size_t{u} * s_.words_];
    const std::uint64_t* row_v = &s_.bits_[std::size_t{v} * s_.words_];
    for (std::size_t w = 0; w < s_.words_ && out.size() < cap; ++w) {
      std::uint64_t both = row_u[w] & row_v[w];
      while (both != 0 && out.size() < cap) {
        const int bit = std::countr_zero(both);
        both &= both - 1;
        out.push_back(static_cast<int>(w * 64 + static_cast<std::size_t>(bit)));
      }
    }
    if (out.size() < cap && extra_ && in_extra(u) && in_extra(v)) out.push_back(static_cast<int>(extra_id_));
  }

  // Perfect matching of `demands_` into host edges, or false.
  bool match_demands(std::vector<std::size_t>* assignment) {
    const std::size_t d = demands_.size();
    adjacency_.resize(d);
    right_ids_.clear();
    for (std::size_t i = 0; i < d; ++i) {
      adjacency_[i].clear();
      supply(demands_[i].first, demands_[i].second, d, adjacency_[i]);
      if (adjacency_[i].empty()) return false;
      right_ids_.insert(right_ids_.end(), adjacency_[i].begin(), adjacency_[i].end());
    }
    std::sort(right_ids_.begin(), right_ids_.end());
    right_ids_.erase(std::unique(right_ids_.begin(), right_ids_.end()), right_ids_.end());
    if (right_ids_.size() < d) return false;
    for (auto& list : adjacency_) {
      for (int& r : list) {
        r = static_cast<int>(std::lower_bound(right_ids_.begin(), right_ids_.end(), r) - right_ids_.begin());
      }
    }
    const auto match = max_bipartite_matching(adjacency_, static_cast<int>(right_ids_.size()));
    for (int r : match) {
      if (r == kUnmatched) return false;
    }
    if (assignment) {
      assignment->resize(d);
      for (std::size_t i = 0; i < d; ++i) assignment->at(i) = static_cast<std::size_t>(right_ids_[match[i]]);
    }
    return true;
  }

  // With a perfect matching in H + extra and some demand inside the forced
  // edge, moving that demand onto the forced edge keeps the map injective.
  void route_through_forced(std::vector<std::size_t>& assignment) const {
    if (!forced_) return;
    if (std::find(assignment.begin(), assignment.end(), *forced_) != assignment.end()) return;
    for (std::size_t i = 0; i < demands_.size(); ++i) {
      if (in_forced(demands_[i].first) && in_forced(demands_[i].second)) {
        assignment[i] = *forced_;
        return;
      }
    }
  }

  // ---- complete patterns: cores as m-subsets of the candidates ----

  bool search_clique() {
    const std::size_t m = f_.vertex_count();
    for (Vertex v : c_.required_core) {
      if (std::find(candidates_.begin(), candidates_.end(), v) == candidates_.end()) return false;
    }
    forced_suffix_.assign(candidates_.size() + 1, 0);
    for (std::size_t i = candidates_.size(); i-- > 0;) {
      forced_suffix_[i] = forced_suffix_[i + 1] + (in_forced(candidates_[i]) ? 1 : 0);
    }
    chosen_.clear();
    demands_.clear();
    return extend_clique(0, m, 0, c_.required_core.size());
  }

  bool extend_clique(std::size_t pos, std::size_t m, std::size_t forced_count, std::size_t required_left) {
    if (chosen_.size() == m) return finish_clique();
    for (std::size_t i = pos; i < candidates_.size(); ++i) {
      const std::size_t slots = m - chosen_.size();
      if (candidates_.size() - i < slots) break;
      if (forced_ && forced_count + std::min(forced_suffix_[i], slots) < 2) break;
      const Vertex w = candidates_[i];
      const bool is_required = required(w);
      if (!is_required && slots <= required_left) {
        // Every remaining slot is owed to a required vertex.
        continue;
      }
      const std::size_t before = demands_.size();
      for (Vertex u : chosen_) demands_.emplace_back(u, w);
      chosen_.push_back(w);
      if (match_demands(nullptr) &&
          extend_clique(i + 1, m, forced_count + (in_forced(w) ? 1 : 0), required_left - (is_required ? 1 : 0))) {
        return true;
      }
      chosen_.pop_back();
      demands_.resize(before);
      if (is_required) break;  // skipping a required vertex can never succeed
    }
    return false;
  }

  bool finish_clique() {
    std::vector<std::size_t> assignment;
    if (!match_demands(&assignment)) return false;
    route_through_forced(assignment);
    if (forced_ && std::find(assignment.begin(), assignment.end(), *forced_) == assignment.end()) return false;
    // Demand for core positions (i, j), i < j, was pushed at index j(j-1)/2 + i.
    result_.core_map = chosen_;
    result_.edge_map.resize(f_.edge_count());
    for (std::size_t e = 0; e < f_.edge_count(); ++e) {
      const auto [i, j] = f_.edge(e);
      result_.edge_map[e] = assignment[std::size_t{j} * (j - 1) / 2 + i];
    }
    return true;
  }

  // ---- general patterns: ordered injections ----

  bool search_general() {
    std::size_t required_left = c_.required_core.size();
    if (!forced_) return extend_general(0, required_left);
    // Seed the pattern edge that lands on the forced hyperedge.
    const VertexSet& target = *forced_set_;
    for (std::size_t e = 0; e < f_.edge_count(); ++e) {
      const auto [a, b] = f_.edge(e);
      for (Vertex wa : target) {
        if (!candidate_for(a, wa)) continue;
        for (Vertex wb : target) {
          if (wb == wa || !candidate_for(b, wb)) continue;
          place(a, wa);
          place(b, wb);
          const std::size_t left = required_left - (required(wa) ? 1 : 0) - (required(wb) ? 1 : 0);
          if (f_.vertex_count() - 2 >= left && match_demands(nullptr) && extend_general(0, left)) return true;
          unplace(b);
          unplace(a);
        }
      }
    }
    return false;
  }

  bool candidate_for(Vertex x, Vertex w) const {
    return !used_[w] && !contains_vertex(c_.forbidden_core, w) && effective_degree(w) >= f_.degree(x);
  }

  void place(Vertex x, Vertex w) {
    core_[x] = w;
    used_[w] = 1;
    ++placed_;
    for (Vertex y : f_.neighbors(x)) {
      if (core_[y] != kNone && y != x) demands_.emplace_back(w, core_[y]);
    }
    demand_marks_.push_back(demands_.size());
  }

  void unplace(Vertex x) {
    demand_marks_.pop_back();
    demands_.resize(demand_marks_.empty() ? 0 : demand_marks_.back());
    used_[core_[x]] = 0;
    core_[x] = kNone;
    --placed_;
  }

  bool extend_general(std::size_t order_pos, std::size_t required_left) {
    const auto& order = s_.pattern_order_;
    while (order_pos < order.size() && core_[order[order_pos]] != kNone) ++order_pos;
    if (order_pos == order.size()) return finish_general();
    const Vertex x = order[order_pos];
    const std::size_t unplaced_after = f_.vertex_count() - placed_ - 1;
    for (Vertex w : candidates_) {
      if (effective_degree(w) < f_.degree(x)) break;
      if (used_[w]) continue;
      const bool is_required = required(w);
      const std::size_t left = required_left - (is_required ? 1 : 0);
      if (unplaced_after < left) continue;
      place(x, w);
      if (match_demands(nullptr) && extend_general(order_pos + 1, left)) return true;
      unplace(x);
    }
    return false;
  }

  bool finish_general() {
    for (Vertex v : c_.required_core) {
      if (!used_[v]) return false;
    }
    std::vector<std::size_t> assignment;
    if (!match_demands(&assignment)) return false;
    route_through_forced(assignment);
    if (forced_ && std::find(assignment.begin(), assignment.end(), *forced_) == assignment.end()) return false;
    result_.core_map = core_;
    result_.edge_map.assign(f_.edge_count(), 0);
    for (std::size_t i = 0; i < demands_.size(); ++i) {
      // Recover the pattern edge from the endpoint images.
      const auto [wu, wv] = demands_[i];
      for (std::size_t e = 0; e < f_.edge_count(); ++e) {
        const auto [a, b] = f_.edge(e);
        if ((core_[a] == wu && core_[b] == wv) || (core_[a] == wv && core_[b] == wu)) {
          result_.edge_map[e] = assignment[i];
          break;
        }
      }
    }
    return true;
  }

  const BergeSearcher& s_;
  const Hypergraph& h_;
  const Graph& f_;
  const SearchConstraints& c_;
  const VertexSet* extra_;
  std::size_t extra_id_;
  std::optional<std::size_t> forced_;
  const VertexSet* forced_set_ = nullptr;

  std::vector<Vertex> candidates_;
  std::vector<std::size_t> forced_suffix_;
  std::vector<Vertex> chosen_;
  std::vector<Vertex> core_;
  std::vector<char> used_;
  std::size_t placed_ = 0;
  std::vector<GraphEdge> demands_;
  std::vector<std::size_t> demand_marks_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<int> right_ids_;
  BergeWitness result_;
};

BergeSearcher::BergeSearcher(const Hypergraph& h, const Graph& f)
    : h_(h), f_(f), words_((h.edge_count() + 1 + 63) / 64), complete_pattern_(f.is_complete() && f.vertex_count() >= 2) {
  bits_.assign(h.vertex_count() * words_, 0);
  for (std::size_t id = 0; id < h.edge_count(); ++id) {
    for (Vertex v : h.edge(id)) bits_[std::size_t{v} * words_ + id / 64] |= std::uint64_t{1} << (id % 64);
  }
  by_degree_.resize(h.vertex_count());
  for (Vertex v = 0; v < h.vertex_count(); ++v) by_degree_[v] = v;
  std::stable_sort(by_degree_.begin(), by_degree_.end(),
                   [&h](Vertex a, Vertex b) { return h.degree(a) > h.degree(b); });
  pattern_order_.resize(f.vertex_count());
  for (Vertex x = 0; x < f.vertex_count(); ++x) pattern_order_[x] = x;
  std::stable_sort(pattern_order_.begin(), pattern_order_.end(),
                   [&f](Vertex a, Vertex b) { return f.degree(a) > f.degree(b); });
}

std::optional<BergeWitness> BergeSearcher::find(const SearchConstraints& constraints) const {
  std::optional<std::size_t> forced;
  if (constraints.required_edge) {
    forced = h_.find_edge(*constraints.required_edge);
    if (!forced) return std::nullopt;
  }
  return SearchRun(*this, constraints, nullptr, forced).run();
}

std::optional<BergeWitness> BergeSearcher::find_new(const VertexSet& e, const SearchConstraints& constraints) const {
  VertexSet edge = e;
  if (!canonicalize(edge) || edge.size() < 2 || edge.back() >= h_.vertex_count()) {
    throw std::invalid_argument("malformed edge " + format_vertex_set(e));
  }
  if (h_.contains_edge(edge)) throw std::invalid_argument("edge " + format_vertex_set(edge) + " already present");
  return SearchRun(*this, constraints, &edge, h_.edge_count()).run();
}

std::optional<BergeWitness> find_berge_witness(const Graph& f, const Hypergraph& h,
                                               const SearchConstraints& constraints) {
  return BergeSearcher(h, f).find(constraints);
}

bool contains_berge(const Graph& f, const Hypergraph& h) { return find_berge_witness(f, h).has_value(); }

bool creates_new_berge(const Hypergraph& h, const VertexSet& e, const Graph& f) {
  return BergeSearcher(h, f).creates_new(e);
}

bool is_ell_good(const Hypergraph& h, Vertex u, Vertex v, std::size_t ell) {
  if (u == v) throw std::invalid_argument("is_ell_good needs two distinct vertices");
  const Graph clique = make_clique(ell);
  return BergeSearcher(h, clique).creates_new(VertexSet{std::min(u, v), std::max(u, v)});
}

CoreReport all_subsets_are_cores(const Hypergraph& h, std::size_t m) {
  CoreReport report;
  const std::size_t n = h.vertex_count();
  if (m > n || m < 2) return report;
  const Graph clique = make_clique(m);
  const BergeSearcher searcher(h, clique);
  VertexSet subset(m);
  for (std::size_t i = 0; i < m; ++i) subset[i] = static_cast<Vertex>(i);
  do {
    ++report.checked;
    SearchConstraints c;
    c.required_core = subset;
    if (!searcher.find(c)) report.failures.push_back(subset);
  } while (next_combination(subset, n));
  return report;
}

}  // namespace bergesat
