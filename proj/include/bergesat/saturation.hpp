#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bergesat/berge.hpp"

namespace bergesat {

struct FreenessResult {
  bool is_free = true;
  std::optional<BergeWitness> witness;  // set when not free
};

FreenessResult is_berge_free(const Hypergraph& h, const Graph& f);

struct SaturationMode {
  enum class Kind { full, sampled, orbits };
  Kind kind = Kind::full;
  std::uint64_t sample_count = 0;  // sampled only
  std::uint64_t seed = 0;          // sampled only

  static SaturationMode full() { return {}; }
  static SaturationMode sampled(std::uint64_t count, std::uint64_t seed) { return {Kind::sampled, count, seed}; }
  static SaturationMode orbits() { return {Kind::orbits, 0, 0}; }

  /// "full", "sampled(100,7)", "orbits"
  std::string to_string() const;
  friend bool operator==(const SaturationMode&, const SaturationMode&) = default;
};

struct SaturationOptions {
  SaturationMode mode;
  unsigned jobs = 1;
};

struct SaturationReport {
  bool is_free = false;
  std::vector<BergeWitness> violations_free;
  /// Missing edges actually probed.
  std::uint64_t checked_missing = 0;
  /// Probed missing edges whose addition creates no new Berge-F, lexicographic.
  std::vector<VertexSet> violations_sat;
  /// Size of the k-uniform complement.
  std::uint64_t missing_total = 0;
  /// Orbits mode: number of vertex classes and of missing-edge orbits.
  std::uint64_t vertex_classes = 0;
  std::uint64_t orbit_count = 0;
  std::chrono::nanoseconds elapsed{0};
  SaturationMode mode;

  /// Certified saturation: free, no violation, every missing edge probed.
  bool saturated() const {
    return is_free && violations_sat.empty() && mode.kind == SaturationMode::Kind::full;
  }
  /// Nothing refuted the property among the probed edges.
  bool no_violation_found() const { return is_free && violations_sat.empty(); }

  /// Report equality ignoring `elapsed`.
  bool same_result(const SaturationReport& other) const;
};

/// Checks Berge-F-freeness, then probes missing k-edges (all of them, a
/// seeded sample, or one representative per orbit under swaps of vertices
/// with identical edge sets). Probes run on `jobs` threads over contiguous
/// chunks; the merged report does not depend on the thread count.
/// Throws std::invalid_argument if H is not k-uniform.
SaturationReport is_saturated(const Hypergraph& h, const Graph& f, std::size_t k,
                              const SaturationOptions& options = {});

/// Classes of vertices with identical incident-edge sets (u ⪯ v and v ⪯ u),
/// each ascending, ordered by smallest member.
std::vector<VertexSet> twin_classes(const Hypergraph& h);

struct PairReport {
  std::uint64_t checked = 0;
  std::vector<GraphEdge> failures;
  bool ok() const { return failures.empty(); }
};

/// is_ell_good for every pair that is not already a 2-edge of H.
PairReport all_pairs_good(const Hypergraph& h, std::size_t ell);

/// all_subsets_are_cores(H, ell - 1).
CoreReport all_cores_present(const Hypergraph& h, std::size_t ell);

}  // namespace bergesat
