#include <gtest/gtest.h>

#include "bergesat/combinations.hpp"
#include "bergesat/constructions.hpp"
#include "bergesat/invariants.hpp"
#include "bergesat/oracle.hpp"
#include "bergesat/saturation.hpp"
#include "bergesat/witness.hpp"
#include "support.hpp"

using namespace bergesat;
using bergesat::testing::Rng;

namespace {

const Graph k3 = make_clique(3);
const Graph k4 = make_clique(4);

SaturationOptions with(SaturationMode mode, unsigned jobs = 1) {
  SaturationOptions o;
  o.mode = mode;
  o.jobs = jobs;
  return o;
}

}  // namespace

TEST(Freeness, Examples) {
  EXPECT_TRUE(is_berge_free(build_s(21, 3, 4).hypergraph, k4).is_free);
  const Hypergraph c = build_c_k_4(3).hypergraph;
  const FreenessResult r = is_berge_free(c, k3);
  EXPECT_FALSE(r.is_free);
  ASSERT_TRUE(r.witness);
  EXPECT_TRUE(is_valid_witness(k3, c, *r.witness));
  EXPECT_TRUE(is_berge_free(Hypergraph(6), k4).is_free);
}

TEST(Saturated, S21Full) {
  const Hypergraph s = build_s(21, 3, 4).hypergraph;
  const SaturationReport r = is_saturated(s, k4, 3);
  EXPECT_TRUE(r.saturated());
  EXPECT_TRUE(r.violations_free.empty());
  EXPECT_EQ(r.checked_missing, binomial(21, 3) - s.edge_count());
  EXPECT_EQ(r.missing_total, r.checked_missing);
  EXPECT_EQ(r.mode.to_string(), "full");
}

TEST(Saturated, TightCycleMinusEdgeIsNot) {
  const Hypergraph c = build_c_k_4(3).hypergraph;
  std::vector<VertexSet> edges(c.edges().begin() + 1, c.edges().end());
  const Hypergraph minus(5, edges);
  const SaturationReport r = is_saturated(minus, k4, 3);
  EXPECT_TRUE(r.is_free);
  EXPECT_FALSE(r.saturated());
  EXPECT_FALSE(r.violations_sat.empty());
  EXPECT_TRUE(std::is_sorted(r.violations_sat.begin(), r.violations_sat.end()));
  for (const auto& e : r.violations_sat) EXPECT_FALSE(berge_oracle(k4, add_edge(minus, e), minus.edge_count()));
}

TEST(Saturated, NotFreeIsReported) {
  const Hypergraph c = build_c_k_4(3).hypergraph;
  const SaturationReport r = is_saturated(c, k3, 3);
  EXPECT_FALSE(r.is_free);
  EXPECT_EQ(r.violations_free.size(), 1u);
  EXPECT_FALSE(r.saturated());
  EXPECT_EQ(r.checked_missing, 5u);
}

TEST(Saturated, NonUniformRejected) {
  EXPECT_THROW(is_saturated(Hypergraph(4, {{0, 1, 2}, {0, 3}}), k3, 3), std::invalid_argument);
}

TEST(Saturated, FullModeSpotRecheck) {
  Rng rng(41);
  for (int n : {20, 21, 22, 25}) {
    const Hypergraph s = build_s(n, 3, 4).hypergraph;
    ASSERT_TRUE(is_saturated(s, k4, 3).saturated());
    const std::uint64_t total = binomial(n, 3);
    int checked = 0;
    while (checked < 20) {
      const VertexSet e = unrank_combination(std::uniform_int_distribution<std::uint64_t>(0, total - 1)(rng), n, 3);
      if (s.contains_edge(e)) continue;
      EXPECT_FALSE(is_berge_free(add_edge(s, e), k4).is_free);
      ++checked;
    }
  }
}

TEST(Saturated, AgreesWithOraclePredicate) {
  // Saturation decided by the exhaustive oracle alone.
  auto oracle_saturated = [](const Hypergraph& h, const Graph& f, std::size_t k) {
    if (berge_oracle(f, h)) return false;
    for (const auto& e : missing_edges(h, k)) {
      if (!berge_oracle(f, add_edge(h, e), h.edge_count())) return false;
    }
    return true;
  };
  Rng rng(42);
  const auto patterns = bergesat::testing::small_patterns();
  int saturated = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const auto& [name, f] = patterns[trial % patterns.size()];
    const Hypergraph h = bergesat::testing::random_uniform(rng, 5, 1 + trial % 5, 3);
    const bool want = oracle_saturated(h, f, 3);
    saturated += want;
    EXPECT_EQ(is_saturated(h, f, 3).saturated(), want) << name;
  }
  EXPECT_GT(saturated, 0);
}

TEST(Determinism, JobsDoNotChangeReport) {
  const Hypergraph s = build_s(21, 3, 4).hypergraph;
  const SaturationReport one = is_saturated(s, k4, 3, with(SaturationMode::full(), 1));
  for (unsigned jobs : {2u, 3u, 8u}) EXPECT_TRUE(one.same_result(is_saturated(s, k4, 3, with(SaturationMode::full(), jobs))));

  // A failing instance spanning several chunks.
  const Hypergraph m = build_h_min_deg(50, 3, k4).hypergraph;
  const SaturationReport a = is_saturated(m, k4, 3, with(SaturationMode::full(), 1));
  const SaturationReport b = is_saturated(m, k4, 3, with(SaturationMode::full(), 8));
  EXPECT_FALSE(a.violations_sat.empty());
  EXPECT_GT(a.checked_missing, 16384u);
  EXPECT_TRUE(a.same_result(b));
  EXPECT_TRUE(std::is_sorted(a.violations_sat.begin(), a.violations_sat.end()));
}

TEST(Sampled, ReproducibleAndDistinct) {
  const Hypergraph m = build_h_min_deg(30, 3, k4).hypergraph;
  const SaturationReport a = is_saturated(m, k4, 3, with(SaturationMode::sampled(300, 7)));
  const SaturationReport b = is_saturated(m, k4, 3, with(SaturationMode::sampled(300, 7), 4));
  EXPECT_TRUE(a.same_result(b));
  EXPECT_EQ(a.checked_missing, 300u);
  EXPECT_EQ(a.mode.to_string(), "sampled(300,7)");
  EXPECT_FALSE(a.saturated());
  const SaturationReport c = is_saturated(m, k4, 3, with(SaturationMode::sampled(300, 8)));
  EXPECT_FALSE(a.same_result(c));

  const SaturationReport all = is_saturated(m, k4, 3, with(SaturationMode::sampled(1u << 30, 1)));
  EXPECT_EQ(all.checked_missing, all.missing_total);
}

TEST(Orbits, AgreesWithFull) {
  for (int n : {20, 21, 30}) {
    const Hypergraph s = build_s(n, 3, 4).hypergraph;
    const SaturationReport r = is_saturated(s, k4, 3, with(SaturationMode::orbits()));
    EXPECT_TRUE(r.no_violation_found());
    EXPECT_FALSE(r.saturated());
    EXPECT_LT(r.orbit_count, r.missing_total);
  }
  const Hypergraph m = build_h_min_deg(20, 3, k4).hypergraph;
  const SaturationReport full = is_saturated(m, k4, 3);
  const SaturationReport orb = is_saturated(m, k4, 3, with(SaturationMode::orbits()));
  EXPECT_EQ(full.violations_sat.empty(), orb.violations_sat.empty());
}

TEST(Orbits, TwinClasses) {
  const Hypergraph h(6, {{0, 1, 2}, {0, 1, 3}});
  const auto classes = twin_classes(h);
  EXPECT_EQ(classes, (std::vector<VertexSet>{{0, 1}, {2}, {3}, {4, 5}}));
}

TEST(PairAndCoreReports, PairsAndCores) {
  const Hypergraph c = build_c_k_4(3).hypergraph;
  const PairReport p = all_pairs_good(c, 4);
  EXPECT_EQ(p.checked, 10u);
  EXPECT_TRUE(p.ok());
  const PairReport q = all_pairs_good(build_c_k_ell(4, 5).hypergraph, 5);
  EXPECT_EQ(q.checked, 15u);
  EXPECT_TRUE(q.ok());
  const PairReport single = all_pairs_good(Hypergraph(3, {{0, 1, 2}}), 4);
  EXPECT_EQ(single.failures.size(), 3u);
  EXPECT_TRUE(all_cores_present(c, 4).ok());
  EXPECT_TRUE(all_cores_present(build_c_k_ell(3, 5).hypergraph, 5).ok());
}
