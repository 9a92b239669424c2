#include <gtest/gtest.h>

#include <numeric>

#include "hopspan/generators.hpp"
#include "hopspan/hopset.hpp"
#include "hopspan/verifier.hpp"

using namespace hopspan;

namespace {

Graph weighted(std::size_t n, std::size_t m, std::uint64_t seed) {
  RandomGraphSpec s;
  s.n = n;
  s.m = m;
  s.seed = seed;
  s.weighted = true;
  return random_graph(s);
}

}  // namespace

TEST(VerifyHopset, EmptyHopsetFullBudget) {
  const Graph g = weighted(40, 90, 1);
  const auto r = verify_hopset(g, {}, 1, 39);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.max_ratio, 1);
  EXPECT_EQ(r.pairs_checked, 40u * 39 / 2);
}

TEST(VerifyHopset, DetectsViolationsAndShortcuts) {
  const Graph g = path_graph(10);
  const auto r = verify_hopset(g, {}, 1, 3, PairSpec{}, true);
  EXPECT_FALSE(r.pass);
  EXPECT_GT(r.violations, 0u);
  EXPECT_GT(r.worst.d, 3);
  // An edge lighter than the true distance is caught.
  const std::vector<Edge> cheat = {{0, 9, 2}};
  const auto c = verify_hopset(g, cheat, 1, 9);
  EXPECT_GT(c.below_distance, 0u);
  EXPECT_FALSE(c.pass);
  const auto h = std::accumulate(r.histogram.begin(), r.histogram.end(), std::size_t{0});
  EXPECT_EQ(h, r.pairs_checked);
}

TEST(VerifyHopset, DisconnectedPairsAreSkipped) {
  const Graph g(4, {{0, 1, 1}, {2, 3, 1}});
  const auto r = verify_hopset(g, {}, 1, 1);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.pairs_checked, 2u);
  EXPECT_EQ(r.pairs_skipped, 4u);
}

TEST(VerifyHopset, Monotone) {
  const Graph g = weighted(60, 150, 3);
  const auto s = make_schedule(4, LevelFunction::identity(), Variant::Hopset);
  const auto h = build_hopset(g, s, 2).plain();
  for (double a : {1.0, 1.5, 3.0}) {
    for (std::size_t b = 1; b < 6; ++b) {
      if (!verify_hopset(g, h, a, b).pass) continue;
      EXPECT_TRUE(verify_hopset(g, h, a + 0.5, b).pass);
      EXPECT_TRUE(verify_hopset(g, h, a, b + 1).pass);
    }
  }
}

TEST(VerifyHopset, SampledModeCoversDeciles) {
  const Graph g = weighted(400, 1200, 5);
  PairSpec ps;
  ps.exhaustive_limit = 300;
  ps.sample_sources = 10;
  ps.per_source = 20;
  const auto r = verify_hopset(g, {}, 1, 399, ps);
  EXPECT_FALSE(r.exhaustive);
  EXPECT_EQ(r.pairs_checked, 200u);
  EXPECT_TRUE(r.pass);
  const auto sel = select_pairs(g, ps);
  EXPECT_EQ(sel.size(), 10u);
  EXPECT_EQ(sel, select_pairs(g, ps));
}

TEST(VerifyHopset, ThreadCountDoesNotChangeResults) {
  const Graph g = weighted(120, 300, 7);
  const auto s = make_schedule(4, LevelFunction::identity(), Variant::Hopset);
  const auto h = build_hopset(g, s, 3).plain();
  PairSpec one, four;
  four.threads = 4;
  const auto a = verify_hopset(g, h, 2, 4, one, true), b = verify_hopset(g, h, 2, 4, four, true);
  EXPECT_EQ(a.violations, b.violations);
  EXPECT_EQ(a.max_ratio, b.max_ratio);
  EXPECT_EQ(a.histogram, b.histogram);
  ASSERT_EQ(a.records.size(), b.records.size());
  for (std::size_t i = 0; i < a.records.size(); ++i) EXPECT_EQ(a.records[i].observed, b.records[i].observed);
}

TEST(VerifySpanner, IdentityAndErrors) {
  const Graph g = path_graph(6);
  EXPECT_TRUE(verify_spanner(g, g, 1, 0).pass);
  const Graph other(6, {{0, 5, 1}});
  EXPECT_THROW(verify_spanner(g, other, 1, 0), std::invalid_argument);
  const Graph sub(6, {{0, 1, 1}, {1, 2, 1}});
  const auto r = verify_spanner(g, sub, 100, 0);
  EXPECT_FALSE(r.pass);
}

TEST(MinHopbound, Examples) {
  EXPECT_EQ(measure_min_hopbound(complete_graph(6), {}, kInfinity), 1u);
  EXPECT_EQ(measure_min_hopbound(path_graph(8), {}, 1.0), 7u);
  const Graph g = weighted(70, 150, 9);
  const auto s = make_schedule(4, LevelFunction::identity(), Variant::Hopset);
  const auto h = build_hopset(g, s, 4).plain();
  for (double alpha : {1.0, 2.0, 5.0}) {
    const auto b = measure_min_hopbound(g, h, alpha);
    ASSERT_TRUE(b);
    EXPECT_TRUE(verify_hopset(g, h, alpha, *b).pass);
    if (*b > 1) {
      EXPECT_FALSE(verify_hopset(g, h, alpha, *b - 1).pass);
    }
  }
  EXPECT_THROW(measure_min_hopbound(g, h, 0.5), std::invalid_argument);
}
