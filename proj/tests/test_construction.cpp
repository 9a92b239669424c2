#include <gtest/gtest.h>

#include <cmath>

#include "hopspan/construction.hpp"
#include "hopspan/generators.hpp"

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

std::vector<std::vector<Weight>> all_pairs(const Graph& g) {
  std::vector<std::vector<Weight>> d;
  for (Vertex u = 0; u < g.num_vertices(); ++u) d.push_back(dijkstra(g, u).dist);
  return d;
}

}  // namespace

TEST(Levels, NestedDeterministicAndSeedSensitive) {
  const Graph g = weighted(300, 900, 1);
  const auto s = make_schedule(4, LevelFunction::identity(), Variant::Hopset);
  const auto a = sample_levels(g, s, 7), b = sample_levels(g, s, 7), c = sample_levels(g, s, 8);
  EXPECT_EQ(a.levels, b.levels);
  EXPECT_NE(a.levels, c.levels);
  for (int lvl : a.levels) {
    EXPECT_GE(lvl, 0);
    EXPECT_LE(lvl, s.F);
  }
  for (int j = 0; j < s.F; ++j) {
    for (Vertex v : a.members(j + 1)) EXPECT_TRUE(a.in(v, j));
  }
  EXPECT_EQ(a.members(0).size(), 300u);
}

TEST(Levels, PromotionProbabilityAndForcedTable) {
  const auto s = make_schedule(4, LevelFunction::identity(), Variant::Hopset);
  EXPECT_DOUBLE_EQ(promotion_probability(256, s, 1), std::pow(256.0, -2.0 / 4));
  const auto la = forced_levels({0, 2, 1, 3}, 3);
  EXPECT_EQ(la.levels, (std::vector<int>{0, 2, 1, 3}));
  EXPECT_TRUE(la.forced);
  EXPECT_TRUE(la.top_nonempty());
  EXPECT_THROW(forced_levels({0, 4}, 3), std::invalid_argument);
}

TEST(Levels, TinyProbabilitiesGiveLevelZero) {
  // n = 2: promotion probability 2^{-λ/k} with a huge λ/k ratio is negligible.
  const Graph g = path_graph(2);
  const auto s = make_schedule(1, LevelFunction::linear(1), Variant::Hopset);
  std::size_t promoted = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    for (int l : sample_levels(g, s, seed).levels) promoted += l > 0;
  }
  // P(level >= 1) = 1/2 per vertex here; sanity check the sampler is not stuck.
  EXPECT_GT(promoted, 100u);
  EXPECT_LT(promoted, 300u);
}

TEST(Pivots, MatchBruteForce) {
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    const Graph g = weighted(60, 180, seed);
    const auto s = make_schedule(3, LevelFunction::identity(), Variant::Hopset);
    const auto la = sample_levels(g, s, seed * 13);
    const auto pt = compute_pivots(g, la);
    const auto d = all_pairs(g);
    for (Vertex u = 0; u < 60; ++u) {
      EXPECT_EQ(pt.p(0, u), u);
      EXPECT_EQ(pt.d(0, u), 0);
      for (int j = 0; j < s.F; ++j) {
        Weight best = kInfinity;
        for (Vertex x : la.members(j)) best = std::min(best, d[u][x]);
        EXPECT_EQ(pt.d(j, u), best);
        if (best < kInfinity) {
          EXPECT_TRUE(la.in(pt.p(j, u), j));
          EXPECT_EQ(d[u][pt.p(j, u)], best);
        }
      }
      EXPECT_EQ(pt.d(s.F, u), kInfinity);
    }
  }
}

TEST(Pivots, SingleTopVertexIsEveryonesPivot) {
  const Graph g = weighted(20, 40, 3);
  std::vector<int> lv(20, 0);
  lv[7] = 2;
  const auto pt = compute_pivots(g, forced_levels(lv, 3));
  for (Vertex u = 0; u < 20; ++u) {
    EXPECT_EQ(pt.p(2, u), 7u);
    EXPECT_EQ(pt.p(1, u), 7u);
  }
}

TEST(Bunches, MatchDefinition) {
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    const Graph g = weighted(60, 150, seed + 10);
    const auto s = make_schedule(4, LevelFunction::identity(), Variant::Hopset);
    const auto la = sample_levels(g, s, seed);
    const auto pt = compute_pivots(g, la);
    const auto d = all_pairs(g);
    for (Vertex u = 0; u < 60; ++u) {
      for (int j = 0; j < s.F; ++j) {
        const Weight thr = j + 1 < s.F ? pt.d(j + 1, u) : kInfinity;
        for (bool half : {false, true}) {
          const Bunch b = compute_bunch(g, la, pt, u, j, half);
          std::vector<Vertex> want;
          for (Vertex v : la.members(j)) {
            if (d[u][v] < kInfinity && d[u][v] < (half ? thr / 2 : thr)) want.push_back(v);
          }
          std::vector<Vertex> got;
          for (const auto& m : b.members) {
            got.push_back(m.v);
            EXPECT_EQ(m.d, d[u][m.v]);
          }
          EXPECT_EQ(got, want) << "u=" << u << " j=" << j << " half=" << half;
        }
        if (j < la.level(u) && la.level(u) < s.F) {
          EXPECT_TRUE(compute_bunch(g, la, pt, u, j, false).members.empty());
        }
        if (j + 1 < s.F && pt.p(j + 1, u) != kNoVertex) {
          for (const auto& m : compute_bunch(g, la, pt, u, j, false).members) {
            EXPECT_NE(m.v, pt.p(j + 1, u));
          }
        }
      }
    }
  }
}

TEST(Bunches, TopLevelBunchIsWholeSet) {
  const Graph g = weighted(40, 100, 5);
  const auto s = make_schedule(4, LevelFunction::identity(), Variant::Hopset);
  const auto la = sample_levels(g, s, 3);
  const auto pt = compute_pivots(g, la);
  const int top = s.F - 1;
  for (Vertex u = 0; u < 40; ++u) {
    EXPECT_EQ(compute_bunch(g, la, pt, u, top, false).members.size(), la.members(top).size());
  }
}

TEST(Bunches, GeometricMeanSize) {
  // Vertex 0 of a long path: B_0(0) size is geometric with p = n^{-λ_0/k}.
  const std::size_t n = 4096;
  const Graph g = path_graph(n);
  const auto s = make_schedule(4, LevelFunction::identity(), Variant::Hopset);
  const double p = promotion_probability(n, s, 0);
  double sum = 0, sum2 = 0;
  const int seeds = 300;
  for (int seed = 0; seed < seeds; ++seed) {
    const auto la = sample_levels(g, s, seed);
    const auto pt = compute_pivots(g, la);
    const double x = static_cast<double>(compute_bunch(g, la, pt, 0, 0, false).members.size());
    sum += x;
    sum2 += x * x;
  }
  const double mean = sum / seeds;
  const double se = std::sqrt((sum2 / seeds - mean * mean) / seeds);
  EXPECT_NEAR(mean, 1 / p - 1, 3 * se);
}

TEST(Levels, TopLevelRarelyOccupied) {
  const std::size_t n = 256;
  const Graph g = path_graph(n);
  const auto s = make_schedule(4, LevelFunction::identity(), Variant::Hopset);
  const int seeds = 400;
  int hits = 0;
  for (int seed = 0; seed < seeds; ++seed) hits += sample_levels(g, s, seed).top_nonempty();
  const double bound = std::pow(static_cast<double>(n), -1.0 / 4);
  const double freq = static_cast<double>(hits) / seeds;
  EXPECT_LE(freq, bound + 3 * std::sqrt(bound * (1 - bound) / seeds));
}

TEST(Score, MatchesDefiningSet) {
  const Graph g = weighted(80, 240, 77);
  for (const auto& f : {LevelFunction::identity(), LevelFunction::interleaved(2)}) {
    const auto s = make_schedule(8, f, Variant::Hopset, 1.0);
    const auto la = sample_levels(g, s, 5);
    const auto pt = compute_pivots(g, la);
    for (double scale : {0.01, 0.3, 1.0, 5.0}) {
      std::vector<double> r = s.radii;
      for (auto& x : r) x *= scale;
      for (Vertex u = 0; u < 80; ++u) {
        int want = -1;
        for (int i = 1; i <= s.F; ++i) {
          const double di = i == s.F ? kInfinity : pt.d(i, u);
          bool ok = di > r[i];
          for (int j = f.inverse(i - 1); j <= i - 1; ++j) ok = ok && pt.d(j, u) <= r[j];
          if (ok) want = i;
        }
        EXPECT_EQ(score(pt, f, r, u), want);
      }
    }
  }
}

TEST(Score, HugeRadiiGiveTopScore) {
  const Graph g = weighted(30, 60, 2);
  const auto s = make_schedule(4, LevelFunction::identity(), Variant::Hopset);
  const auto la = sample_levels(g, s, 1);
  const auto pt = compute_pivots(g, la);
  std::vector<double> r(s.F + 1, 1e300);
  for (Vertex u = 0; u < 30; ++u) EXPECT_EQ(score(pt, s.f, r, u), s.F);
}
