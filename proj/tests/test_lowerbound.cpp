#include <gtest/gtest.h>

#include <set>

#include "hopspan/generators.hpp"
#include "hopspan/lowerbound.hpp"

using namespace hopspan;

namespace {

// Shortest cycle through brute force: for each edge, shortest u-v path avoiding it.
std::optional<int> girth_oracle(const Graph& g) {
  std::optional<int> best;
  for (const auto& e : g.edges()) {
    std::vector<Edge> rest;
    for (const auto& f : g.edges()) {
      if (!(f.u == e.u && f.v == e.v)) rest.push_back(f);
    }
    const Graph h(g.num_vertices(), rest);
    const Weight d = dijkstra(h, e.u).dist[e.v];
    if (d < kInfinity) {
      const int c = static_cast<int>(d) + 1;
      if (!best || c < *best) best = c;
    }
  }
  return best;
}

// Pairs at BFS distance exactly δ, counted by all-pairs Dijkstra.
std::uint64_t delta_oracle(const Graph& g, int delta) {
  std::uint64_t c = 0;
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    const auto d = dijkstra(g, u).dist;
    for (Vertex v = u + 1; v < g.num_vertices(); ++v) c += d[v] == delta;
  }
  return c;
}

}  // namespace

TEST(Girth, MatchesOracle) {
  EXPECT_FALSE(girth(path_graph(10)));
  EXPECT_FALSE(girth(star_graph(8)));
  EXPECT_EQ(girth(cycle_graph(7)), 7);
  EXPECT_EQ(girth(complete_graph(4)), 3);
  for (const auto& name : cage_names()) {
    const auto c = cage(name);
    EXPECT_EQ(girth(c.graph), girth_oracle(c.graph)) << name;
    EXPECT_EQ(girth(c.graph), c.girth) << name;
    EXPECT_EQ(c.graph.num_vertices(), c.vertices);
    for (Vertex v = 0; v < c.vertices; ++v) EXPECT_EQ(static_cast<int>(c.graph.degree(v)), c.degree);
  }
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    RandomGraphSpec s;
    s.n = 30;
    s.m = 36;
    s.seed = seed;
    const Graph g = random_graph(s);
    EXPECT_EQ(girth(g), girth_oracle(g));
  }
}

TEST(Girth, KnownCages) {
  const auto p = cage("petersen");
  EXPECT_EQ(p.vertices, 10u);
  EXPECT_EQ(p.graph.num_edges(), 15u);
  EXPECT_EQ(cage("heawood").girth, 6);
  EXPECT_EQ(cage("mcgee").vertices, 24u);
  EXPECT_EQ(cage("tutte-coxeter").girth, 8);
  EXPECT_THROW(cage("nope"), std::invalid_argument);
}

TEST(Girth, RegularGenerator) {
  const auto g = random_regular_with_girth(40, 3, 5, 9);
  ASSERT_TRUE(g);
  EXPECT_GE(*girth(*g), 5);
  for (Vertex v = 0; v < 40; ++v) EXPECT_EQ(g->degree(v), 3u);
}

TEST(DeltaPaths, Counts) {
  const auto pet = cage("petersen").graph;
  EXPECT_EQ(count_delta_paths(pet, 1), 15u);
  EXPECT_EQ(count_delta_paths(cycle_graph(9), 4), 9u);
  EXPECT_EQ(count_delta_paths(pet, 2), 30u);
  EXPECT_GE(count_delta_paths(pet, 2), 20u);  // ½ n p^δ with p = 2
  for (const auto& name : cage_names()) {
    const auto c = cage(name);
    for (int d = 1; d <= 4; ++d) EXPECT_EQ(count_delta_paths(c.graph, d), delta_oracle(c.graph, d));
  }
}

TEST(GirthBound, Arithmetic) {
  EXPECT_EQ(feasible_delta(8, 2), 2);
  EXPECT_EQ(feasible_delta(12, 2), 3);
  EXPECT_EQ(feasible_delta(5, 1), 2);
  const auto b = girth_bound_evaluate(10, 2, 1, 2);
  EXPECT_DOUBLE_EQ(b.min_hopset_edges, 5.0);
  EXPECT_DOUBLE_EQ(b.path_count_floor, 10.0);
  EXPECT_DOUBLE_EQ(b.usage_bound, 2.0);
  EXPECT_EQ(girth_bound_evaluate(100, 3, 2, 2, 11).beta_floor, 3);
  EXPECT_EQ(girth_bound_evaluate(100, 3, 2, 1, 2).beta_floor, 0);
}

TEST(Uniqueness, CagesBelowGirth) {
  for (const auto& name : cage_names()) {
    const auto c = cage(name);
    for (int alpha : {1, 2}) {
      const int delta = feasible_delta(c.girth, alpha);
      if (delta < 1) continue;
      const auto r = unique_shortest_paths_check(c.graph, delta, alpha);
      EXPECT_TRUE(r.ok) << name << " alpha " << alpha;
      EXPECT_EQ(r.pairs, count_delta_paths(c.graph, delta));
      EXPECT_EQ(r.non_unique, 0u);
      if (r.min_second >= 0) {
        EXPECT_GT(r.min_second, alpha * delta);
      }
    }
  }
  // Above the girth limit the check must fail on C_6 with δ = 3.
  const auto bad = unique_shortest_paths_check(cycle_graph(6), 3, 1);
  EXPECT_FALSE(bad.ok);
  EXPECT_GT(bad.non_unique, 0u);
}

TEST(Usage, EmptyHopsetFailsEveryPair) {
  const auto m = cage("mcgee");
  const auto r = hopset_path_usage_check(m.graph, {}, 1, 3, 2);
  EXPECT_EQ(r.pairs, count_delta_paths(m.graph, 3));
  EXPECT_EQ(r.satisfied, 0u);
  EXPECT_TRUE(r.ok);
}

TEST(Usage, SingleEdgeAgainstBruteForce) {
  const auto tc = cage("tutte-coxeter");
  const Graph& g = tc.graph;
  // One hopset edge spanning a 2-path.
  const Vertex x = 0;
  const Vertex mid = g.neighbors(x)[0].to;
  Vertex y = kNoVertex;
  for (const auto& a : g.neighbors(mid)) {
    if (a.to != x) {
      y = a.to;
      break;
    }
  }
  const std::vector<Edge> h = {{x, y, 2}};
  const auto r = hopset_path_usage_check(g, h, 2, 2, 1);
  ASSERT_EQ(r.edges.size(), 1u);
  // Brute force: distance-2 pairs whose unique path shares a graph edge with the detour x-mid-y.
  std::set<std::pair<Vertex, Vertex>> detour = {{std::min(x, mid), std::max(x, mid)},
                                                {std::min(mid, y), std::max(mid, y)}};
  std::uint64_t sharing = 0;
  for (Vertex a = 0; a < g.num_vertices(); ++a) {
    for (const auto& e1 : g.neighbors(a)) {
      for (const auto& e2 : g.neighbors(e1.to)) {
        if (e2.to <= a) continue;
        const bool s1 = detour.count({std::min(a, e1.to), std::max(a, e1.to)}) > 0;
        const bool s2 = detour.count({std::min(e1.to, e2.to), std::max(e1.to, e2.to)}) > 0;
        sharing += s1 || s2;
      }
    }
  }
  EXPECT_EQ(r.degree[0], sharing);
  // With β = 1 only the pair (x, y) itself is satisfied, through the hopset edge.
  EXPECT_EQ(r.satisfied, 1u);
  EXPECT_EQ(r.witnessed, 1u);
  EXPECT_EQ(r.usage[0], 1u);
  EXPECT_LE(static_cast<double>(r.max_degree), r.degree_bound);
  EXPECT_TRUE(r.ok);
}

TEST(Usage, Preconditions) {
  const auto p = cage("petersen").graph;
  EXPECT_THROW(hopset_path_usage_check(p, {}, 2, 2, 1), std::invalid_argument);  // girth 5 <= 6
  EXPECT_THROW(hopset_path_usage_check(cage("mcgee").graph, {}, 1, 3, 3), std::invalid_argument);
  EXPECT_THROW(hopset_path_usage_check(cage("mcgee").graph, {{0, 2, 1}}, 1, 3, 1),
               std::invalid_argument);
  EXPECT_THROW(hopset_path_usage_check(path_graph(10), {}, 1, 2, 1), std::invalid_argument);
}
