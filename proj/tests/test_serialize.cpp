#include <gtest/gtest.h>

#include <sstream>

#include "hopspan/generators.hpp"
#include "hopspan/graph_io.hpp"
#include "hopspan/serialize.hpp"

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

TEST(Decimal, RoundTrips) {
  for (double x : {0.1, 1.0 / 3, 2.5, 1e-300, 123456789.125, 7.0}) {
    EXPECT_EQ(std::stod(decimal(x)), x);
  }
  EXPECT_EQ(decimal(7.0), "7");
}

TEST(ScheduleJson, RoundTrip) {
  for (const auto& v : {Variant::Hopset, Variant::SpannerTruncated, Variant::SpannerHalf}) {
    for (const auto& f : {LevelFunction::identity(), LevelFunction::interleaved(3),
                          LevelFunction::linear(5)}) {
      const auto s = make_schedule(5, f, v, 2.5);
      const auto back = schedule_from_json(to_json(s));
      EXPECT_EQ(back.F, s.F);
      EXPECT_EQ(back.lambdas, s.lambdas);
      EXPECT_EQ(back.radii, s.radii);
      EXPECT_EQ(back.f.str(), s.f.str());
      EXPECT_EQ(to_json(back).dump(), to_json(s).dump());
    }
  }
}

TEST(ScheduleJson, TamperingIsRejected) {
  const auto s = make_schedule(6, LevelFunction::identity(), Variant::Hopset);
  auto j = to_json(s);
  j["lambda"][1] = "5/7";
  EXPECT_THROW(schedule_from_json(j), ScheduleError);
  auto j2 = to_json(s);
  j2["F"] = s.F + 1;
  EXPECT_THROW(schedule_from_json(j2), ScheduleError);
}

TEST(LevelsJson, RoundTrip) {
  const auto la = forced_levels({0, 1, 2, 0, 3}, 3);
  const auto back = levels_from_json(to_json(la));
  EXPECT_EQ(back.levels, la.levels);
  EXPECT_EQ(back.F, 3);
  EXPECT_TRUE(back.forced);
}

TEST(RunConfigJson, RoundTrip) {
  RunConfig c;
  c.subcommand = "build";
  c.input = "g.txt";
  c.k = 7;
  c.f = "interleaved:2";
  c.t = 0.75;
  c.variant = "spanner-half";
  c.seed = 99;
  c.pairs.sample_sources = 12;
  c.threads = 3;
  const auto back = run_config_from_json(to_json(c));
  EXPECT_EQ(to_json(back).dump(), to_json(c).dump());
  EXPECT_EQ(back.pairs.sample_sources, 12u);
  EXPECT_EQ(back.f, "interleaved:2");
}

TEST(Artifact, HopsetRoundTrip) {
  const Graph g = weighted(60, 150, 2);
  const auto s = make_schedule(4, LevelFunction::identity(), Variant::Hopset);
  const auto h = build_hopset(g, s, 5);
  std::stringstream ss;
  write_artifact(ss, h, 60);
  const std::string text = ss.str();
  const auto a = read_artifact(ss);
  EXPECT_EQ(a.kind, "hopset");
  EXPECT_EQ(a.n, 60u);
  EXPECT_EQ(a.levels.levels, h.levels.levels);
  ASSERT_EQ(a.edges.size(), h.size());
  for (std::size_t i = 0; i < a.edges.size(); ++i) {
    EXPECT_EQ(a.edges[i].u, h.edges[i].x);
    EXPECT_EQ(a.edges[i].v, h.edges[i].y);
    EXPECT_EQ(a.edges[i].w, h.edges[i].w);
  }
  std::stringstream again;
  write_artifact(again, h, 60);
  EXPECT_EQ(again.str(), text);
}

TEST(Artifact, SpannerRoundTrip) {
  RandomGraphSpec spec;
  spec.n = 50;
  spec.m = 120;
  const Graph g = random_graph(spec);
  const auto s = make_schedule(4, LevelFunction::identity(), Variant::SpannerHalf);
  const auto sp = build_spanner_half(g, s, 3);
  std::stringstream ss;
  write_artifact(ss, sp, 50);
  const auto a = read_artifact(ss);
  EXPECT_EQ(a.kind, "spanner-half");
  ASSERT_EQ(a.edges.size(), sp.size());
  EXPECT_EQ(a.tags.size(), sp.size());
  EXPECT_EQ(a.schedule.F, s.F);
}

TEST(Artifact, MalformedInput) {
  std::stringstream empty;
  EXPECT_THROW(read_artifact(empty), ParseError);
  std::stringstream notjson("hello\n---\n");
  EXPECT_THROW(read_artifact(notjson), ParseError);
  const Graph g = weighted(20, 40, 1);
  const auto h = build_hopset(g, make_schedule(3, LevelFunction::identity(), Variant::Hopset), 1);
  std::stringstream ok;
  write_artifact(ok, h, 20);
  std::string text = ok.str();
  std::stringstream bad(text + "0 99 1\n");
  EXPECT_THROW(read_artifact(bad), ParseError);
  std::stringstream garbage(text + "x y z\n");
  EXPECT_THROW(read_artifact(garbage), ParseError);
}

TEST(ReportJson, Fields) {
  VerificationReport r;
  r.kind = "hopset";
  r.alpha = 3;
  r.beta = 5;
  r.pairs_checked = 10;
  const auto j = to_json(r);
  EXPECT_EQ(j["kind"], "hopset");
  EXPECT_EQ(j["pairs_checked"], 10);
  EXPECT_TRUE(j["pass"].get<bool>());
}
