#include "hopspan/spanner.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <tuple>
#include <unordered_set>

namespace hopspan {

namespace {

struct RawEdge {
  Vertex u, v;
  SpannerProvenance p;
};

void require_unweighted(const Graph& g) {
  if (!g.is_unweighted()) {
    throw std::invalid_argument("spanner construction needs an unweighted graph");
  }
}

void add_tree_path(const ShortestPathTree& tree, Vertex v, SpannerProvenance p,
                   std::vector<RawEdge>& out) {
  for (Vertex x = v; tree.parent[x] != kNoVertex; x = tree.parent[x]) {
    const Vertex y = tree.parent[x];
    out.push_back({std::min(x, y), std::max(x, y), p});
  }
}

SpannerEdgeSet build(const Graph& g, const ParamSchedule& s, const LevelAssignment& la,
                     bool half) {
  require_unweighted(g);
  if (la.F != s.F || la.size() != g.num_vertices()) {
    throw std::invalid_argument("level assignment does not match graph/schedule");
  }
  const PivotTable pt = compute_pivots(g, la);
  const std::size_t n = g.num_vertices();
  const Weight cap = half ? kInfinity : std::floor(s.rF());
  const PathOrigin bunch_origin = half ? PathOrigin::HalfBunchPath : PathOrigin::BunchPath;
  std::vector<RawEdge> raw;
  for (int j = 0; j < s.F; ++j) {
    for (Vertex u = 0; u < n; ++u) {
      const Vertex par = pt.parent[j][u];
      if (par != kNoVertex) {
        raw.push_back({std::min(u, par), std::max(u, par), {PathOrigin::PivotPath, j}});
      }
    }
  }
  for (Vertex u = 0; u < n; ++u) {
    const int lo = std::min(la.level(u), s.F - 1);
    const int hi = s.bunch_top(la.level(u));
    ShortestPathTree tree;
    for (const Bunch& b : compute_bunches(g, la, pt, u, lo, hi, half, &tree)) {
      for (const BunchMember& m : b.members) {
        if (m.d <= cap) add_tree_path(tree, m.v, {bunch_origin, b.level}, raw);
      }
    }
  }
  std::sort(raw.begin(), raw.end(), [](const RawEdge& a, const RawEdge& b) {
    return std::tie(a.u, a.v, a.p) < std::tie(b.u, b.v, b.p);
  });
  SpannerEdgeSet out;
  out.schedule = s;
  out.levels = la;
  for (const RawEdge& r : raw) {
    if (!out.edges.empty() && out.edges.back().u == r.u && out.edges.back().v == r.v) {
      auto& prov = out.edges.back().prov;
      if (prov.back() != r.p) prov.push_back(r.p);
      continue;
    }
    out.edges.push_back({r.u, r.v, {r.p}});
  }
  return out;
}

}  // namespace

Graph SpannerEdgeSet::as_graph(std::size_t n) const {
  std::vector<Edge> e;
  e.reserve(edges.size());
  for (const SpannerEdge& x : edges) e.push_back({x.u, x.v, 1.0});
  return Graph(n, std::move(e));
}

SpannerEdgeSet build_spanner_truncated(const Graph& g, const ParamSchedule& s,
                                       std::uint64_t seed) {
  require_unweighted(g);
  return build_spanner_truncated(g, s, sample_levels(g, s, seed));
}

SpannerEdgeSet build_spanner_truncated(const Graph& g, const ParamSchedule& s,
                                       const LevelAssignment& la) {
  if (s.variant != Variant::SpannerTruncated) {
    throw ScheduleError("truncated spanner needs a spanner-trunc schedule");
  }
  return build(g, s, la, false);
}

SpannerEdgeSet build_spanner_half(const Graph& g, const ParamSchedule& s,
                                  std::uint64_t seed) {
  require_unweighted(g);
  return build_spanner_half(g, s, sample_levels(g, s, seed));
}

SpannerEdgeSet build_spanner_half(const Graph& g, const ParamSchedule& s,
                                  const LevelAssignment& la) {
  if (s.variant != Variant::SpannerHalf) {
    throw ScheduleError("half-bunch spanner needs a spanner-half schedule");
  }
  return build(g, s, la, true);
}

SpannerSizeStats spanner_size_stats(const SpannerEdgeSet& s, std::size_t n) {
  SpannerSizeStats st;
  const int F = s.schedule.F;
  st.pivot_path_by_level.assign(F, 0);
  st.bunch_path_by_level.assign(F, 0);
  for (const SpannerEdge& e : s.edges) {
    int last_pivot = -1, last_bunch = -1;
    for (const SpannerProvenance& p : e.prov) {
      if (p.origin == PathOrigin::PivotPath) {
        if (p.level != last_pivot) ++st.pivot_path_by_level.at(p.level);
        last_pivot = p.level;
      } else {
        if (p.level != last_bunch) ++st.bunch_path_by_level.at(p.level);
        last_bunch = p.level;
      }
    }
  }
  st.total = s.edges.size();
  const double k = s.schedule.k;
  st.f_squared_bound =
      static_cast<double>(F) * F * std::pow(static_cast<double>(n), 1 + 1 / k);
  return st;
}

HalfBunchCheck half_bunch_edge_count_check(const Graph& g, const LevelAssignment& la,
                                           const PivotTable& pt,
                                           const ParamSchedule& s, int i, int j) {
  if (i < 0 || i >= s.F || j < i || j > s.bunch_top(i)) {
    throw std::invalid_argument("half-bunch check needs 0 <= i <= j <= f(i), j < F");
  }
  const std::size_t n = g.num_vertices();
  HalfBunchCheck out;
  out.rhs = n;
  std::unordered_set<std::uint64_t> q_edges;
  std::vector<RawEdge> scratch;
  for (Vertex u = 0; u < n; ++u) {
    if (la.level(u) < i) continue;
    const std::uint64_t b = compute_bunch(g, la, pt, u, j, false).members.size();
    out.rhs += 4 * b * b * b;
    if (std::min(la.level(u), s.F - 1) != i) continue;
    ShortestPathTree tree;
    const auto halves = compute_bunches(g, la, pt, u, j, j, true, &tree);
    scratch.clear();
    for (const BunchMember& m : halves.front().members) {
      add_tree_path(tree, m.v, {PathOrigin::HalfBunchPath, j}, scratch);
    }
    for (const RawEdge& e : scratch) {
      q_edges.insert((static_cast<std::uint64_t>(e.u) << 32) | e.v);
    }
  }
  out.lhs = q_edges.size();
  out.ok = out.lhs <= out.rhs;
  return out;
}

}  // namespace hopspan
