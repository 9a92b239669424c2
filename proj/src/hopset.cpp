#include "hopspan/hopset.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>
#include <utility>

namespace hopspan {

std::vector<Edge> HopsetEdgeSet::plain() const {
  std::vector<Edge> out;
  out.reserve(edges.size());
  for (const HopsetEdge& e : edges) out.push_back({e.x, e.y, e.w});
  return out;
}

HopsetEdgeSet build_hopset(const Graph& g, const ParamSchedule& s, std::uint64_t seed) {
  return build_hopset(g, s, sample_levels(g, s, seed));
}

HopsetEdgeSet build_hopset(const Graph& g, const ParamSchedule& s,
                           const LevelAssignment& la) {
  return build_hopset(g, s, la, compute_pivots(g, la));
}

HopsetEdgeSet build_hopset(const Graph& g, const ParamSchedule& s,
                           const LevelAssignment& la, const PivotTable& pt) {
  if (s.variant != Variant::Hopset) {
    throw ScheduleError("build_hopset needs a hopset schedule, got " +
                        variant_name(s.variant));
  }
  if (la.F != s.F || la.size() != g.num_vertices()) {
    throw std::invalid_argument("level assignment does not match graph/schedule");
  }
  struct Raw {
    Vertex x, y;
    Weight w;
    Provenance p;
  };
  std::vector<Raw> raw;
  auto add = [&](Vertex a, Vertex b, Weight w, Provenance p) {
    if (a == b) return;
    raw.push_back({std::min(a, b), std::max(a, b), w, p});
  };
  const std::size_t n = g.num_vertices();
  for (Vertex u = 0; u < n; ++u) {
    for (int j = 0; j < s.F; ++j) {
      const Vertex p = pt.p(j, u);
      if (p != kNoVertex) add(u, p, pt.d(j, u), {Origin::Pivot, j});
    }
    const int lo = std::min(la.level(u), s.F - 1);
    const int hi = s.bunch_top(la.level(u));
    for (const Bunch& b : compute_bunches(g, la, pt, u, lo, hi, false)) {
      for (const BunchMember& m : b.members) add(u, m.v, m.d, {Origin::Bunch, b.level});
    }
  }
  std::sort(raw.begin(), raw.end(), [](const Raw& a, const Raw& b) {
    return std::tie(a.x, a.y, a.p) < std::tie(b.x, b.y, b.p);
  });
  HopsetEdgeSet h;
  h.schedule = s;
  h.levels = la;
  for (const Raw& r : raw) {
    if (!h.edges.empty() && h.edges.back().x == r.x && h.edges.back().y == r.y) {
      auto& prov = h.edges.back().prov;
      h.edges.back().w = std::min(h.edges.back().w, r.w);
      if (prov.back() != r.p) prov.push_back(r.p);
      continue;
    }
    h.edges.push_back({r.x, r.y, r.w, {r.p}});
  }
  return h;
}

HopsetSizeStats hopset_size_stats(const HopsetEdgeSet& h, std::size_t n) {
  HopsetSizeStats st;
  const int F = h.schedule.F;
  st.pivot_by_level.assign(std::max(F, 0), 0);
  st.bunch_by_level.assign(std::max(F, 0), 0);
  for (const HopsetEdge& e : h.edges) {
    const Provenance& p = e.primary();
    if (p.origin == Origin::Pivot) {
      ++st.pivot;
      ++st.pivot_by_level.at(p.level);
    } else {
      ++st.bunch;
      ++st.bunch_by_level.at(p.level);
    }
  }
  st.total = h.edges.size();
  const double k = h.schedule.k;
  const double base = std::pow(static_cast<double>(n), 1 + 1 / k);
  st.f_squared_bound = static_cast<double>(F) * F * base;
  st.linear_bound = k * base;
  st.log_bound = std::log2(std::max(k, 2.0)) * base;
  return st;
}

}  // namespace hopspan
