#include "hopspan/construction.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>
#include <string>

#include "hopspan/rng.hpp"

namespace hopspan {

std::vector<Vertex> LevelAssignment::members(int j) const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < levels.size(); ++v) {
    if (levels[v] >= j) out.push_back(v);
  }
  return out;
}

bool LevelAssignment::top_nonempty() const {
  return std::any_of(levels.begin(), levels.end(), [&](int l) { return l >= F; });
}

double promotion_probability(std::size_t n, const ParamSchedule& s, int j) {
  if (n <= 1) return 1.0;
  return std::pow(static_cast<double>(n), -s.lambda(j) / s.k);
}

LevelAssignment sample_levels(const Graph& g, const ParamSchedule& s,
                              std::uint64_t seed) {
  const std::size_t n = g.num_vertices();
  std::vector<double> prob(s.F);
  for (int j = 0; j < s.F; ++j) prob[j] = promotion_probability(n, s, j);
  LevelAssignment la;
  la.seed = seed;
  la.F = s.F;
  la.levels.assign(n, 0);
  for (Vertex u = 0; u < n; ++u) {
    int lvl = 0;
    while (lvl < s.F && to_unit(keyed_draw(seed, u, lvl)) < prob[lvl]) ++lvl;
    la.levels[u] = lvl;
  }
  return la;
}

LevelAssignment forced_levels(std::vector<int> levels, int F) {
  for (std::size_t v = 0; v < levels.size(); ++v) {
    if (levels[v] < 0 || levels[v] > F) {
      throw std::invalid_argument("forced level of vertex " + std::to_string(v) +
                                  " outside [0," + std::to_string(F) + "]");
    }
  }
  LevelAssignment la;
  la.levels = std::move(levels);
  la.F = F;
  la.forced = true;
  return la;
}

PivotTable compute_pivots(const Graph& g, const LevelAssignment& la) {
  const std::size_t n = g.num_vertices();
  if (la.size() != n) throw std::invalid_argument("level assignment size mismatch");
  PivotTable pt;
  pt.F = la.F;
  pt.pivot.assign(la.F + 1, std::vector<Vertex>(n, kNoVertex));
  pt.dist.assign(la.F + 1, std::vector<Weight>(n, kInfinity));
  pt.parent.assign(la.F + 1, std::vector<Vertex>(n, kNoVertex));
  for (int j = 0; j < la.F; ++j) {
    const std::vector<Vertex> src = la.members(j);
    if (src.empty()) continue;
    MultiSourceResult r = multi_source_dijkstra(g, src);
    pt.pivot[j] = std::move(r.nearest);
    pt.dist[j] = std::move(r.dist);
    pt.parent[j] = std::move(r.parent);
  }
  return pt;
}

Weight bunch_threshold(const PivotTable& pt, Vertex u, int j, bool half) {
  const Weight d = pt.d(j + 1, u);
  return half ? d / 2 : d;
}

std::vector<Bunch> compute_bunches(const Graph& g, const LevelAssignment& la,
                                   const PivotTable& pt, Vertex u, int lo, int hi,
                                   bool half, ShortestPathTree* tree) {
  if (lo < 0 || hi >= la.F || lo > hi + 1) {
    throw std::invalid_argument("bunch level range outside [0,F-1]");
  }
  std::vector<Bunch> out;
  if (lo > hi) return out;
  Weight bound = 0;
  for (int j = lo; j <= hi; ++j) bound = std::max(bound, bunch_threshold(pt, u, j, half));
  ShortestPathTree local = canonical_search(g, u, bound);
  for (int j = lo; j <= hi; ++j) {
    Bunch b;
    b.owner = u;
    b.level = j;
    b.half = half;
    const Weight thr = bunch_threshold(pt, u, j, half);
    for (Vertex v : local.settled) {
      if (la.in(v, j) && local.dist[v] < thr) b.members.push_back({v, local.dist[v]});
    }
    std::sort(b.members.begin(), b.members.end(),
              [](const BunchMember& a, const BunchMember& c) { return a.v < c.v; });
    out.push_back(std::move(b));
  }
  if (tree) *tree = std::move(local);
  return out;
}

Bunch compute_bunch(const Graph& g, const LevelAssignment& la, const PivotTable& pt,
                    Vertex u, int j, bool half) {
  return std::move(compute_bunches(g, la, pt, u, j, j, half).front());
}

int score(const PivotTable& pt, const LevelFunction& f,
          const std::vector<double>& radii, Vertex u) {
  const int F = pt.F;
  if (static_cast<int>(radii.size()) != F + 1) {
    throw std::invalid_argument("score needs radii r_0..r_F");
  }
  for (int i = F; i > 0; --i) {
    const Weight di = i == F ? kInfinity : pt.d(i, u);
    if (!(di > radii[i])) continue;
    const int lo = f.inverse(i - 1);
    assert(lo <= i - 1);
    bool ok = true;
    for (int j = lo; j <= i - 1 && ok; ++j) ok = pt.d(j, u) <= radii[j];
    if (ok) return i;
  }
  throw std::logic_error("score: empty defining set");
}

}  // namespace hopspan
