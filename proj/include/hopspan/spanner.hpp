#pragma once

#include <cstdint>
#include <vector>

#include "hopspan/construction.hpp"
#include "hopspan/graph.hpp"
#include "hopspan/schedule.hpp"

namespace hopspan {

enum class PathOrigin : std::uint8_t { PivotPath, BunchPath, HalfBunchPath };

struct SpannerProvenance {
  PathOrigin origin = PathOrigin::PivotPath;
  int level = 0;

  friend bool operator==(const SpannerProvenance&, const SpannerProvenance&) = default;
  friend auto operator<=>(const SpannerProvenance&, const SpannerProvenance&) = default;
};

struct SpannerEdge {
  Vertex u = 0;  // u < v
  Vertex v = 0;
  std::vector<SpannerProvenance> prov;  // sorted, unique
};

struct SpannerEdgeSet {
  std::vector<SpannerEdge> edges;  // sorted by (u, v)
  ParamSchedule schedule;
  LevelAssignment levels;

  [[nodiscard]] std::size_t size() const { return edges.size(); }
  [[nodiscard]] Graph as_graph(std::size_t n) const;
};

// S(k,f,t): pivot-path forests plus canonical paths to bunch members at
// distance <= floor(r_F). Input must be unweighted.
SpannerEdgeSet build_spanner_truncated(const Graph& g, const ParamSchedule& s,
                                       std::uint64_t seed);
SpannerEdgeSet build_spanner_truncated(const Graph& g, const ParamSchedule& s,
                                       const LevelAssignment& la);

// S(k,f): pivot-path forests plus canonical paths to half-bunch members.
SpannerEdgeSet build_spanner_half(const Graph& g, const ParamSchedule& s,
                                  std::uint64_t seed);
SpannerEdgeSet build_spanner_half(const Graph& g, const ParamSchedule& s,
                                  const LevelAssignment& la);

struct SpannerSizeStats {
  std::size_t total = 0;
  std::vector<std::size_t> pivot_path_by_level;  // edges carrying that provenance
  std::vector<std::size_t> bunch_path_by_level;
  double f_squared_bound = 0;  // F^2 n^{1+1/k}
};

SpannerSizeStats spanner_size_stats(const SpannerEdgeSet& s, std::size_t n);

struct HalfBunchCheck {
  std::uint64_t lhs = 0;  // |E(Q_{i,j})|
  std::uint64_t rhs = 0;  // n + 4 Σ_{u∈A_i} |B_j(u)|^3
  bool ok = true;
};

// Owners are the vertices of level exactly i (top level capped at F-1).
HalfBunchCheck half_bunch_edge_count_check(const Graph& g, const LevelAssignment& la,
                                           const PivotTable& pt,
                                           const ParamSchedule& s, int i, int j);

}  // namespace hopspan
