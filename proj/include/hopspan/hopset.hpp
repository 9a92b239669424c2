#pragma once

#include <cstdint>
#include <vector>

#include "hopspan/construction.hpp"
#include "hopspan/graph.hpp"
#include "hopspan/schedule.hpp"

namespace hopspan {

enum class Origin : std::uint8_t { Pivot, Bunch };

struct Provenance {
  Origin origin = Origin::Pivot;
  int level = 0;

  friend bool operator==(const Provenance&, const Provenance&) = default;
  friend auto operator<=>(const Provenance&, const Provenance&) = default;
};

struct HopsetEdge {
  Vertex x = 0;  // x < y
  Vertex y = 0;
  Weight w = 0;
  std::vector<Provenance> prov;  // sorted, unique

  // Pivot provenance wins over bunch provenance, lower level first.
  [[nodiscard]] const Provenance& primary() const { return prov.front(); }
};

struct HopsetEdgeSet {
  std::vector<HopsetEdge> edges;  // sorted by (x, y)
  ParamSchedule schedule;
  LevelAssignment levels;

  [[nodiscard]] std::size_t size() const { return edges.size(); }
  [[nodiscard]] std::vector<Edge> plain() const;
};

HopsetEdgeSet build_hopset(const Graph& g, const ParamSchedule& s, std::uint64_t seed);
HopsetEdgeSet build_hopset(const Graph& g, const ParamSchedule& s,
                           const LevelAssignment& la);
// Same, reusing an already computed pivot table for `la`.
HopsetEdgeSet build_hopset(const Graph& g, const ParamSchedule& s,
                           const LevelAssignment& la, const PivotTable& pt);

struct HopsetSizeStats {
  std::size_t total = 0;
  std::size_t pivot = 0;  // edges whose primary provenance is a pivot edge
  std::size_t bunch = 0;
  std::vector<std::size_t> pivot_by_level;
  std::vector<std::size_t> bunch_by_level;
  double f_squared_bound = 0;  // F^2 n^{1+1/k}
  double linear_bound = 0;     // k n^{1+1/k}
  double log_bound = 0;        // log2(k) n^{1+1/k}, k >= 2
};

HopsetSizeStats hopset_size_stats(const HopsetEdgeSet& h, std::size_t n);

}  // namespace hopspan
