#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "hopspan/construction.hpp"
#include "hopspan/graph.hpp"
#include "hopspan/schedule.hpp"

namespace hopspan {

struct TraceHop {
  Vertex from = 0;
  Vertex to = 0;
  Weight w = 0;
  bool hopset_edge = false;  // false: the cheaper (or only) copy is a graph edge
};

struct TraceSegment {
  Vertex head = 0;      // v_j
  Vertex end = 0;       // v_{j+1}, or v for the final segment
  int score = 0;        // score(v_j) under the rescaled radii
  Weight length = 0;    // d(v_j, end)
  Weight weight = 0;    // weight of the emitted hops
  std::size_t hops = 0;
  bool final = false;
};

struct JumpCertificate {
  Vertex u = 0;
  Vertex v = 0;
  double t = 1;
  Weight d = 0;
  bool applicable = true;  // false when d(u,v) is 0 or infinite
  bool ok = true;
  std::string diagnostic;  // names the failing step when !ok or !applicable
  std::vector<double> radii;  // rescaled r'_0..r'_F used for this pair
  std::vector<TraceSegment> segments;
  std::vector<TraceHop> hops;
  Weight weight = 0;
  std::size_t hop_count = 0;
  double weight_bound = 0;      // (2t+3) d
  std::size_t hop_budget = 0;   // ceil(4 r_F) + 3
  double min_segment = 0;       // (4/t) r'_0
};

struct ShortcutResult {
  bool applicable = false;
  bool ok = false;
  std::string diagnostic;
  int i_star = -1;
  Vertex via = kNoVertex;
  std::vector<TraceHop> hops;
  Weight weight = 0;
  Weight d = 0;
  double bound = 0;  // (2c+1) d
};

// Replays the hopbound/stretch argument on concrete pairs. Edge existence and
// weights are re-read from the graph and the raw hopset edge list, never from
// builder provenance.
class JumpTracer {
 public:
  JumpTracer(const Graph& g, const std::vector<Edge>& hopset, const ParamSchedule& s,
             const LevelAssignment& la, const PivotTable& pt);

  // Uses s.t; radii are rescaled per pair as r'_i = t d(u,v) r_i / (4 r_F).
  [[nodiscard]] JumpCertificate trace(Vertex u, Vertex v) const;
  [[nodiscard]] ShortcutResult shortcut(Vertex x, Vertex y, int c) const;

 private:
  // Cheapest direct connection between a and b in G ∪ H.
  [[nodiscard]] bool link(Vertex a, Vertex b, TraceHop& hop) const;
  // u -> p_{f^{-1}(i-1)}(u) -> p_{i-1}(u') -> u', skipping zero-length steps.
  bool jump(Vertex a, Vertex b, int i, std::vector<TraceHop>& out,
            std::string& why) const;

  const Graph& g_;
  const ParamSchedule& s_;
  const LevelAssignment& la_;
  const PivotTable& pt_;
  std::unordered_map<std::uint64_t, Weight> h_;
};

JumpCertificate trace_jump_path(const Graph& g, const std::vector<Edge>& hopset,
                                const ParamSchedule& s, const LevelAssignment& la,
                                const PivotTable& pt, Vertex u, Vertex v);

ShortcutResult trace_low_level_shortcut(const Graph& g, const std::vector<Edge>& hopset,
                                        const ParamSchedule& s,
                                        const LevelAssignment& la,
                                        const PivotTable& pt, Vertex x, Vertex y, int c);

}  // namespace hopspan
