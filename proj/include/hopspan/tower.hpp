#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "hopspan/construction.hpp"
#include "hopspan/graph.hpp"
#include "hopspan/rational.hpp"
#include "hopspan/schedule.hpp"

namespace hopspan {

struct ConstructionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct TowerOptions {
  int k = 2;
  LevelFunction f = LevelFunction::identity();
  std::int64_t alpha = 2;
  int a = 1;  // n = 2^{2ka}
  // Desk-scale overrides; any of them marks the instance non-asymptotic.
  std::optional<std::int64_t> layer_mult;  // replaces log2(n)
  std::optional<std::size_t> copies;       // replaces n^{1/(2k)}
  std::optional<std::size_t> tower_size;   // replaces n^{1-1/(2k)}
  std::size_t max_edges = 20'000'000;
};

struct TowerGraph {
  Graph graph;
  int k = 2;
  LevelFunction f;
  std::int64_t alpha = 2;
  int a = 1;
  std::size_t copies = 0;
  std::size_t tower_size = 0;
  std::int64_t layer_mult = 0;
  std::vector<std::size_t> layer_size;    // per layer, identical across towers
  std::vector<std::size_t> layer_offset;  // first id of layer i within a tower
  ParamSchedule schedule;                 // hopset schedule, t = 4α
  std::vector<Rational> radii;            // lower-bound radii r_0..r_{F-1}
  std::int64_t scale = 1;                 // every weight is multiplied by this
  bool non_asymptotic = false;

  [[nodiscard]] int F() const { return schedule.F; }
  [[nodiscard]] Vertex first(std::size_t c, int layer) const {
    return static_cast<Vertex>(c * tower_size + layer_offset[layer]);
  }
  [[nodiscard]] std::size_t tower_of(Vertex v) const { return v / tower_size; }
  [[nodiscard]] int layer_of(Vertex v) const;
  // d(x,y) for x in L_{c,i}, y in L_{d,j}, c != d, in scaled units.
  [[nodiscard]] Weight cross_distance(std::size_t c, int i, std::size_t d, int j) const;
};

// Throws ConstructionError when the layer sizes do not fit in a tower or the
// instance exceeds max_edges.
TowerGraph build_tower_graph(const TowerOptions& opt);

// One designated vertex of every layer L_{c,j} gets level j, all others 0.
LevelAssignment tower_forced_levels(const TowerGraph& tg);

struct PlacementReport {
  // ok[c][j]: L_{c,j} meets A_j and, below the top layer, misses A_{j+1}.
  std::vector<std::vector<bool>> ok;
  bool all = true;
};

PlacementReport check_level_placement(const TowerGraph& tg, const LevelAssignment& la);

// e^{-4k n^{-1/(4k)}}
double placement_probability_bound(int k, double n);

struct CrossTowerViolation {
  Vertex x = 0;
  Vertex y = 0;
  Weight w = 0;      // unscaled
  double bound = 0;  // (α+1)(|d-c|-2)
};

struct CrossTowerReport {
  std::size_t checked = 0;  // cross-tower edges with both layers below F-2
  std::size_t exempt = 0;
  std::vector<CrossTowerViolation> violations;
  double min_slack = 0;  // min of w - bound over checked edges
  bool ok = true;
};

CrossTowerReport check_cross_tower_edges(const TowerGraph& tg, const std::vector<Edge>& h);

struct TowerFloor {
  double r_F2 = 0;          // r_{F-2} under the lower-bound recurrence
  double beta_floor = 0;    // (r_{F-2} - 1) / (5α²)
  double closed_form = 0;   // (1/8) k^{1 + 1/(2 log2 α)}
  Rational Lambda_F2;       // Λ_{F-2}
  bool radius_ok = true;    // r_{F-2} >= closed_form
  bool lambda_ok = true;    // Λ_{F-2} >= (k+2)/4
};

// Needs F >= 2 and α >= 2.
TowerFloor tower_floor(int k, const LevelFunction& f, double alpha);

struct TowerRun {
  std::uint64_t seed = 0;  // 0 in forced mode
  bool forced = true;
  bool placement_ok = true;
  std::size_t hopset_size = 0;
  std::optional<std::size_t> beta_star;
  CrossTowerReport cross;
};

struct TowerExperiment {
  TowerFloor floor;
  std::vector<TowerRun> runs;
  bool pass = true;  // every placement-valid run meets the floor with no violations
};

// Forced run always; one sampled run per seed.
TowerExperiment tower_hopbound_experiment(const TowerGraph& tg,
                                          const std::vector<std::uint64_t>& seeds,
                                          unsigned threads = 1);

}  // namespace hopspan
