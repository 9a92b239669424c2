#pragma once

#include <cstdint>
#include <vector>

#include "hopspan/graph.hpp"
#include "hopspan/schedule.hpp"

namespace hopspan {

// Per-vertex level i(u) encoding V = A_0 ⊇ A_1 ⊇ ... ⊇ A_F.
struct LevelAssignment {
  std::vector<int> levels;
  std::uint64_t seed = 0;
  int F = 0;
  bool forced = false;

  [[nodiscard]] std::size_t size() const { return levels.size(); }
  [[nodiscard]] int level(Vertex v) const { return levels[v]; }
  [[nodiscard]] bool in(Vertex v, int j) const { return levels[v] >= j; }
  [[nodiscard]] std::vector<Vertex> members(int j) const;
  // A_F nonempty; the construction then proceeds as if it were empty.
  [[nodiscard]] bool top_nonempty() const;
};

// Promotion probability n^{-λ_j/k}.
double promotion_probability(std::size_t n, const ParamSchedule& s, int j);

LevelAssignment sample_levels(const Graph& g, const ParamSchedule& s,
                              std::uint64_t seed);
// Explicit table; every entry must lie in [0,F].
LevelAssignment forced_levels(std::vector<int> levels, int F);

// p_j(u) and d(u,p_j(u)) for j = 0..F. Row F is always undefined: a
// nonempty A_F is treated as empty, per the B_{F-1}(u) = A_{F-1} convention.
struct PivotTable {
  int F = 0;
  std::vector<std::vector<Vertex>> pivot;
  std::vector<std::vector<Weight>> dist;
  // Predecessor toward the pivot; each level's pointers form one
  // shortest-path tree per pivot cluster.
  std::vector<std::vector<Vertex>> parent;

  [[nodiscard]] Vertex p(int j, Vertex u) const { return pivot[j][u]; }
  [[nodiscard]] Weight d(int j, Vertex u) const { return dist[j][u]; }
};

PivotTable compute_pivots(const Graph& g, const LevelAssignment& la);

struct BunchMember {
  Vertex v = 0;
  Weight d = 0;
};

struct Bunch {
  Vertex owner = 0;
  int level = 0;
  bool half = false;
  std::vector<BunchMember> members;  // sorted by vertex id
};

// Radius below which A_j members belong to B_j(u) (or half of it).
Weight bunch_threshold(const PivotTable& pt, Vertex u, int j, bool half);

Bunch compute_bunch(const Graph& g, const LevelAssignment& la,
                    const PivotTable& pt, Vertex u, int j, bool half);

// B_lo(u) .. B_hi(u) from a single bounded search. When `tree` is given it
// receives that search so callers can read canonical paths to the members.
std::vector<Bunch> compute_bunches(const Graph& g, const LevelAssignment& la,
                                   const PivotTable& pt, Vertex u, int lo, int hi,
                                   bool half, ShortestPathTree* tree = nullptr);

// Score of u under `radii` (r_0..r_F); d(u,p_F(u)) counts as +inf.
int score(const PivotTable& pt, const LevelFunction& f,
          const std::vector<double>& radii, Vertex u);

}  // namespace hopspan
