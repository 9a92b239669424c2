#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hopspan/graph.hpp"

namespace hopspan {

struct CageSpec {
  std::string name;
  int degree = 0;  // p + 1
  int girth = 0;
  std::size_t vertices = 0;
  Graph graph;
};

// "petersen", "heawood", "mcgee", "tutte-coxeter".
std::vector<std::string> cage_names();
// Throws std::invalid_argument for an unknown name.
CageSpec cage(const std::string& name);

// Cubic graph from LCF notation: Hamiltonian cycle 0..n-1 plus chords
// i -- i + jumps[i mod len], the pattern repeated `repeats` times.
Graph lcf_graph(const std::vector<int>& jumps, int repeats);

// Length of a shortest cycle; std::nullopt for forests. Unweighted input.
std::optional<int> girth(const Graph& g);

// Number of unordered pairs at hop distance exactly delta.
std::uint64_t count_delta_paths(const Graph& g, int delta);

// floor((γ-1)/(α+1)), the largest δ with (α+1)δ < γ.
int feasible_delta(int girth, int alpha);

struct GirthBound {
  double min_hopset_edges = 0;  // n p / (2 α δ²)
  double path_count_floor = 0;  // ½ n p^δ
  double usage_bound = 0;       // α δ² p^{δ-1}
  int beta_floor = 0;           // floor((k-2)/(α+1)), when k is given
};

GirthBound girth_bound_evaluate(double n, double p, int delta, double alpha, int k = 2);

struct UniquenessReport {
  std::uint64_t pairs = 0;         // pairs at distance δ
  std::uint64_t non_unique = 0;    // more than one shortest path
  std::uint64_t short_detours = 0; // second-shortest simple path <= αδ
  int min_second = -1;             // smallest second-shortest length seen, -1 if none
  bool ok = true;
};

// For every pair at distance δ: exactly one shortest path, and every other
// simple path is longer than αδ. Exhaustive.
UniquenessReport unique_shortest_paths_check(const Graph& g, int delta, double alpha);

struct UsageReport {
  std::uint64_t pairs = 0;        // distance-δ pairs
  std::uint64_t satisfied = 0;    // pairs with a ≤β-hop path of weight ≤ αδ
  std::uint64_t witnessed = 0;    // satisfied pairs with an intersecting used hopset edge
  std::uint64_t without_hopset = 0;  // satisfied pairs using no hopset edge
  std::vector<Edge> edges;           // hopset edges considered (w ≤ αδ)
  std::vector<std::uint64_t> degree; // δ-paths sharing a graph edge with each detour
  std::vector<std::uint64_t> usage;  // satisfied pairs whose witness includes the edge
  std::uint64_t max_degree = 0;
  double degree_bound = 0;  // α δ² p^{δ-1}
  bool ok = true;
};

// Unweighted (p+1)-regular g with girth > (α+1)δ and hopset h checked at
// hop budget beta < δ. Throws std::invalid_argument when a precondition fails.
UsageReport hopset_path_usage_check(const Graph& g, const std::vector<Edge>& h,
                                    double alpha, int delta, std::size_t beta);

}  // namespace hopspan
