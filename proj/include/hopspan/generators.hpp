#pragma once

#include <cstdint>
#include <optional>

#include "hopspan/graph.hpp"

namespace hopspan {

struct RandomGraphSpec {
  std::size_t n = 0;
  std::size_t m = 0;
  std::uint64_t seed = 1;
  bool weighted = false;
  std::uint32_t max_weight = 10;  // integer weights drawn from [1, max_weight]
  bool connected = true;          // start from a random spanning tree
};

// Simple graph with min(m, n(n-1)/2) edges, deterministic per spec.
Graph random_graph(const RandomGraphSpec& spec);

Graph path_graph(std::size_t n, Weight w = 1);
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph star_graph(std::size_t n);

// Random d-regular simple graph with girth >= min_girth via the pairing
// model and rejection; std::nullopt after max_tries failures.
std::optional<Graph> random_regular_with_girth(std::size_t n, int d, int min_girth,
                                               std::uint64_t seed, int max_tries = 2000);

}  // namespace hopspan
