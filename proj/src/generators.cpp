#include "hopspan/generators.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "hopspan/lowerbound.hpp"
#include "hopspan/rng.hpp"

namespace hopspan {

namespace {

std::uint64_t key(Vertex a, Vertex b) {
  return (static_cast<std::uint64_t>(std::min(a, b)) << 32) | std::max(a, b);
}

}  // namespace

Graph random_graph(const RandomGraphSpec& spec) {
  const std::size_t n = spec.n;
  const std::size_t max_m = n < 2 ? 0 : n * (n - 1) / 2;
  const std::size_t m = std::min(spec.m, max_m);
  if (spec.weighted && spec.max_weight < 1) {
    throw std::invalid_argument("max_weight must be >= 1");
  }
  SplitMix64 rng(spec.seed);
  std::unordered_set<std::uint64_t> seen;
  std::vector<Edge> edges;
  auto weight = [&] {
    return spec.weighted ? static_cast<Weight>(1 + rng.below(spec.max_weight)) : 1.0;
  };
  if (spec.connected && n >= 2) {
    std::vector<Vertex> order(n);
    for (Vertex v = 0; v < n; ++v) order[v] = v;
    for (std::size_t i = n - 1; i > 0; --i) std::swap(order[i], order[rng.below(i + 1)]);
    for (std::size_t i = 1; i < n && edges.size() < m; ++i) {
      const Vertex a = order[i];
      const Vertex b = order[rng.below(i)];
      seen.insert(key(a, b));
      edges.push_back({std::min(a, b), std::max(a, b), weight()});
    }
  }
  while (edges.size() < m) {
    const Vertex a = static_cast<Vertex>(rng.below(n));
    const Vertex b = static_cast<Vertex>(rng.below(n));
    if (a == b || !seen.insert(key(a, b)).second) continue;
    edges.push_back({std::min(a, b), std::max(a, b), weight()});
  }
  return Graph(n, std::move(edges));
}

Graph path_graph(std::size_t n, Weight w) {
  std::vector<Edge> e;
  for (Vertex v = 1; v < n; ++v) e.push_back({v - 1, v, w});
  return Graph(n, std::move(e));
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  std::vector<Edge> e;
  for (Vertex v = 0; v < n; ++v) e.push_back({v, static_cast<Vertex>((v + 1) % n), 1});
  return Graph(n, std::move(e));
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) e.push_back({u, v, 1});
  }
  return Graph(n, std::move(e));
}

Graph star_graph(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex v = 1; v < n; ++v) e.push_back({0, v, 1});
  return Graph(n, std::move(e));
}

std::optional<Graph> random_regular_with_girth(std::size_t n, int d, int min_girth,
                                               std::uint64_t seed, int max_tries) {
  if (d < 1 || n * static_cast<std::size_t>(d) % 2 != 0 || static_cast<std::size_t>(d) >= n) {
    throw std::invalid_argument("no simple d-regular graph on n vertices");
  }
  SplitMix64 rng(seed);
  for (int attempt = 0; attempt < max_tries; ++attempt) {
    std::vector<Vertex> points;
    for (Vertex v = 0; v < n; ++v) {
      for (int i = 0; i < d; ++i) points.push_back(v);
    }
    for (std::size_t i = points.size() - 1; i > 0; --i) {
      std::swap(points[i], points[rng.below(i + 1)]);
    }
    std::unordered_set<std::uint64_t> seen;
    std::vector<Edge> edges;
    bool simple = true;
    for (std::size_t i = 0; i + 1 < points.size() && simple; i += 2) {
      const Vertex a = points[i], b = points[i + 1];
      if (a == b || !seen.insert(key(a, b)).second) simple = false;
      edges.push_back({std::min(a, b), std::max(a, b), 1});
    }
    if (!simple) continue;
    Graph g(n, std::move(edges));
    const auto gi = girth(g);
    if (!gi || *gi >= min_girth) return g;
  }
  return std::nullopt;
}

}  // namespace hopspan
