// graph.hpp - undirected weighted graphs and the exact shortest-path machinery
// every construction and verifier in hopspan is checked against.
#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

namespace hopspan {

using Vertex = std::uint32_t;
using Weight = double;

inline constexpr Weight kInfinity = std::numeric_limits<Weight>::infinity();
inline constexpr Vertex kNoVertex = std::numeric_limits<Vertex>::max();

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  Weight w = 1.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Neighbor {
  Vertex to = 0;
  Weight w = 1.0;
  std::uint32_t edge = 0;  // index into Graph::edges()
};

// Immutable undirected graph on vertices 0..n-1 with CSR adjacency.
// Neighbor lists are sorted by id. No self-loops, no parallel edges,
// weights are finite and nonnegative.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);
  Graph(std::size_t n, std::vector<Edge> edges);

  [[nodiscard]] std::size_t num_vertices() const { return n_; }
  [[nodiscard]] std::size_t num_edges() const { return edges_.size(); }
  [[nodiscard]] std::span<const Edge> edges() const { return edges_; }
  [[nodiscard]] std::span<const Neighbor> neighbors(Vertex v) const {
    return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
  }
  [[nodiscard]] std::size_t degree(Vertex v) const {
    return offsets_[v + 1] - offsets_[v];
  }

  [[nodiscard]] std::optional<Weight> edge_weight(Vertex u, Vertex v) const;
  [[nodiscard]] bool has_edge(Vertex u, Vertex v) const {
    return edge_weight(u, v).has_value();
  }

  // True when every weight equals 1.
  [[nodiscard]] bool is_unweighted() const { return unweighted_; }
  [[nodiscard]] bool has_integral_weights() const { return integral_; }

  // Secondary per-edge key used to make shortest paths unique; a path's key
  // is the sum over its edges. Depends only on the unordered endpoint pair.
  [[nodiscard]] std::uint64_t tiebreak_key(std::uint32_t edge) const {
    return keys_[edge];
  }

  void check_vertex(Vertex v) const;

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Neighbor> adj_;
  std::vector<std::uint64_t> keys_;
  bool unweighted_ = true;
  bool integral_ = true;
};

std::uint64_t edge_tiebreak_key(Vertex u, Vertex v);

struct DistanceRow {
  Vertex source = 0;
  std::vector<Weight> dist;
  std::vector<Vertex> parent;  // kNoVertex for the source and unreachable
};

// Canonical single-source search. Paths are ordered by (length, sum of edge
// tiebreak keys); a remaining exact tie picks the smaller predecessor id.
// Every canonical path is therefore unique, symmetric and subpath-closed.
struct ShortestPathTree {
  Vertex source = 0;
  std::vector<Weight> dist;
  std::vector<std::uint64_t> key;
  std::vector<Vertex> parent;
  std::vector<Vertex> settled;  // in settle order

  [[nodiscard]] bool reached(Vertex v) const { return dist[v] < kInfinity; }
  // Vertices from source to v, inclusive; empty when v is unreachable.
  [[nodiscard]] std::vector<Vertex> path_to(Vertex v) const;
};

// Settles every vertex with distance <= bound; others stay at +inf.
ShortestPathTree canonical_search(const Graph& g, Vertex source,
                                  Weight bound = kInfinity);

DistanceRow dijkstra(const Graph& g, Vertex source);

struct MultiSourceResult {
  std::vector<Weight> dist;
  std::vector<Vertex> nearest;  // kNoVertex when unreachable
  // Predecessor toward nearest[v]; always shares nearest[v], so the parent
  // pointers of one source form a shortest-path tree of its cluster.
  std::vector<Vertex> parent;
};

MultiSourceResult multi_source_dijkstra(const Graph& g,
                                        std::span<const Vertex> sources);

// Breadth-first hop distances (ignores weights); -1 when unreachable.
std::vector<int> bfs_hops(const Graph& g, Vertex source);

// Canonical shortest path between u and v as edges oriented from u to v.
// std::nullopt when v is unreachable from u.
std::optional<std::vector<Edge>> shortest_path_edges(const Graph& g, Vertex u,
                                                     Vertex v);

// G together with auxiliary weighted edges. Parallel base/extra edges
// between the same pair collapse to the minimum weight. Holds a reference
// to the base graph, which must outlive it.
class AugmentedGraph {
 public:
  AugmentedGraph(const Graph& base, std::span<const Edge> extra);

  [[nodiscard]] const Graph& base() const { return *base_; }
  [[nodiscard]] std::span<const Edge> extra() const { return extra_; }
  [[nodiscard]] std::size_t num_vertices() const { return base_->num_vertices(); }
  [[nodiscard]] std::span<const Neighbor> neighbors(Vertex v) const {
    return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
  }
  [[nodiscard]] std::optional<Weight> edge_weight(Vertex u, Vertex v) const;

  // Recomputes d_G for every extra edge; false on the first mismatch.
  [[nodiscard]] bool extra_weights_exact() const;

 private:
  const Graph* base_;
  std::vector<Edge> extra_;
  std::vector<std::size_t> offsets_;
  std::vector<Neighbor> adj_;
};

// Distances using at most `max_hops` edges, round by round. Stops early once
// a round changes nothing; by then every further budget gives the same row.
class HopProfile {
 public:
  HopProfile(const AugmentedGraph& ag, Vertex source, std::size_t max_hops);

  [[nodiscard]] std::span<const Weight> at(std::size_t hops) const {
    return rounds_[std::min(hops, rounds_.size() - 1)];
  }
  [[nodiscard]] std::size_t rounds() const { return rounds_.size() - 1; }
  [[nodiscard]] bool stabilized() const { return stable_; }
  // Smallest h with d^(h)(source,v) <= limit, if any.
  [[nodiscard]] std::optional<std::size_t> min_hops_within(Vertex v,
                                                           Weight limit) const;

 private:
  std::vector<std::vector<Weight>> rounds_;
  bool stable_ = false;
};

Weight hop_bounded_distance(const AugmentedGraph& ag, Vertex u, Vertex v,
                            std::size_t beta);

// A minimum-weight u-v walk with at most beta edges, as its vertex sequence
// (u first); std::nullopt when no such walk exists.
std::optional<std::vector<Vertex>> hop_bounded_path(const AugmentedGraph& ag,
                                                    Vertex u, Vertex v,
                                                    std::size_t beta);

}  // namespace hopspan
