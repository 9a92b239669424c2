#include "hopspan/graph.hpp"

#include <cmath>
#include <queue>
#include <stdexcept>
#include <string>
#include <tuple>

namespace hopspan {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

template <class Nb>
void build_csr(std::size_t n, const std::vector<std::tuple<Vertex, Nb>>& half_edges,
               std::vector<std::size_t>& offsets, std::vector<Nb>& adj) {
  offsets.assign(n + 1, 0);
  for (const auto& [from, nb] : half_edges) ++offsets[from + 1];
  for (std::size_t i = 0; i < n; ++i) offsets[i + 1] += offsets[i];
  adj.resize(half_edges.size());
  std::vector<std::size_t> fill(offsets.begin(), offsets.end() - 1);
  for (const auto& [from, nb] : half_edges) adj[fill[from]++] = nb;
  for (std::size_t v = 0; v < n; ++v) {
    std::sort(adj.begin() + offsets[v], adj.begin() + offsets[v + 1],
              [](const Nb& a, const Nb& b) { return a.to < b.to; });
  }
}

std::optional<Weight> lookup(std::span<const Neighbor> nbrs, Vertex v) {
  auto it = std::lower_bound(nbrs.begin(), nbrs.end(), v,
                             [](const Neighbor& a, Vertex x) { return a.to < x; });
  if (it == nbrs.end() || it->to != v) return std::nullopt;
  return it->w;
}

}  // namespace

std::uint64_t edge_tiebreak_key(Vertex u, Vertex v) {
  const std::uint64_t lo = std::min(u, v);
  const std::uint64_t hi = std::max(u, v);
  // 40 bits leaves room to sum keys along any path of < 2^24 edges.
  return (splitmix64((lo << 32) | hi) >> 24) + 1;
}

Graph::Graph(std::size_t n) : n_(n), offsets_(n + 1, 0) {}

Graph::Graph(std::size_t n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges)) {
  if (n >= kNoVertex) throw std::invalid_argument("graph too large");
  std::vector<std::tuple<Vertex, Neighbor>> half;
  half.reserve(2 * edges_.size());
  keys_.reserve(edges_.size());
  for (std::uint32_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.u >= n || e.v >= n) {
      throw std::invalid_argument("edge endpoint out of range: " +
                                  std::to_string(e.u) + " " + std::to_string(e.v));
    }
    if (e.u == e.v) {
      throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
    }
    if (!(e.w >= 0.0) || !std::isfinite(e.w)) {
      throw std::invalid_argument("edge weight must be finite and nonnegative");
    }
    if (e.w != 1.0) unweighted_ = false;
    if (e.w != std::floor(e.w)) integral_ = false;
    half.emplace_back(e.u, Neighbor{e.v, e.w, i});
    half.emplace_back(e.v, Neighbor{e.u, e.w, i});
    keys_.push_back(edge_tiebreak_key(e.u, e.v));
  }
  build_csr(n_, half, offsets_, adj_);
  for (Vertex v = 0; v < n_; ++v) {
    auto nb = neighbors(v);
    for (std::size_t i = 1; i < nb.size(); ++i) {
      if (nb[i].to == nb[i - 1].to) {
        throw std::invalid_argument("parallel edge between " + std::to_string(v) +
                                    " and " + std::to_string(nb[i].to));
      }
    }
  }
}

std::optional<Weight> Graph::edge_weight(Vertex u, Vertex v) const {
  if (u >= n_ || v >= n_) return std::nullopt;
  return lookup(neighbors(u), v);
}

void Graph::check_vertex(Vertex v) const {
  if (v >= n_) {
    throw std::invalid_argument("vertex " + std::to_string(v) +
                                " out of range for n=" + std::to_string(n_));
  }
}

std::vector<Vertex> ShortestPathTree::path_to(Vertex v) const {
  std::vector<Vertex> path;
  if (!reached(v)) return path;
  for (Vertex x = v; x != kNoVertex; x = parent[x]) path.push_back(x);
  std::reverse(path.begin(), path.end());
  return path;
}

ShortestPathTree canonical_search(const Graph& g, Vertex source, Weight bound) {
  g.check_vertex(source);
  const std::size_t n = g.num_vertices();
  ShortestPathTree t;
  t.source = source;
  t.dist.assign(n, kInfinity);
  t.key.assign(n, 0);
  t.parent.assign(n, kNoVertex);
  std::vector<char> done(n, 0);

  using Item = std::tuple<Weight, std::uint64_t, Vertex>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  t.dist[source] = 0;
  pq.emplace(0.0, 0, source);
  while (!pq.empty()) {
    auto [d, k, u] = pq.top();
    pq.pop();
    if (done[u] || d != t.dist[u] || k != t.key[u]) continue;
    if (d > bound) break;
    done[u] = 1;
    t.settled.push_back(u);
    for (const Neighbor& nb : g.neighbors(u)) {
      const Vertex v = nb.to;
      if (done[v]) continue;
      const Weight nd = d + nb.w;
      if (nd > bound) continue;
      const std::uint64_t nk = k + g.tiebreak_key(nb.edge);
      if (nd < t.dist[v] || (nd == t.dist[v] && nk < t.key[v])) {
        t.dist[v] = nd;
        t.key[v] = nk;
        t.parent[v] = u;
        pq.emplace(nd, nk, v);
      } else if (nd == t.dist[v] && nk == t.key[v] && u < t.parent[v]) {
        t.parent[v] = u;
      }
    }
  }
  // Tentative labels beyond the bound are not final.
  for (Vertex v = 0; v < n; ++v) {
    if (!done[v]) {
      t.dist[v] = kInfinity;
      t.key[v] = 0;
      t.parent[v] = kNoVertex;
    }
  }
  return t;
}

DistanceRow dijkstra(const Graph& g, Vertex source) {
  ShortestPathTree t = canonical_search(g, source);
  return DistanceRow{source, std::move(t.dist), std::move(t.parent)};
}

MultiSourceResult multi_source_dijkstra(const Graph& g,
                                        std::span<const Vertex> sources) {
  if (sources.empty()) {
    throw std::invalid_argument("multi_source_dijkstra: empty source set");
  }
  const std::size_t n = g.num_vertices();
  MultiSourceResult r;
  r.dist.assign(n, kInfinity);
  r.nearest.assign(n, kNoVertex);
  r.parent.assign(n, kNoVertex);
  std::vector<char> done(n, 0);

  // Lexicographic (distance, source id) labels.
  using Item = std::tuple<Weight, Vertex, Vertex>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  for (Vertex s : sources) {
    g.check_vertex(s);
    if (r.dist[s] == 0 && r.nearest[s] <= s) continue;
    r.dist[s] = 0;
    r.nearest[s] = s;
    pq.emplace(0.0, s, s);
  }
  while (!pq.empty()) {
    auto [d, src, u] = pq.top();
    pq.pop();
    if (done[u] || d != r.dist[u] || src != r.nearest[u]) continue;
    done[u] = 1;
    for (const Neighbor& nb : g.neighbors(u)) {
      const Vertex v = nb.to;
      if (done[v]) continue;
      const Weight nd = d + nb.w;
      if (nd < r.dist[v] || (nd == r.dist[v] && src < r.nearest[v])) {
        r.dist[v] = nd;
        r.nearest[v] = src;
        r.parent[v] = u;
        pq.emplace(nd, src, v);
      } else if (nd == r.dist[v] && src == r.nearest[v] && u < r.parent[v]) {
        r.parent[v] = u;
      }
    }
  }
  return r;
}

std::vector<int> bfs_hops(const Graph& g, Vertex source) {
  g.check_vertex(source);
  std::vector<int> hops(g.num_vertices(), -1);
  std::vector<Vertex> queue{source};
  hops[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    for (const Neighbor& nb : g.neighbors(u)) {
      if (hops[nb.to] < 0) {
        hops[nb.to] = hops[u] + 1;
        queue.push_back(nb.to);
      }
    }
  }
  return hops;
}

std::optional<std::vector<Edge>> shortest_path_edges(const Graph& g, Vertex u,
                                                     Vertex v) {
  g.check_vertex(v);
  const ShortestPathTree t = canonical_search(g, u);
  if (!t.reached(v)) return std::nullopt;
  const std::vector<Vertex> path = t.path_to(v);
  std::vector<Edge> out;
  out.reserve(path.size());
  for (std::size_t i = 1; i < path.size(); ++i) {
    out.push_back(Edge{path[i - 1], path[i], *g.edge_weight(path[i - 1], path[i])});
  }
  return out;
}

AugmentedGraph::AugmentedGraph(const Graph& base, std::span<const Edge> extra)
    : base_(&base), extra_(extra.begin(), extra.end()) {
  const std::size_t n = base.num_vertices();
  std::vector<std::tuple<Vertex, Neighbor>> half;
  half.reserve(2 * (base.num_edges() + extra_.size()));
  for (const Edge& e : base.edges()) {
    half.emplace_back(e.u, Neighbor{e.v, e.w, 0});
    half.emplace_back(e.v, Neighbor{e.u, e.w, 0});
  }
  for (const Edge& e : extra_) {
    if (e.u >= n || e.v >= n) {
      throw std::invalid_argument("auxiliary edge endpoint out of range");
    }
    if (e.u == e.v) continue;
    half.emplace_back(e.u, Neighbor{e.v, e.w, 1});
    half.emplace_back(e.v, Neighbor{e.u, e.w, 1});
  }
  std::vector<std::size_t> offsets;
  std::vector<Neighbor> adj;
  build_csr(n, half, offsets, adj);
  // Collapse parallel entries to their minimum weight.
  offsets_.assign(n + 1, 0);
  adj_.reserve(adj.size());
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t i = offsets[v]; i < offsets[v + 1]; ++i) {
      if (adj_.size() > offsets_[v] && adj_.back().to == adj[i].to) {
        adj_.back().w = std::min(adj_.back().w, adj[i].w);
      } else {
        adj_.push_back(adj[i]);
      }
    }
    offsets_[v + 1] = adj_.size();
  }
}

std::optional<Weight> AugmentedGraph::edge_weight(Vertex u, Vertex v) const {
  if (u >= num_vertices() || v >= num_vertices()) return std::nullopt;
  return lookup(neighbors(u), v);
}

bool AugmentedGraph::extra_weights_exact() const {
  std::vector<std::vector<Edge>> by_source(num_vertices());
  for (const Edge& e : extra_) by_source[e.u].push_back(e);
  for (Vertex s = 0; s < num_vertices(); ++s) {
    if (by_source[s].empty()) continue;
    const DistanceRow row = dijkstra(*base_, s);
    for (const Edge& e : by_source[s]) {
      if (row.dist[e.v] != e.w) return false;
    }
  }
  return true;
}

HopProfile::HopProfile(const AugmentedGraph& ag, Vertex source,
                       std::size_t max_hops) {
  const std::size_t n = ag.num_vertices();
  if (source >= n) throw std::invalid_argument("HopProfile: source out of range");
  std::vector<Weight> cur(n, kInfinity);
  cur[source] = 0;
  rounds_.push_back(cur);
  for (std::size_t h = 1; h <= max_hops; ++h) {
    const std::vector<Weight>& prev = rounds_.back();
    std::vector<Weight> next = prev;
    bool changed = false;
    for (Vertex u = 0; u < n; ++u) {
      const Weight du = prev[u];
      if (du == kInfinity) continue;
      for (const Neighbor& nb : ag.neighbors(u)) {
        const Weight cand = du + nb.w;
        if (cand < next[nb.to]) {
          next[nb.to] = cand;
          changed = true;
        }
      }
    }
    if (!changed) {
      stable_ = true;
      break;
    }
    rounds_.push_back(std::move(next));
  }
  if (!stable_ && rounds_.size() - 1 >= n) stable_ = true;
}

std::optional<std::size_t> HopProfile::min_hops_within(Vertex v,
                                                       Weight limit) const {
  for (std::size_t h = 0; h < rounds_.size(); ++h) {
    if (rounds_[h][v] < kInfinity && rounds_[h][v] <= limit) return h;
  }
  return std::nullopt;
}

Weight hop_bounded_distance(const AugmentedGraph& ag, Vertex u, Vertex v,
                            std::size_t beta) {
  if (v >= ag.num_vertices()) {
    throw std::invalid_argument("hop_bounded_distance: vertex out of range");
  }
  if (u == v) return 0;
  return HopProfile(ag, u, beta).at(beta)[v];
}

std::optional<std::vector<Vertex>> hop_bounded_path(const AugmentedGraph& ag,
                                                    Vertex u, Vertex v,
                                                    std::size_t beta) {
  const std::size_t n = ag.num_vertices();
  if (u >= n || v >= n) throw std::invalid_argument("hop_bounded_path: vertex out of range");
  std::vector<std::vector<Weight>> dist{std::vector<Weight>(n, kInfinity)};
  std::vector<std::vector<Vertex>> par{std::vector<Vertex>(n, kNoVertex)};
  dist[0][u] = 0;
  for (std::size_t h = 1; h <= beta; ++h) {
    std::vector<Weight> next = dist.back();
    std::vector<Vertex> np(n, kNoVertex);
    bool changed = false;
    for (Vertex x = 0; x < n; ++x) {
      const Weight dx = dist.back()[x];
      if (dx == kInfinity) continue;
      for (const Neighbor& nb : ag.neighbors(x)) {
        if (dx + nb.w < next[nb.to]) {
          next[nb.to] = dx + nb.w;
          np[nb.to] = x;
          changed = true;
        }
      }
    }
    if (!changed) break;
    dist.push_back(std::move(next));
    par.push_back(std::move(np));
  }
  if (dist.back()[v] == kInfinity) return std::nullopt;
  std::vector<Vertex> walk{v};
  Vertex x = v;
  for (std::size_t h = dist.size() - 1; h > 0; --h) {
    // Round h improved x only if its parent pointer is set; otherwise the
    // value was inherited from round h-1.
    if (par[h][x] != kNoVertex && dist[h][x] < dist[h - 1][x]) {
      x = par[h][x];
      walk.push_back(x);
    }
  }
  std::reverse(walk.begin(), walk.end());
  return walk;
}

}  // namespace hopspan
