#include "hopspan/lowerbound.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <set>
#include <unordered_map>

namespace hopspan {

namespace {

std::uint64_t pair_key(Vertex a, Vertex b) {
  return (static_cast<std::uint64_t>(std::min(a, b)) << 32) | std::max(a, b);
}

// Hop distance from s to t avoiding one edge id (kNoVertex: none).
int bfs_avoiding(const Graph& g, Vertex s, Vertex t, std::uint32_t banned) {
  std::vector<int> dist(g.num_vertices(), -1);
  std::deque<Vertex> queue{s};
  dist[s] = 0;
  while (!queue.empty()) {
    const Vertex x = queue.front();
    queue.pop_front();
    if (x == t) return dist[x];
    for (const auto& nb : g.neighbors(x)) {
      if (nb.edge == banned || dist[nb.to] >= 0) continue;
      dist[nb.to] = dist[x] + 1;
      queue.push_back(nb.to);
    }
  }
  return -1;
}

std::uint32_t edge_id(const Graph& g, Vertex a, Vertex b) {
  for (const auto& nb : g.neighbors(a)) {
    if (nb.to == b) return nb.edge;
  }
  throw std::logic_error("edge_id: not an edge");
}

// Sorted edge ids along the canonical shortest path.
std::vector<std::uint32_t> path_edge_ids(const Graph& g, Vertex u, Vertex v) {
  const auto p = shortest_path_edges(g, u, v);
  if (!p) throw std::invalid_argument("path_edge_ids: unreachable pair");
  std::vector<std::uint32_t> ids;
  for (const auto& e : *p) ids.push_back(edge_id(g, e.u, e.v));
  std::sort(ids.begin(), ids.end());
  return ids;
}

bool intersects(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return true;
    if (a[i] < b[j]) ++i; else ++j;
  }
  return false;
}

}  // namespace

std::vector<std::string> cage_names() {
  return {"petersen", "heawood", "mcgee", "tutte-coxeter"};
}

Graph lcf_graph(const std::vector<int>& jumps, int repeats) {
  const int len = static_cast<int>(jumps.size());
  const int n = len * repeats;
  if (len == 0 || repeats <= 0 || n < 3) throw std::invalid_argument("lcf: empty pattern");
  std::set<std::pair<Vertex, Vertex>> seen;
  std::vector<Edge> edges;
  auto add = [&](int a, int b) {
    const Vertex x = static_cast<Vertex>(std::min(a, b));
    const Vertex y = static_cast<Vertex>(std::max(a, b));
    if (x != y && seen.insert({x, y}).second) edges.push_back({x, y, 1});
  };
  for (int i = 0; i < n; ++i) {
    add(i, (i + 1) % n);
    add(i, ((i + jumps[i % len]) % n + n) % n);
  }
  return Graph(static_cast<std::size_t>(n), std::move(edges));
}

CageSpec cage(const std::string& name) {
  CageSpec c;
  c.name = name;
  c.degree = 3;
  if (name == "petersen") {
    std::vector<Edge> e;
    for (Vertex i = 0; i < 5; ++i) {
      e.push_back({i, (i + 1) % 5, 1});
      e.push_back({i, i + 5, 1});
      e.push_back({5 + i, 5 + (i + 2) % 5, 1});
    }
    for (auto& x : e) {
      if (x.u > x.v) std::swap(x.u, x.v);
    }
    c.girth = 5;
    c.graph = Graph(10, std::move(e));
  } else if (name == "heawood") {
    c.girth = 6;
    c.graph = lcf_graph({5, -5}, 7);
  } else if (name == "mcgee") {
    c.girth = 7;
    c.graph = lcf_graph({12, 7, -7}, 8);
  } else if (name == "tutte-coxeter") {
    c.girth = 8;
    c.graph = lcf_graph({-13, -9, 7, -7, 9, 13}, 5);
  } else {
    throw std::invalid_argument("unknown cage: " + name);
  }
  c.vertices = c.graph.num_vertices();
  return c;
}

std::optional<int> girth(const Graph& g) {
  const std::size_t n = g.num_vertices();
  int best = std::numeric_limits<int>::max();
  std::vector<int> dist(n);
  std::vector<Vertex> parent(n);
  for (Vertex r = 0; r < n; ++r) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[r] = 0;
    parent[r] = kNoVertex;
    std::deque<Vertex> queue{r};
    while (!queue.empty()) {
      const Vertex x = queue.front();
      queue.pop_front();
      if (2 * dist[x] + 1 >= best) break;
      for (const auto& nb : g.neighbors(x)) {
        if (dist[nb.to] < 0) {
          dist[nb.to] = dist[x] + 1;
          parent[nb.to] = x;
          queue.push_back(nb.to);
        } else if (nb.to != parent[x]) {
          best = std::min(best, dist[x] + dist[nb.to] + 1);
        }
      }
    }
  }
  if (best == std::numeric_limits<int>::max()) return std::nullopt;
  return best;
}

std::uint64_t count_delta_paths(const Graph& g, int delta) {
  if (delta < 1) throw std::invalid_argument("count_delta_paths: delta >= 1");
  std::uint64_t count = 0;
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    const auto d = bfs_hops(g, u);
    for (Vertex v = u + 1; v < g.num_vertices(); ++v) {
      if (d[v] == delta) ++count;
    }
  }
  return count;
}

int feasible_delta(int girth, int alpha) {
  if (girth < 1 || alpha < 1) throw std::invalid_argument("feasible_delta: positive arguments");
  return (girth - 1) / (alpha + 1);
}

GirthBound girth_bound_evaluate(double n, double p, int delta, double alpha, int k) {
  if (n <= 0 || p <= 0 || delta < 1 || alpha <= 0) {
    throw std::invalid_argument("girth_bound_evaluate: parameters must be positive");
  }
  GirthBound b;
  const double d = delta;
  b.min_hopset_edges = n * p / (2 * alpha * d * d);
  b.path_count_floor = 0.5 * n * std::pow(p, d);
  b.usage_bound = alpha * d * d * std::pow(p, d - 1);
  b.beta_floor = k >= 2 ? static_cast<int>(std::floor((k - 2) / (alpha + 1))) : 0;
  return b;
}

UniquenessReport unique_shortest_paths_check(const Graph& g, int delta, double alpha) {
  UniquenessReport rep;
  const std::size_t n = g.num_vertices();
  for (Vertex u = 0; u < n; ++u) {
    // Shortest-path counts, saturated at 2.
    std::vector<int> dist(n, -1), ways(n, 0);
    dist[u] = 0;
    ways[u] = 1;
    std::deque<Vertex> queue{u};
    while (!queue.empty()) {
      const Vertex x = queue.front();
      queue.pop_front();
      for (const auto& nb : g.neighbors(x)) {
        if (dist[nb.to] < 0) {
          dist[nb.to] = dist[x] + 1;
          queue.push_back(nb.to);
        }
        if (dist[nb.to] == dist[x] + 1) ways[nb.to] = std::min(2, ways[nb.to] + ways[x]);
      }
    }
    for (Vertex v = u + 1; v < n; ++v) {
      if (dist[v] != delta) continue;
      ++rep.pairs;
      if (ways[v] != 1) ++rep.non_unique;
      // Any other simple u-v path misses an edge of P, and conversely.
      int second = -1;
      const auto path = shortest_path_edges(g, u, v);
      for (const auto& e : *path) {
        const int alt = bfs_avoiding(g, u, v, edge_id(g, e.u, e.v));
        if (alt >= 0 && (second < 0 || alt < second)) second = alt;
      }
      if (second >= 0) {
        if (rep.min_second < 0 || second < rep.min_second) rep.min_second = second;
        if (second <= alpha * delta) ++rep.short_detours;
      }
    }
  }
  rep.ok = rep.non_unique == 0 && rep.short_detours == 0;
  return rep;
}

UsageReport hopset_path_usage_check(const Graph& g, const std::vector<Edge>& h,
                                    double alpha, int delta, std::size_t beta) {
  if (!g.is_unweighted()) throw std::invalid_argument("usage check: graph must be unweighted");
  if (delta < 1 || beta >= static_cast<std::size_t>(delta)) {
    throw std::invalid_argument("usage check: need 1 <= beta < delta");
  }
  const std::size_t n = g.num_vertices();
  if (n == 0) throw std::invalid_argument("usage check: empty graph");
  const std::size_t deg = g.degree(0);
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) != deg) throw std::invalid_argument("usage check: graph must be regular");
  }
  const auto gi = girth(g);
  if (gi && *gi <= alpha * delta + delta) {
    throw std::invalid_argument("usage check: girth must exceed (alpha+1)*delta");
  }
  const double p = static_cast<double>(deg) - 1;
  const double limit = alpha * delta * (1 + 1e-12);

  UsageReport rep;
  rep.degree_bound = alpha * delta * delta * std::pow(p, delta - 1);

  std::vector<std::vector<int>> hops(n);
  for (Vertex u = 0; u < n; ++u) hops[u] = bfs_hops(g, u);

  std::unordered_map<std::uint64_t, std::size_t> index;
  std::vector<std::vector<std::uint32_t>> detour;
  for (const auto& e : h) {
    if (e.u == e.v) continue;
    const int d = hops[e.u][e.v];
    if (d < 0 || e.w < d) throw std::invalid_argument("usage check: hopset edge shorter than d_G");
    if (e.w > limit) continue;
    const auto key = pair_key(e.u, e.v);
    if (index.contains(key)) continue;
    index[key] = rep.edges.size();
    rep.edges.push_back({std::min(e.u, e.v), std::max(e.u, e.v), e.w});
    detour.push_back(path_edge_ids(g, e.u, e.v));
  }
  rep.degree.assign(rep.edges.size(), 0);
  rep.usage.assign(rep.edges.size(), 0);

  const AugmentedGraph ag(g, h);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (hops[u][v] != delta) continue;
      ++rep.pairs;
      const auto pv = path_edge_ids(g, u, v);
      for (std::size_t i = 0; i < detour.size(); ++i) {
        if (intersects(pv, detour[i])) ++rep.degree[i];
      }
      const auto walk = hop_bounded_path(ag, u, v, beta);
      if (!walk) continue;
      Weight w = 0;
      for (std::size_t s = 0; s + 1 < walk->size(); ++s) {
        w += *ag.edge_weight((*walk)[s], (*walk)[s + 1]);
      }
      if (w > limit) continue;
      ++rep.satisfied;
      bool any_hop = false, witness = false;
      std::set<std::size_t> used;
      for (std::size_t s = 0; s + 1 < walk->size(); ++s) {
        const Vertex a = (*walk)[s], b = (*walk)[s + 1];
        if (g.has_edge(a, b)) continue;
        any_hop = true;
        const auto it = index.find(pair_key(a, b));
        if (it != index.end() && intersects(pv, detour[it->second])) used.insert(it->second);
      }
      for (const auto i : used) ++rep.usage[i];
      witness = !used.empty();
      if (!any_hop) ++rep.without_hopset;
      if (witness) ++rep.witnessed;
    }
  }
  for (std::size_t i = 0; i < rep.degree.size(); ++i) {
    rep.max_degree = std::max(rep.max_degree, rep.degree[i]);
    if (rep.usage[i] > rep.degree[i]) rep.ok = false;
  }
  if (rep.max_degree > rep.degree_bound) rep.ok = false;
  if (rep.witnessed != rep.satisfied || rep.without_hopset != 0) rep.ok = false;
  return rep;
}

}  // namespace hopspan
