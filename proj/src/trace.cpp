#include "hopspan/trace.hpp"

#include <algorithm>
#include <cmath>

namespace hopspan {

namespace {

std::uint64_t pair_key(Vertex a, Vertex b) {
  return (static_cast<std::uint64_t>(std::min(a, b)) << 32) | std::max(a, b);
}

constexpr double kSlack = 1e-9;

}  // namespace

JumpTracer::JumpTracer(const Graph& g, const std::vector<Edge>& hopset,
                       const ParamSchedule& s, const LevelAssignment& la,
                       const PivotTable& pt)
    : g_(g), s_(s), la_(la), pt_(pt) {
  if (la.size() != g.num_vertices() || pt.F != s.F) {
    throw std::invalid_argument("tracer inputs disagree on n or F");
  }
  for (const Edge& e : hopset) {
    auto [it, fresh] = h_.emplace(pair_key(e.u, e.v), e.w);
    if (!fresh) it->second = std::min(it->second, e.w);
  }
}

bool JumpTracer::link(Vertex a, Vertex b, TraceHop& hop) const {
  hop = {a, b, kInfinity, false};
  if (auto w = g_.edge_weight(a, b)) hop.w = *w;
  if (auto it = h_.find(pair_key(a, b)); it != h_.end() && it->second < hop.w) {
    hop.w = it->second;
    hop.hopset_edge = true;
  }
  return hop.w < kInfinity;
}

bool JumpTracer::jump(Vertex a, Vertex b, int i, std::vector<TraceHop>& out,
                      std::string& why) const {
  if (a == b) return true;
  const int lo = s_.f.inverse(i - 1);
  const Vertex x1 = pt_.p(lo, a);
  const Vertex x2 = pt_.p(i - 1, b);
  if (x1 == kNoVertex || x2 == kNoVertex) {
    why = "jump step: pivot p_" + std::to_string(x1 == kNoVertex ? lo : i - 1) +
          " undefined";
    return false;
  }
  const Vertex seq[4] = {a, x1, x2, b};
  static const char* const step[3] = {"pivot edge (u, p_{f^-1(i-1)}(u))",
                                      "bunch edge (p_{f^-1(i-1)}(u), p_{i-1}(u'))",
                                      "pivot edge (p_{i-1}(u'), u')"};
  for (int s = 0; s < 3; ++s) {
    if (seq[s] == seq[s + 1]) continue;
    TraceHop hop;
    if (!link(seq[s], seq[s + 1], hop)) {
      why = std::string("jump step: ") + step[s] + " missing between " +
            std::to_string(seq[s]) + " and " + std::to_string(seq[s + 1]) +
            " (score " + std::to_string(i) + ")";
      return false;
    }
    out.push_back(hop);
  }
  return true;
}

JumpCertificate JumpTracer::trace(Vertex u, Vertex v) const {
  g_.check_vertex(u);
  g_.check_vertex(v);
  JumpCertificate c;
  c.u = u;
  c.v = v;
  c.t = s_.t;
  c.hop_budget = s_.hop_budget();
  if (u == v) {
    c.applicable = false;
    c.diagnostic = "trivial pair";
    return c;
  }
  const ShortestPathTree tree = canonical_search(g_, u);
  if (!tree.reached(v)) {
    c.applicable = false;
    c.diagnostic = "pair is disconnected";
    return c;
  }
  c.d = tree.dist[v];
  if (c.d == 0) {
    c.applicable = false;
    c.diagnostic = "zero-distance pair: rescaled radii vanish";
    return c;
  }
  const double t = s_.t;
  const double scale = t * c.d / (4 * s_.rF());
  for (double r : s_.radii) c.radii.push_back(r * scale);
  const auto& r = c.radii;
  c.weight_bound = (2 * t + 3) * c.d;
  c.min_segment = 4 / t * r[0];

  const std::vector<Vertex> path = tree.path_to(v);
  const std::size_t last = path.size() - 1;
  auto pd = [&](std::size_t idx) { return tree.dist[path[idx]]; };
  auto fail = [&](std::string why) {
    c.ok = false;
    c.diagnostic = std::move(why);
    return c;
  };

  std::size_t j = 0;
  for (;;) {
    const Vertex head = path[j];
    const int i = score(pt_, s_.f, r, head);
    const int lo = s_.f.inverse(i - 1);
    const double thr = (r[i] - r[i - 1]) / 2 - r[lo];
    std::size_t l = j;
    while (l < last && pd(l + 1) - pd(j) <= thr) ++l;

    TraceSegment seg;
    seg.head = head;
    seg.score = i;
    const std::size_t before = c.hops.size();
    std::string why;
    if (!jump(head, path[l], i, c.hops, why)) return fail(why);
    if (l == last) {
      seg.end = v;
      seg.final = true;
    } else {
      TraceHop hop;
      if (!link(path[l], path[l + 1], hop)) {
        return fail("shortest path edge missing between " + std::to_string(path[l]) +
                    " and " + std::to_string(path[l + 1]));
      }
      c.hops.push_back(hop);
      seg.end = path[l + 1];
    }
    seg.length = tree.dist[seg.end] - pd(j);
    seg.hops = c.hops.size() - before;
    for (std::size_t h = before; h < c.hops.size(); ++h) seg.weight += c.hops[h].w;
    c.segments.push_back(seg);
    if (seg.final) {
      const double bound = 3 * seg.length + 2 * (r[i - 1] + r[lo]);
      if (seg.weight > bound * (1 + kSlack)) {
        return fail("jump step: final segment weight exceeds 3d + 2(r_{i-1} + r_{f^-1(i-1)})");
      }
      break;
    }
    if (seg.weight > (t + 3) * seg.length * (1 + kSlack)) {
      return fail("segment check: segment weight exceeds (t+3) d");
    }
    if (seg.length < 4 / t * r[lo] * (1 - kSlack)) {
      return fail("segment check: segment shorter than (4/t) r_{f^-1(i-1)}");
    }
    j = l + 1;
  }
  for (const TraceHop& h : c.hops) c.weight += h.w;
  c.hop_count = c.hops.size();
  if (c.weight > c.weight_bound * (1 + kSlack)) return fail("total weight exceeds (2t+3) d");
  if (c.hop_count > c.hop_budget) return fail("hop count exceeds ceil(4 r_F) + 3");
  return c;
}

ShortcutResult JumpTracer::shortcut(Vertex x, Vertex y, int c) const {
  g_.check_vertex(x);
  g_.check_vertex(y);
  if (c < 1 || c > s_.F) throw std::invalid_argument("shortcut needs 1 <= c <= F");
  ShortcutResult out;
  const ShortestPathTree tx = canonical_search(g_, x);
  if (x == y || !tx.reached(y)) {
    out.diagnostic = "not applicable: pair is trivial or disconnected";
    return out;
  }
  out.d = tx.dist[y];
  out.bound = (2.0 * c + 1) * out.d;
  const Weight dpc = c == s_.F ? kInfinity : pt_.d(c, x);
  if (!(dpc > c * out.d)) {
    out.diagnostic = "not applicable: d(x, p_c(x)) <= c d(x, y)";
    return out;
  }
  out.applicable = true;
  const ShortestPathTree ty = canonical_search(g_, y);
  auto next_radius = [&](int i, Vertex z) {
    return i + 1 < s_.F ? pt_.d(i + 1, z) : kInfinity;
  };
  for (int i = 0; i < s_.F; ++i) {
    const Vertex px = pt_.p(i, x);
    const Vertex py = pt_.p(i, y);
    Vertex via = kNoVertex;
    if (px != kNoVertex && ty.dist[px] < next_radius(i, y)) {
      via = px;
    } else if (py != kNoVertex && tx.dist[py] < next_radius(i, x)) {
      via = py;
    }
    if (via == kNoVertex) continue;
    out.i_star = i;
    out.via = via;
    const Vertex seq[3] = {x, via, y};
    for (int s = 0; s < 2; ++s) {
      if (seq[s] == seq[s + 1]) continue;
      TraceHop hop;
      if (!link(seq[s], seq[s + 1], hop)) {
        out.diagnostic = "edge missing between " + std::to_string(seq[s]) + " and " +
                         std::to_string(seq[s + 1]) + " (i* = " + std::to_string(i) + ")";
        return out;
      }
      out.hops.push_back(hop);
      out.weight += hop.w;
    }
    if (i >= c) {
      out.diagnostic = "i* >= c";
      return out;
    }
    if (out.weight > out.bound * (1 + kSlack)) {
      out.diagnostic = "two-hop weight exceeds (2c+1) d";
      return out;
    }
    out.ok = true;
    return out;
  }
  out.diagnostic = "no level i* with a pivot in the other endpoint's bunch";
  return out;
}

JumpCertificate trace_jump_path(const Graph& g, const std::vector<Edge>& hopset,
                                const ParamSchedule& s, const LevelAssignment& la,
                                const PivotTable& pt, Vertex u, Vertex v) {
  return JumpTracer(g, hopset, s, la, pt).trace(u, v);
}

ShortcutResult trace_low_level_shortcut(const Graph& g, const std::vector<Edge>& hopset,
                                        const ParamSchedule& s, const LevelAssignment& la,
                                        const PivotTable& pt, Vertex x, Vertex y, int c) {
  return JumpTracer(g, hopset, s, la, pt).shortcut(x, y, c);
}

}  // namespace hopspan
