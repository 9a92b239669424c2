#include "hopspan/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hopspan/parallel.hpp"
#include "hopspan/rng.hpp"

namespace hopspan {

namespace {

bool exceeds(Weight observed, double bound) {
  return observed > bound * (1 + kRelTol) && observed - bound > 1e-12;
}

void record(VerificationReport& r, const PairRecord& p, double bound, bool keep) {
  ++r.pairs_checked;
  const double excess = p.observed - bound;
  if (r.pairs_checked == 1 || excess > r.max_excess) {
    r.max_excess = excess;
    r.worst = p;
  }
  if (exceeds(p.observed, bound)) ++r.violations;
  if (p.observed < p.d * (1 - kRelTol)) ++r.below_distance;
  if (p.d > 0) {
    const double ratio = p.observed / p.d;
    r.max_ratio = std::max(r.max_ratio, ratio);
    std::size_t bin = 0;
    if (ratio > r.alpha * (1 + kRelTol)) {
      bin = 10;
    } else if (r.alpha > 1) {
      const double pos = 10 * (ratio - 1) / (r.alpha - 1);
      bin = static_cast<std::size_t>(std::clamp(std::floor(pos), 0.0, 9.0));
    }
    ++r.histogram[bin];
  }
  if (keep) r.records.push_back(p);
}

void merge_into(VerificationReport& into, const VerificationReport& part) {
  if (part.pairs_checked > 0 &&
      (into.pairs_checked == 0 || part.max_excess > into.max_excess)) {
    into.max_excess = part.max_excess;
    into.worst = part.worst;
  }
  into.pairs_checked += part.pairs_checked;
  into.pairs_skipped += part.pairs_skipped;
  into.violations += part.violations;
  into.below_distance += part.below_distance;
  into.max_ratio = std::max(into.max_ratio, part.max_ratio);
  for (std::size_t i = 0; i < into.histogram.size(); ++i) {
    into.histogram[i] += part.histogram[i];
  }
  into.records.insert(into.records.end(), part.records.begin(), part.records.end());
}

VerificationReport blank(const std::string& kind, double alpha, double beta,
                         bool exhaustive) {
  VerificationReport r;
  r.kind = kind;
  r.alpha = alpha;
  r.beta = beta;
  r.exhaustive = exhaustive;
  return r;
}

void finish(VerificationReport& r) { r.pass = r.violations == 0 && r.below_distance == 0; }

bool is_exhaustive(const Graph& g, const PairSpec& spec) {
  return g.num_vertices() <= spec.exhaustive_limit;
}

}  // namespace

std::vector<std::pair<Vertex, std::vector<Vertex>>> select_pairs(const Graph& g,
                                                                  const PairSpec& spec) {
  const std::size_t n = g.num_vertices();
  std::vector<std::pair<Vertex, std::vector<Vertex>>> out;
  if (is_exhaustive(g, spec)) {
    for (Vertex u = 0; u < n; ++u) {
      std::vector<Vertex> t;
      for (Vertex v = u + 1; v < n; ++v) t.push_back(v);
      out.emplace_back(u, std::move(t));
    }
    return out;
  }
  SplitMix64 rng(spec.seed);
  std::vector<Vertex> order(n);
  for (Vertex v = 0; v < n; ++v) order[v] = v;
  const std::size_t s = std::min(spec.sample_sources, n);
  for (std::size_t i = 0; i < s; ++i) {
    std::swap(order[i], order[i + rng.below(n - i)]);
  }
  std::vector<Vertex> sources(order.begin(), order.begin() + s);
  std::sort(sources.begin(), sources.end());
  for (Vertex u : sources) {
    const DistanceRow row = dijkstra(g, u);
    std::vector<Vertex> reach;
    for (Vertex v = 0; v < n; ++v) {
      if (v != u && row.dist[v] < kInfinity) reach.push_back(v);
    }
    std::stable_sort(reach.begin(), reach.end(),
                     [&](Vertex a, Vertex b) { return row.dist[a] < row.dist[b]; });
    std::vector<Vertex> picked;
    if (reach.size() <= spec.per_source) {
      picked = reach;
    } else {
      const std::size_t per_bin = std::max<std::size_t>(spec.per_source / 10, 1);
      for (std::size_t b = 0; b < 10; ++b) {
        const std::size_t lo = reach.size() * b / 10;
        const std::size_t hi = reach.size() * (b + 1) / 10;
        std::vector<Vertex> bin(reach.begin() + lo, reach.begin() + hi);
        const std::size_t take = std::min(per_bin, bin.size());
        for (std::size_t i = 0; i < take; ++i) {
          std::swap(bin[i], bin[i + rng.below(bin.size() - i)]);
          picked.push_back(bin[i]);
        }
      }
      std::sort(picked.begin(), picked.end());
    }
    out.emplace_back(u, std::move(picked));
  }
  return out;
}

std::vector<VerificationReport> verify_hopset_claims(const Graph& g,
                                                     const std::vector<Edge>& h,
                                                     const std::vector<HopsetClaim>& claims,
                                                     const PairSpec& spec,
                                                     bool keep_records) {
  std::size_t max_beta = 0;
  for (const HopsetClaim& c : claims) {
    if (c.beta < 1) throw std::invalid_argument("hop budget must be >= 1");
    max_beta = std::max(max_beta, c.beta);
  }
  const AugmentedGraph ag(g, h);
  const auto plan = select_pairs(g, spec);
  const bool exhaustive = is_exhaustive(g, spec);
  std::vector<std::vector<VerificationReport>> parts(plan.size());
  parallel_for(plan.size(), spec.threads, [&](std::size_t idx) {
    const auto& [u, targets] = plan[idx];
    const DistanceRow row = dijkstra(g, u);
    const HopProfile prof(ag, u, max_beta);
    auto& mine = parts[idx];
    for (const HopsetClaim& c : claims) {
      VerificationReport r = blank("hopset", c.alpha, static_cast<double>(c.beta), exhaustive);
      const auto within = prof.at(c.beta);
      for (Vertex v : targets) {
        if (row.dist[v] == kInfinity) {
          ++r.pairs_skipped;
          continue;
        }
        record(r, {u, v, row.dist[v], within[v]}, c.alpha * row.dist[v], keep_records);
      }
      mine.push_back(std::move(r));
    }
  });
  std::vector<VerificationReport> out;
  for (std::size_t c = 0; c < claims.size(); ++c) {
    VerificationReport r = blank("hopset", claims[c].alpha,
                                 static_cast<double>(claims[c].beta), exhaustive);
    for (const auto& p : parts) merge_into(r, p[c]);
    finish(r);
    out.push_back(std::move(r));
  }
  return out;
}

VerificationReport verify_hopset(const Graph& g, const std::vector<Edge>& h,
                                 double alpha, std::size_t beta, const PairSpec& pairs,
                                 bool keep_records) {
  return verify_hopset_claims(g, h, {{alpha, beta}}, pairs, keep_records).front();
}

std::vector<VerificationReport> verify_spanner_claims(
    const Graph& g, const Graph& s, const std::vector<SpannerClaim>& claims,
    const PairSpec& spec, bool keep_records) {
  if (s.num_vertices() != g.num_vertices()) {
    throw std::invalid_argument("spanner and graph differ in vertex count");
  }
  for (const Edge& e : s.edges()) {
    const auto w = g.edge_weight(e.u, e.v);
    if (!w || *w != e.w) {
      throw std::invalid_argument("spanner edge " + std::to_string(e.u) + "-" +
                                  std::to_string(e.v) + " is not an edge of the graph");
    }
  }
  const auto plan = select_pairs(g, spec);
  const bool exhaustive = is_exhaustive(g, spec);
  std::vector<std::vector<VerificationReport>> parts(plan.size());
  parallel_for(plan.size(), spec.threads, [&](std::size_t idx) {
    const auto& [u, targets] = plan[idx];
    const DistanceRow dg = dijkstra(g, u);
    const DistanceRow ds = dijkstra(s, u);
    for (const SpannerClaim& c : claims) {
      VerificationReport r = blank("spanner", c.mult, c.add, exhaustive);
      for (Vertex v : targets) {
        if (dg.dist[v] == kInfinity) {
          ++r.pairs_skipped;
          continue;
        }
        record(r, {u, v, dg.dist[v], ds.dist[v]}, c.mult * dg.dist[v] + c.add, keep_records);
      }
      parts[idx].push_back(std::move(r));
    }
  });
  std::vector<VerificationReport> out;
  for (std::size_t c = 0; c < claims.size(); ++c) {
    VerificationReport r = blank("spanner", claims[c].mult, claims[c].add, exhaustive);
    for (const auto& p : parts) merge_into(r, p[c]);
    finish(r);
    out.push_back(std::move(r));
  }
  return out;
}

VerificationReport verify_spanner(const Graph& g, const Graph& s, double mult, double add,
                                  const PairSpec& pairs, bool keep_records) {
  return verify_spanner_claims(g, s, {{mult, add}}, pairs, keep_records).front();
}

std::optional<std::size_t> measure_min_hopbound(const Graph& g, const std::vector<Edge>& h,
                                                double alpha, unsigned threads) {
  if (!(alpha >= 1)) throw std::invalid_argument("alpha must be >= 1");
  const std::size_t n = g.num_vertices();
  const AugmentedGraph ag(g, h);
  std::vector<std::size_t> need(n, 1);
  std::vector<char> failed(n, 0);
  parallel_for(n, threads, [&](std::size_t idx) {
    const Vertex u = static_cast<Vertex>(idx);
    const DistanceRow row = dijkstra(g, u);
    const HopProfile prof(ag, u, n > 0 ? n - 1 : 0);
    for (Vertex v = 0; v < n; ++v) {
      if (v == u || row.dist[v] == kInfinity) continue;
      const double limit =
          std::isinf(alpha) ? kInfinity : alpha * row.dist[v] * (1 + kRelTol);
      const auto hops = prof.min_hops_within(v, limit);
      if (!hops) {
        failed[u] = 1;
        return;
      }
      need[u] = std::max(need[u], *hops);
    }
  });
  if (std::any_of(failed.begin(), failed.end(), [](char c) { return c != 0; })) {
    return std::nullopt;
  }
  return n == 0 ? std::size_t{1} : *std::max_element(need.begin(), need.end());
}

}  // namespace hopspan
