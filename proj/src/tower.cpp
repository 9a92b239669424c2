#include "hopspan/tower.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hopspan/hopset.hpp"
#include "hopspan/verifier.hpp"

namespace hopspan {

namespace {

std::size_t pow2_checked(std::int64_t e, const char* what) {
  if (e < 0 || e > 40) {
    throw ConstructionError(std::string(what) + " exceeds desk-scale limits (2^" +
                            std::to_string(e) + ")");
  }
  return std::size_t{1} << e;
}

}  // namespace

int TowerGraph::layer_of(Vertex v) const {
  const std::size_t local = v % tower_size;
  const auto it = std::upper_bound(layer_offset.begin(), layer_offset.end(), local);
  return static_cast<int>(it - layer_offset.begin()) - 1;
}

Weight TowerGraph::cross_distance(std::size_t c, int i, std::size_t d, int j) const {
  const Rational gap(static_cast<std::int64_t>(c > d ? c - d : d - c));
  const Rational r = radii[i] + gap + radii[j] - Rational(2);
  return (r * Rational(scale)).to_double();
}

TowerGraph build_tower_graph(const TowerOptions& opt) {
  if (opt.k < 1) throw ConstructionError("k must be >= 1");
  if (opt.alpha < 1) throw ConstructionError("alpha must be >= 1");
  if (opt.a < 1) throw ConstructionError("a must be >= 1");
  TowerGraph tg;
  tg.k = opt.k;
  tg.f = opt.f;
  tg.alpha = opt.alpha;
  tg.a = opt.a;
  tg.schedule = make_schedule(opt.k, opt.f, Variant::Hopset, 4.0 * static_cast<double>(opt.alpha));
  const int F = tg.schedule.F;
  if (F < 2) throw ConstructionError("tower graph needs F >= 2");
  tg.non_asymptotic = opt.layer_mult || opt.copies || opt.tower_size;

  const std::int64_t log_n = 2LL * opt.k * opt.a;
  tg.layer_mult = opt.layer_mult.value_or(log_n);
  if (tg.layer_mult < 1) throw ConstructionError("layer multiplier must be >= 1");
  tg.copies = opt.copies ? *opt.copies : pow2_checked(opt.a, "tower count");
  tg.tower_size = opt.tower_size ? *opt.tower_size
                                 : pow2_checked(opt.a * (2LL * opt.k - 1), "tower size");
  if (tg.copies < 1) throw ConstructionError("need at least one tower");

  // |L_i| = mult * n^{(1/k) Σ_{l<i} λ_l} = mult * 2^{2a Σ_{l<i} λ_l}
  tg.layer_size.assign(F, 0);
  tg.layer_size[0] = 1;
  Rational sum(0);
  std::size_t used = 1;
  for (int i = 1; i + 1 < F; ++i) {
    sum += tg.schedule.lambdas[i - 1];
    const Rational e = sum * Rational(2LL * opt.a);
    if (!e.is_integer()) throw ConstructionError("layer exponent is not an integer");
    const std::size_t s = static_cast<std::size_t>(tg.layer_mult) * pow2_checked(e.num(), "layer size");
    tg.layer_size[i] = s;
    used += s;
  }
  if (used >= tg.tower_size) {
    throw ConstructionError(
        "layer sizes do not fit: (F-1) log2(n) n^{1-1/k} < n^{1-1/(2k)} is violated (need tower size > " +
        std::to_string(used) + ", have " + std::to_string(tg.tower_size) + ")");
  }
  tg.layer_size[F - 1] = tg.tower_size - used;
  tg.layer_offset.assign(F, 0);
  for (int i = 1; i < F; ++i) tg.layer_offset[i] = tg.layer_offset[i - 1] + tg.layer_size[i - 1];

  std::size_t per_tower = 0;
  for (int i = 0; i < F; ++i) {
    per_tower += tg.layer_size[i] * (tg.layer_size[i] - 1) / 2;
    if (i + 1 < F) per_tower += tg.layer_size[i] * tg.layer_size[i + 1];
  }
  const std::size_t total_edges = per_tower * tg.copies + (tg.copies - 1);
  if (total_edges > opt.max_edges) {
    throw ConstructionError("tower graph has " + std::to_string(total_edges) +
                            " edges, above the limit of " + std::to_string(opt.max_edges));
  }

  const auto full = lower_bound_radii_exact(opt.f, opt.alpha, F);
  tg.radii.assign(full.begin(), full.begin() + F);
  Rational scale(1);
  for (int i = 0; i + 1 < F; ++i) scale *= Rational(opt.alpha);
  tg.scale = scale.num();
  std::vector<Weight> gap(F, 0);
  for (int i = 0; i + 1 < F; ++i) {
    const Rational w = (tg.radii[i + 1] - tg.radii[i]) * scale;
    if (!w.is_integer()) throw ConstructionError("scaled layer weight is not an integer");
    gap[i] = static_cast<Weight>(w.num());
  }
  const Weight unit = static_cast<Weight>(tg.scale);

  std::vector<Edge> edges;
  edges.reserve(total_edges);
  for (std::size_t c = 0; c < tg.copies; ++c) {
    for (int i = 0; i < F; ++i) {
      const Vertex lo = tg.first(c, i);
      const Vertex hi = lo + static_cast<Vertex>(tg.layer_size[i]);
      for (Vertex x = lo; x < hi; ++x) {
        for (Vertex y = x + 1; y < hi; ++y) edges.push_back({x, y, unit});
      }
      if (i + 1 < F) {
        const Vertex lo2 = tg.first(c, i + 1);
        const Vertex hi2 = lo2 + static_cast<Vertex>(tg.layer_size[i + 1]);
        for (Vertex x = lo; x < hi; ++x) {
          for (Vertex y = lo2; y < hi2; ++y) edges.push_back({x, y, gap[i]});
        }
      }
    }
    if (c + 1 < tg.copies) edges.push_back({tg.first(c, 0), tg.first(c + 1, 0), unit});
  }
  tg.graph = Graph(tg.copies * tg.tower_size, std::move(edges));
  return tg;
}

LevelAssignment tower_forced_levels(const TowerGraph& tg) {
  std::vector<int> levels(tg.graph.num_vertices(), 0);
  for (std::size_t c = 0; c < tg.copies; ++c) {
    for (int j = 0; j < tg.F(); ++j) levels[tg.first(c, j)] = j;
  }
  return forced_levels(std::move(levels), tg.F());
}

PlacementReport check_level_placement(const TowerGraph& tg, const LevelAssignment& la) {
  if (la.size() != tg.graph.num_vertices()) {
    throw std::invalid_argument("level assignment does not match the tower graph");
  }
  const int F = tg.F();
  PlacementReport rep;
  rep.ok.assign(tg.copies, std::vector<bool>(F, false));
  for (std::size_t c = 0; c < tg.copies; ++c) {
    for (int j = 0; j < F; ++j) {
      int top = -1;
      const Vertex lo = tg.first(c, j);
      for (Vertex v = lo; v < lo + tg.layer_size[j]; ++v) top = std::max(top, la.level(v));
      const bool ok = j + 1 < F ? top == j : top >= j;
      rep.ok[c][j] = ok;
      rep.all = rep.all && ok;
    }
  }
  return rep;
}

double placement_probability_bound(int k, double n) {
  return std::exp(-4.0 * k * std::pow(n, -1.0 / (4.0 * k)));
}

CrossTowerReport check_cross_tower_edges(const TowerGraph& tg, const std::vector<Edge>& h) {
  CrossTowerReport rep;
  const int F = tg.F();
  const double a1 = static_cast<double>(tg.alpha) + 1;
  const double s = static_cast<double>(tg.scale);
  bool first = true;
  for (const auto& e : h) {
    const std::size_t c = tg.tower_of(e.u), d = tg.tower_of(e.v);
    const int top = std::max(tg.layer_of(e.u), tg.layer_of(e.v));
    if (c == d || top >= F - 2) {
      ++rep.exempt;
      continue;
    }
    ++rep.checked;
    const double gap = static_cast<double>(c > d ? c - d : d - c);
    const double bound = a1 * (gap - 2);
    // Weights are integers in scaled units, so the comparison is exact.
    const double slack = e.w - s * bound;
    if (first || slack / s < rep.min_slack) rep.min_slack = slack / s;
    first = false;
    if (!(slack > 0)) rep.violations.push_back({e.u, e.v, e.w / s, bound});
  }
  rep.ok = rep.violations.empty();
  return rep;
}

TowerFloor tower_floor(int k, const LevelFunction& f, double alpha) {
  if (!(alpha >= 2)) throw std::invalid_argument("tower floor needs alpha >= 2");
  const auto ls = compute_lambdas(k, f, Variant::Hopset);
  if (ls.F < 2) throw std::invalid_argument("tower floor needs F >= 2");
  const auto r = lower_bound_radii(f, alpha, ls.F);
  TowerFloor out;
  out.r_F2 = r[ls.F - 2];
  out.beta_floor = (out.r_F2 - 1) / (5 * alpha * alpha);
  out.closed_form = std::pow(static_cast<double>(k), 1 + 1 / (2 * std::log2(alpha))) / 8;
  out.Lambda_F2 = prefix_lambda(ls.lambdas)[ls.F - 2];
  out.radius_ok = out.r_F2 >= out.closed_form;
  out.lambda_ok = Rational(4) * out.Lambda_F2 >= Rational(k + 2);
  return out;
}

TowerExperiment tower_hopbound_experiment(const TowerGraph& tg,
                                          const std::vector<std::uint64_t>& seeds,
                                          unsigned threads) {
  TowerExperiment ex;
  ex.floor = tower_floor(tg.k, tg.f, static_cast<double>(tg.alpha));
  auto run = [&](const LevelAssignment& la, bool forced, std::uint64_t seed) {
    TowerRun r;
    r.seed = seed;
    r.forced = forced;
    r.placement_ok = check_level_placement(tg, la).all;
    const PivotTable pt = compute_pivots(tg.graph, la);
    const HopsetEdgeSet h = build_hopset(tg.graph, tg.schedule, la, pt);
    r.hopset_size = h.size();
    const auto plain = h.plain();
    r.cross = check_cross_tower_edges(tg, plain);
    r.beta_star = measure_min_hopbound(tg.graph, plain, static_cast<double>(tg.alpha), threads);
    if (r.placement_ok) {
      const bool met = r.beta_star && static_cast<double>(*r.beta_star) >= ex.floor.beta_floor;
      ex.pass = ex.pass && met && r.cross.ok;
    }
    ex.runs.push_back(std::move(r));
  };
  run(tower_forced_levels(tg), true, 0);
  for (const auto seed : seeds) run(sample_levels(tg.graph, tg.schedule, seed), false, seed);
  return ex;
}

}  // namespace hopspan
