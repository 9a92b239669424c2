// hopspan command line: build, verify, gen, bench, trace.
// Exit status: 0 pass, 1 verification failure, 2 usage or input error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "hopspan/construction.hpp"
#include "hopspan/generators.hpp"
#include "hopspan/graph_io.hpp"
#include "hopspan/hopset.hpp"
#include "hopspan/lowerbound.hpp"
#include "hopspan/rng.hpp"
#include "hopspan/serialize.hpp"
#include "hopspan/spanner.hpp"
#include "hopspan/tower.hpp"
#include "hopspan/trace.hpp"
#include "hopspan/verifier.hpp"

using namespace hopspan;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Writes to a file, or stdout for "" / "-".
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty() && path != "-") {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw UsageError("cannot write " + path);
    }
  }
  std::ostream& os() { return file_ ? *file_ : std::cout; }
  bool is_stdout() const { return !file_; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

Artifact read_artifact_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  return read_artifact(in);
}

void write_json_file(const std::string& path, const Json& j) {
  Sink s(path);
  s.os() << j.dump(2) << '\n';
}

Json schedule_echo(const ParamSchedule& s) {
  Json j = to_json(s);
  j.erase("radii");
  Json r = Json::array();
  for (double x : s.radii) r.push_back(x);
  j["r"] = r;
  return j;
}

// ---- build ----------------------------------------------------------------

struct BuildOpts {
  RunConfig cfg;
  std::string stats;
  std::string config_in;
  std::string config_out;
};

void add_schedule_options(CLI::App* app, RunConfig& c) {
  app->add_option("--k", c.k, "stretch/size parameter k")->check(CLI::PositiveNumber);
  app->add_option("--f", c.f, "level function: linear:K, identity, interleaved:C, custom:a,b,...");
  app->add_option("--t", c.t, "analysis parameter t > 0")->check(CLI::PositiveNumber);
  app->add_option("--seed", c.seed, "sampling seed");
}

int cmd_build(BuildOpts& o, const std::string& variant) {
  RunConfig c = o.cfg;
  if (!o.config_in.empty()) {
    c = run_config_from_json(read_json_file(o.config_in));
    if (!o.cfg.input.empty()) c.input = o.cfg.input;
    if (!o.cfg.output.empty()) c.output = o.cfg.output;
  }
  c.subcommand = "build";
  c.variant = variant;
  if (c.input.empty()) throw UsageError("build: --input is required");
  const Graph g = read_edge_list_file(c.input);
  const ParamSchedule s = make_schedule(c.k, LevelFunction::parse(c.f), parse_variant(variant), c.t);
  std::optional<LevelAssignment> la;
  if (!c.levels_in.empty()) {
    la = levels_from_json(read_json_file(c.levels_in));
    if (la->size() != g.num_vertices()) throw UsageError("level table size differs from n");
    if (la->F != s.F) throw UsageError("level table F differs from the schedule");
  } else {
    la = sample_levels(g, s, c.seed);
  }
  Sink out(c.output);
  std::ostream& log = out.is_stdout() ? std::cerr : std::cout;
  Json stats;
  if (variant == "hopset") {
    const HopsetEdgeSet h = build_hopset(g, s, *la);
    write_artifact(out.os(), h, g.num_vertices());
    stats = to_json(hopset_size_stats(h, g.num_vertices()));
  } else {
    if (!g.is_unweighted()) throw UsageError("spanners need an unweighted graph");
    const SpannerEdgeSet sp = variant == "spanner-half" ? build_spanner_half(g, s, *la)
                                                        : build_spanner_truncated(g, s, *la);
    write_artifact(out.os(), sp, g.num_vertices());
    stats = to_json(spanner_size_stats(sp, g.num_vertices()));
  }
  Json echo;
  echo["schedule"] = schedule_echo(s);
  echo["stats"] = stats;
  log << echo.dump(2) << '\n';
  if (!o.stats.empty()) write_json_file(o.stats, echo);
  if (!o.config_out.empty()) write_json_file(o.config_out, to_json(c));
  return 0;
}

// ---- verify ---------------------------------------------------------------

struct VerifyOpts {
  std::string input, artifact, report, csv;
  std::optional<double> alpha;
  std::optional<std::size_t> beta;
  std::vector<double> ts;
  PairSpec pairs;
  unsigned threads = 1;
};

int cmd_verify(VerifyOpts& o) {
  if (o.input.empty() || o.artifact.empty()) throw UsageError("verify: --input and --artifact are required");
  const Graph g = read_edge_list_file(o.input);
  const Artifact a = read_artifact_file(o.artifact);
  if (a.n != g.num_vertices()) throw UsageError("artifact n differs from the graph");
  o.pairs.threads = o.threads;
  const bool keep = !o.csv.empty();
  std::vector<VerificationReport> reports;
  if (a.kind == "hopset") {
    std::vector<HopsetClaim> claims;
    if (o.alpha || o.beta) {
      claims.push_back({o.alpha.value_or(2 * a.schedule.t + 3),
                        o.beta.value_or(a.schedule.hop_budget())});
    } else {
      const std::vector<double> ts = o.ts.empty() ? std::vector<double>{a.schedule.t} : o.ts;
      for (double t : ts) {
        const ParamSchedule s = a.schedule.with_t(t);
        claims.push_back({2 * t + 3, s.hop_budget()});
      }
    }
    reports = verify_hopset_claims(g, a.edges, claims, o.pairs, keep);
  } else {
    std::vector<Edge> se = a.edges;
    const Graph s(g.num_vertices(), std::move(se));
    std::vector<SpannerClaim> claims;
    if (o.alpha || o.beta) {
      claims.push_back({o.alpha.value_or(a.schedule.t + 3),
                        o.beta ? static_cast<double>(*o.beta) : 4 * a.schedule.rF()});
    } else {
      const std::vector<double> ts = o.ts.empty() ? std::vector<double>{a.schedule.t} : o.ts;
      for (double t : ts) claims.push_back({t + 3, 4 * a.schedule.with_t(t).rF()});
    }
    reports = verify_spanner_claims(g, s, claims, o.pairs, keep);
  }
  Json out = Json::array();
  bool pass = true;
  for (const auto& r : reports) {
    out.push_back(to_json(r));
    pass = pass && r.pass;
  }
  std::cout << out.dump(2) << '\n';
  if (!o.report.empty()) write_json_file(o.report, out);
  if (keep) {
    Sink s(o.csv);
    write_records_csv(s.os(), reports.front());
  }
  if (!pass) {
    for (const auto& r : reports) {
      if (r.pass) continue;
      std::cerr << "FAIL " << r.kind << " (" << r.alpha << ", " << r.beta << "): worst pair "
                << r.worst.u << ' ' << r.worst.v << " d=" << r.worst.d
                << " observed=" << r.worst.observed << '\n';
    }
  }
  return pass ? 0 : 1;
}

// ---- gen ------------------------------------------------------------------

struct GenOpts {
  std::string output, sidecar;
  // tower
  int k = 2;
  std::string f = "identity";
  std::int64_t alpha = 2;
  int a = 1;
  std::optional<std::int64_t> layer_mult;
  std::optional<std::size_t> copies, tower_size;
  // cage
  std::string name;
  // random
  std::size_t n = 100, m = 400;
  std::uint64_t seed = 1;
  bool weighted = false;
  std::uint32_t max_weight = 10;
  int regular = 0;
  int min_girth = 3;
};

void emit_graph(const GenOpts& o, const Graph& g, const Json& meta) {
  Sink out(o.output);
  write_edge_list(out.os(), g);
  if (!o.sidecar.empty()) write_json_file(o.sidecar, meta);
  std::ostream& log = out.is_stdout() ? std::cerr : std::cout;
  Json summary = meta;
  summary.erase("layers");
  summary["vertices"] = g.num_vertices();
  summary["edges"] = g.num_edges();
  log << summary.dump(2) << '\n';
}

int cmd_gen_tower(const GenOpts& o) {
  TowerOptions t;
  t.k = o.k;
  t.f = LevelFunction::parse(o.f);
  t.alpha = o.alpha;
  t.a = o.a;
  t.layer_mult = o.layer_mult;
  t.copies = o.copies;
  t.tower_size = o.tower_size;
  const TowerGraph tg = build_tower_graph(t);
  emit_graph(o, tg.graph, tower_sidecar(tg));
  return 0;
}

int cmd_gen_cage(const GenOpts& o) {
  const CageSpec c = cage(o.name);
  Json meta{{"kind", "cage"}, {"name", c.name}, {"degree", c.degree}, {"girth", c.girth}};
  emit_graph(o, c.graph, meta);
  return 0;
}

int cmd_gen_random(const GenOpts& o) {
  Json meta{{"kind", "random"}, {"n", o.n}, {"seed", o.seed}};
  if (o.regular > 0) {
    const auto g = random_regular_with_girth(o.n, o.regular, o.min_girth, o.seed);
    if (!g) throw UsageError("no regular graph with the requested girth found");
    meta["degree"] = o.regular;
    meta["min_girth"] = o.min_girth;
    emit_graph(o, *g, meta);
    return 0;
  }
  RandomGraphSpec spec;
  spec.n = o.n;
  spec.m = o.m;
  spec.seed = o.seed;
  spec.weighted = o.weighted;
  spec.max_weight = o.max_weight;
  meta["m"] = o.m;
  meta["weighted"] = o.weighted;
  if (o.weighted) meta["max_weight"] = o.max_weight;
  emit_graph(o, random_graph(spec), meta);
  return 0;
}

// ---- bench ----------------------------------------------------------------

struct BenchOpts {
  std::string input, output;
  std::vector<std::string> schedules{"linear:3", "identity"};
  std::vector<int> ks{3};
  std::vector<double> alphas{3, 5};
  std::size_t n = 100, m = 400, graphs = 1;
  std::uint64_t seed = 1;
  std::size_t seeds = 1;
  bool weighted = true;
  unsigned threads = 1;
};

int cmd_bench(const BenchOpts& o) {
  std::vector<std::pair<std::string, Graph>> corpus;
  if (!o.input.empty()) {
    corpus.emplace_back(o.input, read_edge_list_file(o.input));
  } else {
    for (std::size_t i = 0; i < o.graphs; ++i) {
      RandomGraphSpec spec;
      spec.n = o.n;
      spec.m = o.m;
      spec.seed = mix64(o.seed + i);
      spec.weighted = o.weighted;
      corpus.emplace_back("random#" + std::to_string(i), random_graph(spec));
    }
  }
  Sink out(o.output);
  out.os() << "graph,schedule,k,F,seed,n,m,size,alpha,beta_star\n";
  for (const auto& [name, g] : corpus) {
    for (const auto& fs : o.schedules) {
      for (int k : o.ks) {
        const LevelFunction f = LevelFunction::parse(fs);
        const ParamSchedule s = make_schedule(k, f, Variant::Hopset);
        for (std::size_t i = 0; i < o.seeds; ++i) {
          const std::uint64_t seed = o.seed + i;
          const HopsetEdgeSet h = build_hopset(g, s, seed);
          const auto plain = h.plain();
          for (double alpha : o.alphas) {
            const auto b = measure_min_hopbound(g, plain, alpha, o.threads);
            out.os() << name << ',' << f.str() << ',' << k << ',' << s.F << ',' << seed << ','
                     << g.num_vertices() << ',' << g.num_edges() << ',' << h.size() << ','
                     << decimal(alpha) << ',' << (b ? std::to_string(*b) : "none") << '\n';
          }
        }
      }
    }
  }
  return 0;
}

// ---- trace ----------------------------------------------------------------

struct TraceOpts {
  std::string input, artifact, output;
  std::optional<Vertex> u, v;
  std::size_t pairs = 10;
  std::uint64_t seed = 1;
  std::optional<double> t;
};

int cmd_trace(const TraceOpts& o) {
  if (o.input.empty() || o.artifact.empty()) throw UsageError("trace: --input and --artifact are required");
  const Graph g = read_edge_list_file(o.input);
  const Artifact a = read_artifact_file(o.artifact);
  if (a.kind != "hopset") throw UsageError("trace needs a hopset artifact");
  if (a.n != g.num_vertices()) throw UsageError("artifact n differs from the graph");
  const ParamSchedule s = o.t ? a.schedule.with_t(*o.t) : a.schedule;
  const PivotTable pt = compute_pivots(g, a.levels);
  const JumpTracer tracer(g, a.edges, s, a.levels, pt);
  std::vector<std::pair<Vertex, Vertex>> pairs;
  if (o.u || o.v) {
    if (!o.u || !o.v) throw UsageError("trace: give both --u and --v");
    if (*o.u >= g.num_vertices() || *o.v >= g.num_vertices()) throw UsageError("trace: vertex out of range");
    pairs.emplace_back(*o.u, *o.v);
  } else {
    SplitMix64 rng(o.seed);
    for (std::size_t i = 0; i < o.pairs && g.num_vertices() > 1; ++i) {
      pairs.emplace_back(static_cast<Vertex>(rng.below(g.num_vertices())),
                         static_cast<Vertex>(rng.below(g.num_vertices())));
    }
  }
  Json certs = Json::array();
  bool ok = true;
  for (const auto& [u, v] : pairs) {
    const JumpCertificate c = tracer.trace(u, v);
    ok = ok && (!c.applicable || c.ok);
    certs.push_back(to_json(c));
  }
  Sink out(o.output);
  out.os() << certs.dump(2) << '\n';
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hopspan: hopsets and spanners from one parameterized construction"};
  app.require_subcommand(1);

  BuildOpts bo;
  auto* build = app.add_subcommand("build", "build a hopset or spanner artifact");
  build->require_subcommand(1);
  std::string build_variant;
  for (const char* v : {"hopset", "spanner-trunc", "spanner-half"}) {
    auto* sub = build->add_subcommand(v);
    sub->add_option("--input,-i", bo.cfg.input, "edge-list graph");
    sub->add_option("--output,-o", bo.cfg.output, "artifact path (default stdout)");
    sub->add_option("--levels", bo.cfg.levels_in, "forced level table (JSON)");
    sub->add_option("--stats", bo.stats, "schedule echo and size stats (JSON)");
    sub->add_option("--config", bo.config_in, "load a stored run config");
    sub->add_option("--save-config", bo.config_out, "store the resolved run config");
    add_schedule_options(sub, bo.cfg);
    sub->callback([&build_variant, v] { build_variant = v; });
  }

  VerifyOpts vo;
  auto* verify = app.add_subcommand("verify", "check an artifact against its claimed bounds");
  verify->add_option("--input,-i", vo.input, "edge-list graph");
  verify->add_option("--artifact,-a", vo.artifact, "artifact from build");
  verify->add_option("--alpha", vo.alpha, "override the multiplicative bound");
  verify->add_option("--beta", vo.beta, "override the hop budget (hopset) or additive term (spanner)");
  verify->add_option("--t", vo.ts, "check the derived claims at these t values");
  verify->add_option("--report", vo.report, "report JSON");
  verify->add_option("--csv", vo.csv, "per-pair CSV for the first claim");
  verify->add_option("--exhaustive-limit", vo.pairs.exhaustive_limit);
  verify->add_option("--sample-sources", vo.pairs.sample_sources);
  verify->add_option("--per-source", vo.pairs.per_source);
  verify->add_option("--pair-seed", vo.pairs.seed);
  verify->add_option("--threads", vo.threads)->check(CLI::PositiveNumber);

  GenOpts go;
  auto* gen = app.add_subcommand("gen", "generate graphs");
  gen->require_subcommand(1);
  auto* gtower = gen->add_subcommand("tower", "lower-bound tower graph G(k,f,alpha,n)");
  gtower->add_option("--k", go.k)->check(CLI::PositiveNumber);
  gtower->add_option("--f", go.f);
  gtower->add_option("--alpha", go.alpha)->check(CLI::PositiveNumber);
  gtower->add_option("--a", go.a, "n = 2^(2ka)")->check(CLI::PositiveNumber);
  gtower->add_option("--layer-mult", go.layer_mult, "replaces log2(n) (non-asymptotic)");
  gtower->add_option("--copies", go.copies, "number of towers (non-asymptotic)");
  gtower->add_option("--tower-size", go.tower_size, "vertices per tower (non-asymptotic)");
  auto* gcage = gen->add_subcommand("cage", "embedded cubic cage");
  gcage->add_option("--name", go.name)->required()->check(
      CLI::IsMember(cage_names()));
  auto* grandom = gen->add_subcommand("random", "random graph");
  grandom->add_option("--n", go.n);
  grandom->add_option("--m", go.m);
  grandom->add_option("--seed", go.seed);
  grandom->add_flag("--weighted", go.weighted);
  grandom->add_option("--max-weight", go.max_weight)->check(CLI::PositiveNumber);
  grandom->add_option("--regular", go.regular, "degree of a random regular graph");
  grandom->add_option("--girth", go.min_girth, "minimum girth for --regular");
  for (auto* sub : {gtower, gcage, grandom}) {
    sub->add_option("--output,-o", go.output, "edge list (default stdout)");
    sub->add_option("--sidecar", go.sidecar, "metadata JSON");
  }

  BenchOpts bn;
  auto* bench = app.add_subcommand("bench", "sweep schedules and measure hopbounds");
  bench->add_option("--input,-i", bn.input, "fixed graph instead of generated ones");
  bench->add_option("--output,-o", bn.output, "CSV (default stdout)");
  bench->add_option("--f", bn.schedules, "level functions to sweep");
  bench->add_option("--k", bn.ks, "k values to sweep");
  bench->add_option("--alpha", bn.alphas, "stretch values for beta*");
  bench->add_option("--n", bn.n);
  bench->add_option("--m", bn.m);
  bench->add_option("--graphs", bn.graphs);
  bench->add_option("--seed", bn.seed);
  bench->add_option("--seeds", bn.seeds, "construction seeds per graph");
  bench->add_flag("--weighted,!--unweighted", bn.weighted);
  bench->add_option("--threads", bn.threads)->check(CLI::PositiveNumber);

  TraceOpts to;
  auto* trace = app.add_subcommand("trace", "jump-path certificates for hopset pairs");
  trace->add_option("--input,-i", to.input);
  trace->add_option("--artifact,-a", to.artifact);
  trace->add_option("--output,-o", to.output);
  trace->add_option("--u", to.u);
  trace->add_option("--v", to.v);
  trace->add_option("--pairs", to.pairs, "random pairs when --u/--v are absent");
  trace->add_option("--seed", to.seed);
  trace->add_option("--t", to.t, "analysis t (default: the artifact's)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (build->parsed()) return cmd_build(bo, build_variant);
    if (verify->parsed()) return cmd_verify(vo);
    if (gtower->parsed()) return cmd_gen_tower(go);
    if (gcage->parsed()) return cmd_gen_cage(go);
    if (grandom->parsed()) return cmd_gen_random(go);
    if (bench->parsed()) return cmd_bench(bn);
    if (trace->parsed()) return cmd_trace(to);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
