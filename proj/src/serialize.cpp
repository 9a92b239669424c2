#include "hopspan/serialize.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

#include "hopspan/graph_io.hpp"

namespace hopspan {

std::string decimal(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (std::isnan(x)) return "nan";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

namespace {

double parse_decimal(const std::string& s) {
  if (s == "inf") return kInfinity;
  if (s == "-inf") return -kInfinity;
  double x = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), x);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) {
    throw ParseError("bad decimal: " + s);
  }
  return x;
}

std::string hopset_tag(const Provenance& p) {
  return (p.origin == Origin::Pivot ? "P" : "B") + std::to_string(p.level);
}

std::string spanner_tag(const SpannerProvenance& p) {
  switch (p.origin) {
    case PathOrigin::PivotPath: return "pivot" + std::to_string(p.level);
    case PathOrigin::BunchPath: return "bunch" + std::to_string(p.level);
    case PathOrigin::HalfBunchPath: return "half" + std::to_string(p.level);
  }
  return "?";
}

void write_header(std::ostream& out, const std::string& kind, std::size_t n, std::size_t m,
                  const ParamSchedule& s, const LevelAssignment& la) {
  Json h;
  h["format"] = "hopspan-artifact";
  h["version"] = 1;
  h["kind"] = kind;
  h["n"] = n;
  h["m"] = m;
  h["schedule"] = to_json(s);
  h["levels"] = to_json(la);
  out << h.dump() << "\n---\n";
}

}  // namespace

Json to_json(const ParamSchedule& s) {
  Json j;
  j["k"] = s.k;
  j["f"] = s.f.str();
  j["variant"] = variant_name(s.variant);
  Json lam = Json::array();
  for (const auto& l : s.lambdas) lam.push_back(l.str());
  j["lambda"] = lam;
  j["F"] = s.F;
  j["t"] = decimal(s.t);
  j["r0"] = decimal(s.r0);
  Json r = Json::array();
  for (double x : s.radii) r.push_back(decimal(x));
  j["radii"] = r;
  j["hop_budget"] = s.hop_budget();
  return j;
}

ParamSchedule schedule_from_json(const Json& j) {
  try {
    const ParamSchedule s = make_schedule(
        j.at("k").get<int>(), LevelFunction::parse(j.at("f").get<std::string>()),
        parse_variant(j.at("variant").get<std::string>()),
        parse_decimal(j.at("t").get<std::string>()), parse_decimal(j.at("r0").get<std::string>()));
    if (j.contains("F") && j.at("F").get<int>() != s.F) throw ScheduleError("stored F mismatch");
    if (j.contains("lambda")) {
      const auto& lam = j.at("lambda");
      if (lam.size() != s.lambdas.size()) throw ScheduleError("stored lambda length mismatch");
      for (std::size_t i = 0; i < lam.size(); ++i) {
        if (Rational::parse(lam[i].get<std::string>()) != s.lambdas[i]) {
          throw ScheduleError("stored lambda_" + std::to_string(i) + " mismatch");
        }
      }
    }
    if (j.contains("radii")) {
      const auto& r = j.at("radii");
      if (r.size() != s.radii.size()) throw ScheduleError("stored radii length mismatch");
      for (std::size_t i = 0; i < r.size(); ++i) {
        if (parse_decimal(r[i].get<std::string>()) != s.radii[i]) {
          throw ScheduleError("stored r_" + std::to_string(i) + " mismatch");
        }
      }
    }
    validate_schedule(s);
    return s;
  } catch (const Json::exception& e) {
    throw ScheduleError(std::string("malformed schedule JSON: ") + e.what());
  }
}

Json to_json(const LevelAssignment& la) {
  Json j;
  j["seed"] = la.seed;
  j["F"] = la.F;
  j["forced"] = la.forced;
  j["levels"] = la.levels;
  return j;
}

LevelAssignment levels_from_json(const Json& j) {
  try {
    LevelAssignment la = forced_levels(j.at("levels").get<std::vector<int>>(), j.at("F").get<int>());
    la.forced = j.value("forced", true);
    la.seed = j.value("seed", std::uint64_t{0});
    return la;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed level JSON: ") + e.what());
  }
}

Json to_json(const RunConfig& c) {
  Json j;
  j["subcommand"] = c.subcommand;
  j["input"] = c.input;
  j["k"] = c.k;
  j["f"] = c.f;
  j["t"] = decimal(c.t);
  j["variant"] = c.variant;
  j["seed"] = c.seed;
  j["output"] = c.output;
  j["levels_in"] = c.levels_in;
  j["pairs"] = {{"exhaustive_limit", c.pairs.exhaustive_limit},
                {"sample_sources", c.pairs.sample_sources},
                {"per_source", c.pairs.per_source},
                {"seed", c.pairs.seed}};
  j["threads"] = c.threads;
  return j;
}

RunConfig run_config_from_json(const Json& j) {
  try {
    RunConfig c;
    c.subcommand = j.at("subcommand").get<std::string>();
    c.input = j.value("input", "");
    c.k = j.at("k").get<int>();
    c.f = j.at("f").get<std::string>();
    c.t = parse_decimal(j.at("t").get<std::string>());
    c.variant = j.at("variant").get<std::string>();
    c.seed = j.at("seed").get<std::uint64_t>();
    c.output = j.value("output", "");
    c.levels_in = j.value("levels_in", "");
    const auto& p = j.at("pairs");
    c.pairs.exhaustive_limit = p.at("exhaustive_limit").get<std::size_t>();
    c.pairs.sample_sources = p.at("sample_sources").get<std::size_t>();
    c.pairs.per_source = p.at("per_source").get<std::size_t>();
    c.pairs.seed = p.at("seed").get<std::uint64_t>();
    c.threads = j.value("threads", 1u);
    c.pairs.threads = c.threads;
    return c;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed run config: ") + e.what());
  }
}

void write_artifact(std::ostream& out, const HopsetEdgeSet& h, std::size_t n) {
  write_header(out, "hopset", n, h.size(), h.schedule, h.levels);
  for (const auto& e : h.edges) {
    out << e.x << ' ' << e.y << ' ' << format_weight(e.w) << " #";
    for (const auto& p : e.prov) out << ' ' << hopset_tag(p);
    out << '\n';
  }
}

void write_artifact(std::ostream& out, const SpannerEdgeSet& s, std::size_t n) {
  write_header(out, variant_name(s.schedule.variant), n, s.size(), s.schedule, s.levels);
  for (const auto& e : s.edges) {
    out << e.u << ' ' << e.v << " 1 #";
    for (const auto& p : e.prov) out << ' ' << spanner_tag(p);
    out << '\n';
  }
}

Artifact read_artifact(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError("artifact: empty input");
  Json h;
  try {
    h = Json::parse(line);
  } catch (const Json::exception& e) {
    throw ParseError(std::string("artifact header: ") + e.what());
  }
  if (h.value("format", "") != "hopspan-artifact") throw ParseError("artifact: unknown format");
  if (!std::getline(in, line) || line != "---") throw ParseError("artifact: missing separator");
  Artifact a;
  a.kind = h.at("kind").get<std::string>();
  a.n = h.at("n").get<std::size_t>();
  a.schedule = schedule_from_json(h.at("schedule"));
  a.levels = levels_from_json(h.at("levels"));
  a.levels.forced = h.at("levels").value("forced", false);
  if (a.levels.size() != a.n) throw ParseError("artifact: level table size differs from n");
  std::size_t lineno = 2;
  while (std::getline(in, line)) {
    ++lineno;
    std::string tag;
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      tag = line.substr(hash + 1);
      line.resize(hash);
      if (!tag.empty() && tag.front() == ' ') tag.erase(0, 1);
    }
    std::istringstream ls(line);
    std::uint64_t x = 0, y = 0;
    std::string ws;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (!(ls >> x >> y >> ws)) throw ParseError("artifact line " + std::to_string(lineno) + ": expected x y w");
    const double w = parse_decimal(ws);
    if (x >= a.n || y >= a.n || !(w >= 0) || std::isinf(w)) {
      throw ParseError("artifact line " + std::to_string(lineno) + ": invalid edge");
    }
    a.edges.push_back({static_cast<Vertex>(x), static_cast<Vertex>(y), w});
    a.tags.push_back(tag);
  }
  if (h.contains("m") && h.at("m").get<std::size_t>() != a.edges.size()) {
    throw ParseError("artifact: edge count differs from header");
  }
  return a;
}

Json to_json(const VerificationReport& r) {
  Json j;
  j["kind"] = r.kind;
  j["alpha"] = decimal(r.alpha);
  j["beta"] = decimal(r.beta);
  j["exhaustive"] = r.exhaustive;
  j["pairs_checked"] = r.pairs_checked;
  j["pairs_skipped"] = r.pairs_skipped;
  j["violations"] = r.violations;
  j["below_distance"] = r.below_distance;
  j["max_ratio"] = decimal(r.max_ratio);
  j["max_excess"] = decimal(r.max_excess);
  j["worst"] = {{"u", r.worst.u}, {"v", r.worst.v}, {"d", decimal(r.worst.d)},
                {"observed", decimal(r.worst.observed)}};
  j["histogram"] = r.histogram;
  j["pass"] = r.pass;
  return j;
}

void write_records_csv(std::ostream& out, const VerificationReport& r) {
  out << "u,v,d,observed,ratio\n";
  for (const auto& p : r.records) {
    out << p.u << ',' << p.v << ',' << decimal(p.d) << ',' << decimal(p.observed) << ','
        << (p.d > 0 ? decimal(p.observed / p.d) : "") << '\n';
  }
}

Json to_json(const HopsetSizeStats& s) {
  Json j;
  j["total"] = s.total;
  j["pivot"] = s.pivot;
  j["bunch"] = s.bunch;
  j["pivot_by_level"] = s.pivot_by_level;
  j["bunch_by_level"] = s.bunch_by_level;
  j["f_squared_bound"] = decimal(s.f_squared_bound);
  j["linear_bound"] = decimal(s.linear_bound);
  j["log_bound"] = decimal(s.log_bound);
  return j;
}

Json to_json(const SpannerSizeStats& s) {
  Json j;
  j["total"] = s.total;
  j["pivot_path_by_level"] = s.pivot_path_by_level;
  j["bunch_path_by_level"] = s.bunch_path_by_level;
  j["f_squared_bound"] = decimal(s.f_squared_bound);
  return j;
}

Json to_json(const JumpCertificate& c) {
  Json j;
  j["u"] = c.u;
  j["v"] = c.v;
  j["t"] = decimal(c.t);
  j["d"] = decimal(c.d);
  j["applicable"] = c.applicable;
  j["ok"] = c.ok;
  if (!c.diagnostic.empty()) j["diagnostic"] = c.diagnostic;
  Json segs = Json::array();
  for (const auto& s : c.segments) {
    segs.push_back({{"head", s.head}, {"end", s.end}, {"score", s.score},
                    {"length", decimal(s.length)}, {"weight", decimal(s.weight)},
                    {"hops", s.hops}, {"final", s.final}});
  }
  j["segments"] = segs;
  Json hops = Json::array();
  for (const auto& h : c.hops) {
    hops.push_back({{"from", h.from}, {"to", h.to}, {"w", decimal(h.w)},
                    {"hopset", h.hopset_edge}});
  }
  j["hops"] = hops;
  j["weight"] = decimal(c.weight);
  j["hop_count"] = c.hop_count;
  j["weight_bound"] = decimal(c.weight_bound);
  j["hop_budget"] = c.hop_budget;
  return j;
}

Json tower_sidecar(const TowerGraph& tg) {
  Json j;
  j["kind"] = "tower";
  j["k"] = tg.k;
  j["f"] = tg.f.str();
  j["alpha"] = tg.alpha;
  j["a"] = tg.a;
  j["n"] = tg.graph.num_vertices();
  j["copies"] = tg.copies;
  j["tower_size"] = tg.tower_size;
  j["layer_mult"] = tg.layer_mult;
  j["non_asymptotic"] = tg.non_asymptotic;
  j["weight_scale"] = tg.scale;
  Json radii = Json::array();
  for (const auto& r : tg.radii) radii.push_back(r.str());
  j["radii"] = radii;
  j["schedule"] = to_json(tg.schedule);
  Json layers = Json::array();
  for (std::size_t c = 0; c < tg.copies; ++c) {
    for (int i = 0; i < tg.F(); ++i) {
      const Vertex lo = tg.first(c, i);
      layers.push_back({{"tower", c}, {"layer", i}, {"first", lo},
                        {"last", lo + tg.layer_size[i] - 1}});
    }
  }
  j["layers"] = layers;
  return j;
}

}  // namespace hopspan
