#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "hopspan/construction.hpp"
#include "hopspan/hopset.hpp"
#include "hopspan/schedule.hpp"
#include "hopspan/spanner.hpp"
#include "hopspan/tower.hpp"
#include "hopspan/trace.hpp"
#include "hopspan/verifier.hpp"

namespace hopspan {

using Json = nlohmann::ordered_json;

// Shortest decimal that round-trips to the same double.
std::string decimal(double x);

Json to_json(const ParamSchedule& s);
// Rebuilds from (k, f, variant, t, r0) and checks the stored λ, F and radii
// against the recomputation; throws ScheduleError on any mismatch.
ParamSchedule schedule_from_json(const Json& j);

Json to_json(const LevelAssignment& la);
LevelAssignment levels_from_json(const Json& j);

struct RunConfig {
  std::string subcommand;
  std::string input;
  int k = 3;
  std::string f = "identity";
  double t = 1.0;
  std::string variant = "hopset";
  std::uint64_t seed = 1;
  std::string output;
  std::string levels_in;  // optional forced level table
  PairSpec pairs;
  unsigned threads = 1;
};

Json to_json(const RunConfig& c);
RunConfig run_config_from_json(const Json& j);

// Artifact text: one JSON header line, a `---` line, then `x y w # tags`.
struct Artifact {
  std::string kind;  // "hopset", "spanner-trunc" or "spanner-half"
  std::size_t n = 0;
  ParamSchedule schedule;
  LevelAssignment levels;
  std::vector<Edge> edges;
  std::vector<std::string> tags;  // provenance per edge, informational
};

void write_artifact(std::ostream& out, const HopsetEdgeSet& h, std::size_t n);
void write_artifact(std::ostream& out, const SpannerEdgeSet& s, std::size_t n);
Artifact read_artifact(std::istream& in);

Json to_json(const VerificationReport& r);
void write_records_csv(std::ostream& out, const VerificationReport& r);

Json to_json(const HopsetSizeStats& s);
Json to_json(const SpannerSizeStats& s);
Json to_json(const JumpCertificate& c);
// Sidecar for a generated tower graph: layer map, schedule, mode flags.
Json tower_sidecar(const TowerGraph& tg);

}  // namespace hopspan
