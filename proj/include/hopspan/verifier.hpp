#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hopspan/graph.hpp"

namespace hopspan {

// Which ordered pairs (u < v) get checked.
struct PairSpec {
  std::size_t exhaustive_limit = 300;  // all pairs when n <= this
  std::size_t sample_sources = 64;     // otherwise: this many random sources
  std::size_t per_source = 100;        // targets per source, spread over distance deciles
  std::uint64_t seed = 1;
  unsigned threads = 1;
};

struct PairRecord {
  Vertex u = 0;
  Vertex v = 0;
  Weight d = 0;         // d_G(u,v)
  Weight observed = 0;  // d^{(β)}_{G∪H}(u,v) or d_S(u,v)
};

struct VerificationReport {
  std::string kind;  // "hopset" or "spanner"
  double alpha = 1;  // multiplicative
  double beta = 0;   // hop budget (hopset) or additive term (spanner)
  bool exhaustive = true;
  std::size_t pairs_checked = 0;
  std::size_t pairs_skipped = 0;  // disconnected in G
  std::size_t violations = 0;
  std::size_t below_distance = 0;  // observed < d_G, must stay 0
  double max_ratio = 1;            // max observed/d over pairs with d > 0
  double max_excess = 0;           // max observed - bound (<= 0 on a pass)
  PairRecord worst;
  // Ratio observed/d bucketed into ten equal bins over [1, alpha], plus one
  // overflow bin for ratios above alpha.
  std::vector<std::size_t> histogram = std::vector<std::size_t>(11, 0);
  std::vector<PairRecord> records;  // filled when requested
  bool pass = true;
};

struct HopsetClaim {
  double alpha = 1;
  std::size_t beta = 1;
};

struct SpannerClaim {
  double mult = 1;
  double add = 0;
};

// Relative slack for floating comparisons against a bound.
inline constexpr double kRelTol = 1e-12;

VerificationReport verify_hopset(const Graph& g, const std::vector<Edge>& h,
                                 double alpha, std::size_t beta,
                                 const PairSpec& pairs = {}, bool keep_records = false);
// One traversal per source serves every claim.
std::vector<VerificationReport> verify_hopset_claims(const Graph& g,
                                                     const std::vector<Edge>& h,
                                                     const std::vector<HopsetClaim>& claims,
                                                     const PairSpec& pairs = {},
                                                     bool keep_records = false);

// Throws std::invalid_argument when s is not a subgraph of g.
VerificationReport verify_spanner(const Graph& g, const Graph& s, double mult,
                                  double add, const PairSpec& pairs = {},
                                  bool keep_records = false);
std::vector<VerificationReport> verify_spanner_claims(
    const Graph& g, const Graph& s, const std::vector<SpannerClaim>& claims,
    const PairSpec& pairs = {}, bool keep_records = false);

// Smallest β >= 1 for which every connected pair has a ≤β-hop path of weight
// at most alpha·d; std::nullopt when even n-1 hops do not suffice.
std::optional<std::size_t> measure_min_hopbound(const Graph& g,
                                                const std::vector<Edge>& h,
                                                double alpha, unsigned threads = 1);

// Sources and targets actually visited for a given spec.
std::vector<std::pair<Vertex, std::vector<Vertex>>> select_pairs(
    const Graph& g, const PairSpec& pairs);

}  // namespace hopspan
