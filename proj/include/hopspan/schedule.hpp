#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "hopspan/rational.hpp"

namespace hopspan {

struct ScheduleError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

enum class LevelKind { Linear, Identity, Interleaved, Custom };

// Monotone map f from a vertex level to the highest bunch level it connects
// to, with f(i) >= i. Linear and the built-in kinds are defined on all of N;
// a custom table is defined on 0..size-1.
class LevelFunction {
 public:
  static LevelFunction linear(int k);
  static LevelFunction identity();
  static LevelFunction interleaved(int c);
  static LevelFunction custom(std::vector<int> table);
  // "linear:K", "identity", "interleaved:C", "custom:f0,f1,..."
  static LevelFunction parse(const std::string& spec);

  [[nodiscard]] LevelKind kind() const { return kind_; }
  [[nodiscard]] int param() const { return param_; }
  [[nodiscard]] const std::vector<int>& table() const { return table_; }
  [[nodiscard]] std::string str() const;

  // f(i); throws ScheduleError outside the domain.
  [[nodiscard]] int operator()(int i) const;
  // min{i : f(i) >= j}; throws ScheduleError when no such i exists.
  [[nodiscard]] int inverse(int j) const;
  // Largest i on which f is defined, or -1 for unbounded kinds.
  [[nodiscard]] int domain_max() const;

  friend bool operator==(const LevelFunction&, const LevelFunction&) = default;

 private:
  LevelKind kind_ = LevelKind::Identity;
  int param_ = 0;
  std::vector<int> table_;
};

enum class Variant { Hopset, SpannerTruncated, SpannerHalf };

std::string variant_name(Variant v);
Variant parse_variant(const std::string& s);

struct LambdaSequence {
  std::vector<Rational> lambdas;  // λ_0 .. λ_{F-1}
  int F = 0;
};

LambdaSequence compute_lambdas(int k, const LevelFunction& f, Variant v);

// r_0 .. r_F under the recurrence of the given variant.
std::vector<double> compute_radii(const LevelFunction& f, double t, int F,
                                  Variant v, double r0 = 1.0);

struct ParamSchedule {
  int k = 1;
  LevelFunction f;
  Variant variant = Variant::Hopset;
  std::vector<Rational> lambdas;
  int F = 0;
  double t = 1.0;
  double r0 = 1.0;
  std::vector<double> radii;

  [[nodiscard]] double lambda(int j) const { return lambdas.at(j).to_double(); }
  [[nodiscard]] double rF() const { return radii.back(); }
  // Highest bunch level a vertex of level `level` connects to.
  [[nodiscard]] int bunch_top(int level) const;
  // ceil(4 r_F) + 3.
  [[nodiscard]] std::size_t hop_budget() const;
  // Same λ/F, radii recomputed for another t.
  [[nodiscard]] ParamSchedule with_t(double t) const;
};

ParamSchedule make_schedule(int k, const LevelFunction& f, Variant v,
                            double t = 1.0, double r0 = 1.0);

// Rechecks every structural invariant; throws ScheduleError on the first
// violation. Used when loading a stored schedule.
void validate_schedule(const ParamSchedule& s);

// Λ_j = 1 + Σ_{l<j} λ_l for j = 0..F.
std::vector<Rational> prefix_lambda(const std::vector<Rational>& lambdas);

double rF_upper_bound(int k, double c);

enum class PowerMeanStatus { Holds, Fails, PreconditionUnmet };

struct GridSpec {
  double lo = 0.0;
  double hi = 10.0;
  int steps = 100;  // points per axis, endpoints included
};

// a x^{1+1/d} + b y^{1+1/d} >= (x+y)^{1+1/d} on every grid point.
PowerMeanStatus power_mean_inequality_holds(double a, double b, double d,
                                            const GridSpec& grid);

// r_{j+1} = (1+1/α) r_j + (2+1/α) r_{f^{-1}(j)}, r_0 = 1, for j+1 <= F.
std::vector<double> lower_bound_radii(const LevelFunction& f, double alpha, int F);
std::vector<Rational> lower_bound_radii_exact(const LevelFunction& f,
                                              std::int64_t alpha, int F);

}  // namespace hopspan
