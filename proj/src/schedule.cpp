#include "hopspan/schedule.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace hopspan {

LevelFunction LevelFunction::linear(int k) {
  if (k < 1) throw ScheduleError("linear level function needs k >= 1");
  LevelFunction f;
  f.kind_ = LevelKind::Linear;
  f.param_ = k;
  return f;
}

LevelFunction LevelFunction::identity() { return LevelFunction{}; }

LevelFunction LevelFunction::interleaved(int c) {
  if (c < 1) throw ScheduleError("interleaved level function needs c >= 1");
  LevelFunction f;
  f.kind_ = LevelKind::Interleaved;
  f.param_ = c;
  return f;
}

LevelFunction LevelFunction::custom(std::vector<int> table) {
  if (table.empty()) throw ScheduleError("custom level function table is empty");
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table[i] < static_cast<int>(i)) {
      throw ScheduleError("custom level function violates f(i) >= i at i=" +
                          std::to_string(i));
    }
    if (i > 0 && table[i] < table[i - 1]) {
      throw ScheduleError("custom level function is not monotone at i=" +
                          std::to_string(i));
    }
  }
  LevelFunction f;
  f.kind_ = LevelKind::Custom;
  f.table_ = std::move(table);
  return f;
}

LevelFunction LevelFunction::parse(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string name = spec.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
  auto need_int = [&](const std::string& s) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(s, &used);
      if (used == s.size()) return v;
    } catch (const std::logic_error&) {
    }
    throw ScheduleError("bad level function `" + spec + "`");
  };
  if (name == "identity" && arg.empty()) return identity();
  if (name == "linear") return linear(need_int(arg));
  if (name == "interleaved") return interleaved(need_int(arg));
  if (name == "custom") {
    std::vector<int> table;
    std::stringstream ss(arg);
    std::string tok;
    while (std::getline(ss, tok, ',')) table.push_back(need_int(tok));
    return custom(std::move(table));
  }
  throw ScheduleError("unknown level function `" + spec + "`");
}

std::string LevelFunction::str() const {
  switch (kind_) {
    case LevelKind::Linear:
      return "linear:" + std::to_string(param_);
    case LevelKind::Identity:
      return "identity";
    case LevelKind::Interleaved:
      return "interleaved:" + std::to_string(param_);
    case LevelKind::Custom: {
      std::string s = "custom:";
      for (std::size_t i = 0; i < table_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(table_[i]);
      }
      return s;
    }
  }
  return "";
}

int LevelFunction::domain_max() const {
  return kind_ == LevelKind::Custom ? static_cast<int>(table_.size()) - 1 : -1;
}

int LevelFunction::operator()(int i) const {
  if (i < 0) throw ScheduleError("level function evaluated at negative level");
  switch (kind_) {
    case LevelKind::Linear:
      return std::max(param_, i);
    case LevelKind::Identity:
      return i;
    case LevelKind::Interleaved:
      return (i / param_) * param_ + param_ - 1;
    case LevelKind::Custom:
      if (i >= static_cast<int>(table_.size())) {
        throw ScheduleError("custom level function undefined at i=" + std::to_string(i));
      }
      return table_[i];
  }
  return i;
}

int LevelFunction::inverse(int j) const {
  if (j < 0) throw ScheduleError("f^{-1} of a negative level");
  switch (kind_) {
    case LevelKind::Linear:
      return j <= param_ ? 0 : j;
    case LevelKind::Identity:
      return j;
    case LevelKind::Interleaved:
      return (j / param_) * param_;
    case LevelKind::Custom: {
      auto it = std::lower_bound(table_.begin(), table_.end(), j);
      if (it == table_.end()) {
        throw ScheduleError("f^{-1}(" + std::to_string(j) +
                            ") undefined: custom table tops out at " +
                            std::to_string(table_.back()));
      }
      return static_cast<int>(it - table_.begin());
    }
  }
  return j;
}

std::string variant_name(Variant v) {
  switch (v) {
    case Variant::Hopset:
      return "hopset";
    case Variant::SpannerTruncated:
      return "spanner-trunc";
    case Variant::SpannerHalf:
      return "spanner-half";
  }
  return "";
}

Variant parse_variant(const std::string& s) {
  if (s == "hopset") return Variant::Hopset;
  if (s == "spanner-trunc" || s == "spanner-truncated") return Variant::SpannerTruncated;
  if (s == "spanner-half") return Variant::SpannerHalf;
  throw ScheduleError("unknown variant `" + s + "`");
}

LambdaSequence compute_lambdas(int k, const LevelFunction& f, Variant v) {
  if (k < 1) throw ScheduleError("k must be >= 1");
  const Rational scale = v == Variant::SpannerHalf ? Rational(1, 3) : Rational(1);
  const Rational target(k + 1);
  LambdaSequence out;
  std::vector<Rational> prefix{Rational(0)};  // prefix[j] = Σ_{l<j} λ_l
  while (prefix.back() < target) {
    const int j = static_cast<int>(out.lambdas.size());
    const Rational lam = scale * (Rational(1) + prefix[f.inverse(j)]);
    out.lambdas.push_back(lam);
    prefix.push_back(prefix.back() + lam);
  }
  out.F = static_cast<int>(out.lambdas.size());
  return out;
}

std::vector<double> compute_radii(const LevelFunction& f, double t, int F,
                                  Variant v, double r0) {
  if (!(t > 0) || !std::isfinite(t)) throw ScheduleError("t must be positive");
  if (F < 1) throw ScheduleError("F must be >= 1");
  if (!(r0 > 0)) throw ScheduleError("r_0 must be positive");
  std::vector<double> r{r0};
  for (int i = 1; i <= F; ++i) {
    const double prev = r[i - 1];
    const double back = r[f.inverse(i - 1)];
    double next = 0;
    switch (v) {
      case Variant::Hopset:
        next = (1 + 4 / t) * prev + (2 + 4 / t) * back;
        break;
      case Variant::SpannerTruncated:
        next = (1 + 4 / t) * prev + (2 + 4 / t) * back + 2;
        break;
      case Variant::SpannerHalf:
        next = (2 + 8 / t) * prev + (3 + 8 / t) * back + 4;
        break;
    }
    r.push_back(next);
  }
  return r;
}

int ParamSchedule::bunch_top(int level) const {
  const int eff = std::min(level, F - 1);
  return std::min(f(eff), F - 1);
}

std::size_t ParamSchedule::hop_budget() const {
  return static_cast<std::size_t>(std::ceil(4 * rF())) + 3;
}

ParamSchedule ParamSchedule::with_t(double new_t) const {
  ParamSchedule s = *this;
  s.t = new_t;
  s.radii = compute_radii(f, new_t, F, variant, r0);
  return s;
}

ParamSchedule make_schedule(int k, const LevelFunction& f, Variant v, double t,
                            double r0) {
  ParamSchedule s;
  s.k = k;
  s.f = f;
  s.variant = v;
  LambdaSequence ls = compute_lambdas(k, f, v);
  s.lambdas = std::move(ls.lambdas);
  s.F = ls.F;
  if (f.domain_max() >= 0 && f.domain_max() < s.F - 1) {
    throw ScheduleError("custom level function must be defined on 0..F-1 (F=" +
                        std::to_string(s.F) + ")");
  }
  s.t = t;
  s.r0 = r0;
  s.radii = compute_radii(f, t, s.F, v, r0);
  return s;
}

void validate_schedule(const ParamSchedule& s) {
  const ParamSchedule fresh = make_schedule(s.k, s.f, s.variant, s.t, s.r0);
  if (fresh.F != s.F) throw ScheduleError("F is not minimal for this k and f");
  if (fresh.lambdas != s.lambdas) {
    throw ScheduleError("λ sequence does not satisfy the recurrence");
  }
  if (s.radii.size() != fresh.radii.size()) {
    throw ScheduleError("radii must list r_0..r_F");
  }
  for (std::size_t i = 0; i < s.radii.size(); ++i) {
    const double a = s.radii[i], b = fresh.radii[i];
    if (std::abs(a - b) > 1e-12 * std::max(1.0, std::abs(b))) {
      throw ScheduleError("r_" + std::to_string(i) + " does not satisfy the recurrence");
    }
    if (i > 0 && s.radii[i] < s.radii[i - 1]) {
      throw ScheduleError("radii are not monotone");
    }
  }
}

std::vector<Rational> prefix_lambda(const std::vector<Rational>& lambdas) {
  std::vector<Rational> big{Rational(1)};
  for (const Rational& l : lambdas) big.push_back(big.back() + l);
  return big;
}

double rF_upper_bound(int k, double c) {
  if (k < 1) throw ScheduleError("k must be >= 1");
  if (!(c >= 2) || c != std::floor(c)) {
    throw ScheduleError("c must be an integer >= 2");
  }
  const double e2 = std::exp(2.0);
  return 96 * e2 * std::pow(static_cast<double>(k), 1 + 2 / std::log(c));
}

PowerMeanStatus power_mean_inequality_holds(double a, double b, double d,
                                            const GridSpec& grid) {
  if (!(a > 1) || !(b > 1) || !(d > 0)) return PowerMeanStatus::PreconditionUnmet;
  if (std::pow(a, -d) + std::pow(b, -d) > 1 + 1e-15) {
    return PowerMeanStatus::PreconditionUnmet;
  }
  if (grid.steps < 1 || grid.lo < 0 || grid.hi < grid.lo) {
    throw std::invalid_argument("bad grid");
  }
  const double e = 1 + 1 / d;
  const int pts = std::max(grid.steps, 1);
  auto coord = [&](int i) {
    return pts == 1 ? grid.lo : grid.lo + (grid.hi - grid.lo) * i / (pts - 1);
  };
  for (int i = 0; i < pts; ++i) {
    const double x = coord(i);
    for (int j = 0; j < pts; ++j) {
      const double y = coord(j);
      const double lhs = a * std::pow(x, e) + b * std::pow(y, e);
      const double rhs = std::pow(x + y, e);
      if (lhs < rhs * (1 - 1e-12)) return PowerMeanStatus::Fails;
    }
  }
  return PowerMeanStatus::Holds;
}

std::vector<double> lower_bound_radii(const LevelFunction& f, double alpha, int F) {
  if (!(alpha >= 1)) throw ScheduleError("alpha must be >= 1");
  std::vector<double> r{1.0};
  for (int j = 0; j + 1 <= F; ++j) {
    r.push_back((1 + 1 / alpha) * r[j] + (2 + 1 / alpha) * r[f.inverse(j)]);
  }
  return r;
}

std::vector<Rational> lower_bound_radii_exact(const LevelFunction& f,
                                              std::int64_t alpha, int F) {
  if (alpha < 1) throw ScheduleError("alpha must be >= 1");
  const Rational a = Rational(1) + Rational(1, alpha);
  const Rational b = Rational(2) + Rational(1, alpha);
  std::vector<Rational> r{Rational(1)};
  for (int j = 0; j + 1 <= F; ++j) r.push_back(a * r[j] + b * r[f.inverse(j)]);
  return r;
}

}  // namespace hopspan
