// Copyright (c) 2026 The eqdist authors.
// SPDX-License-Identifier: Apache-2.0

#include "eqdist/rngdist.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "eqdist/errors.hpp"

namespace eqdist {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Solve u * e^u = w for w >= e, i.e. u + ln u = ln w, by Newton iteration in
// log coordinates (no overflow for huge w). Used by the LogParetoLog
// inverse CDF: t ln t = w  =>  t = w / W0(w).
double lambert_w0_ge_e(double w) {
  const double logw = std::log(w);
  double u = logw > 1.0 ? logw - std::log(logw) : 1.0;
  for (int i = 0; i < 50; ++i) {
    const double h = u + std::log(u) - logw;
    const double step = h / (1.0 + 1.0 / u);
    u -= step;
    if (std::abs(step) < 1e-15 * std::abs(u)) break;
  }
  return u;
}

LogComplex draw_one(const DistributionSpec& spec, RngStream& rs) {
  switch (spec.kind) {
    case DistKind::ComplexGaussian: {
      // |xi|^2 ~ Exp(1), phase uniform: the circularly symmetric Gaussian
      // with E|xi|^2 = 1, via inverse CDF on the modulus.
      const double u = rs.next_unit();
      const double theta = kTwoPi * rs.next_unit();
      return LogComplex::from_polar(0.5 * std::log(-std::log(u)), theta);
    }
    case DistKind::UniformDisk: {
      const double u = rs.next_unit();
      const double theta = kTwoPi * rs.next_unit();
      return LogComplex::from_polar(0.5 * std::log(u), theta);
    }
    case DistKind::Rademacher: {
      return LogComplex{0.0, rs.next_bit() ? Complex{1.0, 0.0} : Complex{-1.0, 0.0}};
    }
    case DistKind::LogPareto: {
      // log|xi| = U^{-1/rho}: exact inverse CDF of the tail t^-rho on t >= 1.
      const double u = rs.next_unit();
      const double theta = kTwoPi * rs.next_unit();
      return LogComplex::from_polar(std::pow(u, -1.0 / spec.rho), theta);
    }
    case DistKind::LogParetoLog: {
      // Tail S(t) = 1/(t ln t) on t >= e with an atom of mass 1 - 1/e at e.
      const double u = rs.next_unit();
      const double theta = kTwoPi * rs.next_unit();
      double t;
      if (u >= 1.0 / std::numbers::e) {
        t = std::numbers::e;
      } else {
        const double w = 1.0 / u;
        const double lw = lambert_w0_ge_e(w);
        t = std::exp(std::log(w) - std::log(lw));
      }
      return LogComplex::from_polar(t, theta);
    }
    case DistKind::PointPairs: {
      const double u = rs.next_unit();
      double acc = 0.0;
      for (std::size_t i = 0; i < spec.values.size(); ++i) {
        acc += spec.probs[i];
        if (u < acc || i + 1 == spec.values.size()) return LogComplex::from(spec.values[i]);
      }
      return LogComplex::from(spec.values.back());
    }
  }
  return LogComplex::zero();
}

void validate(const DistributionSpec& spec) {
  if (spec.kind == DistKind::LogPareto && !(spec.rho > 0.0))
    throw DegenerateLaw("LogPareto requires rho > 0");
  if (spec.kind == DistKind::PointPairs) {
    if (spec.values.size() != spec.probs.size())
      throw DegenerateLaw("PointPairs values/probs size mismatch");
    double total = 0.0;
    for (double p : spec.probs) {
      if (p < 0.0) throw DegenerateLaw("PointPairs weight < 0");
      total += p;
    }
    if (std::abs(total - 1.0) > 1e-12)
      throw DegenerateLaw("PointPairs weights must sum to 1 within 1e-12");
    std::size_t support = 0;
    for (std::size_t i = 0; i < spec.values.size(); ++i) {
      if (spec.probs[i] <= 0.0) continue;
      bool dup = false;
      for (std::size_t j = 0; j < i; ++j) {
        if (spec.probs[j] > 0.0 && spec.values[j] == spec.values[i]) dup = true;
      }
      if (!dup) ++support;
    }
    if (support < 2) throw DegenerateLaw("PointPairs law is degenerate: support has < 2 points");
  }
}

}  // namespace

DistributionSpec DistributionSpec::complex_gaussian() {
  return {DistKind::ComplexGaussian, 0.0, {}, {}, "gaussian"};
}
DistributionSpec DistributionSpec::uniform_disk() {
  return {DistKind::UniformDisk, 0.0, {}, {}, "uniform-disk"};
}
DistributionSpec DistributionSpec::rademacher() {
  return {DistKind::Rademacher, 0.0, {}, {}, "rademacher"};
}
DistributionSpec DistributionSpec::log_pareto(double rho) {
  DistributionSpec s{DistKind::LogPareto, rho, {}, {}, "logpareto:" + std::to_string(rho)};
  validate(s);
  return s;
}
DistributionSpec DistributionSpec::log_pareto_log() {
  return {DistKind::LogParetoLog, 0.0, {}, {}, "logparetolog"};
}
DistributionSpec DistributionSpec::point_pairs(std::vector<Complex> values,
                                               std::vector<double> probs) {
  DistributionSpec s{DistKind::PointPairs, 0.0, std::move(values), std::move(probs),
                     "pointpairs"};
  validate(s);
  return s;
}

std::vector<LogComplex> sample_log(const DistributionSpec& spec, RngStream stream,
                                   std::size_t count) {
  validate(spec);
  std::vector<LogComplex> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(draw_one(spec, stream));
  return out;
}

std::vector<Complex> sample(const DistributionSpec& spec, std::uint64_t seed,
                            std::size_t count) {
  auto lp = sample_log(spec, RngStream(seed), count);
  std::vector<Complex> out(lp.size());
  for (std::size_t i = 0; i < lp.size(); ++i) out[i] = lp[i].to_complex();
  return out;
}

double log_tail(const DistributionSpec& spec, double t) {
  switch (spec.kind) {
    case DistKind::ComplexGaussian:
      // P(|xi| > r) = exp(-r^2) with r = e^t.
      return std::exp(-std::exp(2.0 * t));
    case DistKind::UniformDisk:
    case DistKind::Rademacher:
      return 0.0;  // |xi| <= 1 always
    case DistKind::LogPareto:
      if (t <= 0.0) return 1.0;
      return std::min(1.0, std::pow(t, -spec.rho));
    case DistKind::LogParetoLog:
      if (t < std::numbers::e) return 1.0;
      return std::min(1.0, 1.0 / (t * std::log(t)));
    case DistKind::PointPairs: {
      double p = 0.0;
      for (std::size_t i = 0; i < spec.values.size(); ++i) {
        const double m = std::abs(spec.values[i]);
        if (m > 0.0 && std::log(m) > t) p += spec.probs[i];
      }
      return p;
    }
  }
  return 0.0;
}

ConditionReport classify_conditions(const DistributionSpec& spec, int d) {
  ConditionReport r;
  switch (spec.kind) {
    case DistKind::ComplexGaussian:
    case DistKind::UniformDisk:
    case DistKind::Rademacher:
    case DistKind::PointPairs:
      // Tails decay faster than any power (or vanish): both conditions hold.
      r.meas_holds = true;
      r.elog_power_finite = true;
      break;
    case DistKind::LogPareto:
      // t^-rho = o(t^-d) iff rho > d; the moment integral t^{d-1-rho} also
      // converges iff rho > d, so the two conditions coincide here.
      r.meas_holds = spec.rho > static_cast<double>(d);
      r.elog_power_finite = spec.rho > static_cast<double>(d);
      break;
    case DistKind::LogParetoLog:
      // 1/(t ln t) = o(1/t) but the d = 1 moment integral diverges: the
      // in-probability-but-not-almost-sure regime. For d = 2 the tail is not
      // even o(t^-2).
      r.meas_holds = (d == 1);
      r.elog_power_finite = false;
      break;
  }
  return r;
}

std::vector<TailPoint> empirical_tail_report(const DistributionSpec& spec,
                                             std::span<const LogComplex> samples,
                                             std::span<const double> t_grid) {
  std::vector<TailPoint> out;
  out.reserve(t_grid.size());
  const double n = static_cast<double>(samples.size());
  for (double t : t_grid) {
    std::size_t count = 0;
    for (const auto& s : samples) {
      if (!s.is_zero() && s.log_abs > t) ++count;
    }
    out.push_back({t, n > 0.0 ? count / n : 0.0, log_tail(spec, t)});
  }
  return out;
}

std::optional<DistributionSpec> parse_distribution(const std::string& text) {
  if (text == "gaussian" || text == "complex-gaussian") return DistributionSpec::complex_gaussian();
  if (text == "uniform-disk" || text == "uniformdisk") return DistributionSpec::uniform_disk();
  if (text == "rademacher") return DistributionSpec::rademacher();
  if (text == "logparetolog") return DistributionSpec::log_pareto_log();
  const std::string lp = "logpareto:";
  if (text.rfind(lp, 0) == 0) {
    try {
      const double rho = std::stod(text.substr(lp.size()));
      if (rho > 0.0) return DistributionSpec::log_pareto(rho);
    } catch (const std::exception&) {
    }
    return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace eqdist
