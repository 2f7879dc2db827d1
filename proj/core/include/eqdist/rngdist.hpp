// Copyright (c) 2026 The eqdist authors.
// SPDX-License-Identifier: Apache-2.0
//
// I.i.d. non-degenerate complex coefficient laws with analytically known
// logarithmic tails, together with classifiers for the integrability
// conditions that decide which convergence regime an ensemble falls in.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eqdist/logspace.hpp"
#include "eqdist/rng.hpp"

namespace eqdist {

enum class DistKind {
  ComplexGaussian,  // circularly symmetric, E|xi|^2 = 1
  UniformDisk,      // uniform on the closed unit disk
  Rademacher,       // +1 / -1 with equal probability
  LogPareto,        // P(log|xi| > t) = min(1, t^-rho)
  LogParetoLog,     // P(log|xi| > t) = min(1, 1/(t ln t)) for t >= e
  PointPairs,       // finite discrete law
};

/// A named coefficient law. Non-degeneracy (support of at least two points)
/// is enforced at construction for PointPairs and holds by construction for
/// every other kind.
struct DistributionSpec {
  DistKind kind = DistKind::ComplexGaussian;
  double rho = 0.0;  // LogPareto tail exponent, > 0
  std::vector<Complex> values;  // PointPairs support
  std::vector<double> probs;    // PointPairs weights, sum to 1
  std::string label;

  static DistributionSpec complex_gaussian();
  static DistributionSpec uniform_disk();
  static DistributionSpec rademacher();
  static DistributionSpec log_pareto(double rho);
  static DistributionSpec log_pareto_log();
  /// Throws DegenerateLaw if fewer than two distinct support points or the
  /// weights do not sum to 1 within 1e-12.
  static DistributionSpec point_pairs(std::vector<Complex> values, std::vector<double> probs);
};

/// Draw `count` i.i.d. values in log-polar form. Deterministic given
/// (spec, stream): each continuous draw consumes exactly two uniforms
/// (modulus then phase), each discrete draw one.
std::vector<LogComplex> sample_log(const DistributionSpec& spec, RngStream stream,
                                   std::size_t count);

/// Convenience: sample as plain complex. Heavy-tailed kinds can produce
/// values whose modulus overflows double (they map to inf); use sample_log
/// when the draws feed further computation.
std::vector<Complex> sample(const DistributionSpec& spec, std::uint64_t seed,
                            std::size_t count);

/// Exact P(log|xi| > t) for t >= 0.
double log_tail(const DistributionSpec& spec, double t);

struct ConditionReport {
  bool meas_holds = false;         // log_tail(t) = o(t^-d)
  bool elog_power_finite = false;  // E[(log(1+|xi|))^d] < infinity
};

/// Analytic tail-condition classification in dimension d (1 or 2),
/// decided per kind from the closed-form tail, not empirically.
ConditionReport classify_conditions(const DistributionSpec& spec, int d);

struct TailPoint {
  double t = 0.0;
  double empirical = 0.0;
  double exact = 0.0;
};

/// Per grid point: fraction of samples with log|value| > t, next to the
/// exact tail. Sampler validation plumbing.
std::vector<TailPoint> empirical_tail_report(const DistributionSpec& spec,
                                             std::span<const LogComplex> samples,
                                             std::span<const double> t_grid);

/// Parse a label like "gaussian", "uniform-disk", "rademacher",
/// "logpareto:2", "logparetolog". Returns nullopt if unknown.
std::optional<DistributionSpec> parse_distribution(const std::string& text);

}  // namespace eqdist
