// Copyright (c) 2026 The eqdist authors.
// SPDX-License-Identifier: Apache-2.0
//
// Discrepancy statistics between the normalized zero-counting measure and a
// radial limit measure, potential-convergence checks on annulus grids, and
// the concentration / covering diagnostics.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eqdist/ensembles.hpp"
#include "eqdist/logspace.hpp"
#include "eqdist/potential.hpp"
#include "eqdist/roots.hpp"

namespace eqdist {

/// The zero multiset with uniform weight 1/nominal_n per atom. Total mass
/// is below 1 when the realized degree fell short of nominal (dropped
/// leading coefficients carry no mass).
struct EmpiricalMeasure {
  std::vector<Complex> atoms;
  int nominal_n = 1;

  double weight() const { return 1.0 / static_cast<double>(nominal_n); }
  double total_mass() const { return static_cast<double>(atoms.size()) * weight(); }

  static EmpiricalMeasure from_roots(const RootSet& rs, int nominal_n);
};

struct DiscrepancyReport {
  double radial_ks = 0.0;
  std::vector<double> weyl;
  double annulus_mass = 0.0;
  std::optional<double> potential_l1;
  std::optional<double> bl_estimate;
  std::optional<double> clip_bias;
};

/// Serialization with fixed field names:
/// radial_ks, weyl, annulus_mass, potential_l1, bl_estimate, clip_bias.
std::string discrepancy_json(const DiscrepancyReport& report);

/// sup_r |F_emp(r) - F_limit(r)| over atom radii (right-continuous
/// empirical CDF with weight 1/nominal_n), including left limits and the
/// mass deficit at infinity.
double radial_ks(const EmpiricalMeasure& emp, const LimitPotential& limit);

/// W_k = |sum_atoms e^{i k arg(atom)}| / nominal_n for k = 1..k_max.
/// Atoms at the origin contribute with arg 0.
std::vector<double> weyl_sums(const EmpiricalMeasure& emp, std::size_t k_max);

/// Total weight of atoms with r_lo < |atom| < r_hi.
double annulus_mass(const EmpiricalMeasure& emp, double r_lo, double r_hi);

/// Polar product grid on the annulus r_lo <= |z| <= r_hi; cell weights are
/// the polar areas at midpoint nodes.
struct AnnulusGrid {
  double r_lo = 0.25, r_hi = 2.5;
  std::size_t n_r = 64, n_theta = 64;
};

/// Per-variable polar grid on the torus shell r_lo <= |z_i| <= r_hi.
struct TorusShellGrid {
  double r_lo = 0.5, r_hi = 1.5;
  std::size_t n_r = 16, n_theta = 16;
};

struct PotentialError {
  double l1 = 0.0;        // cell-weighted mean of |(1/n) log|p| - V|
  double clip_bias = 0.0;  // bound on the bias from clipping exact zeros at -20
};

/// Exact zeros on grid points are clipped: (1/n) log|p| := -20 there, and
/// the resulting bias bound (cell weight x 20, normalized) is reported.
PotentialError potential_l1_error(const PolynomialSample& p, const LimitPotential& V,
                                  const AnnulusGrid& grid = {});
PotentialError potential_l1_error_2(const PolynomialSample2& p, const CompactSetModel& torus,
                                    const TorusShellGrid& grid = {});

/// Lower-bound estimator of the concentration function Q(X; r): the best
/// fraction of samples inside an open ball of radius r, searching centers
/// over the sample points themselves.
double concentration_estimate(std::span<const Complex> samples, double r);

struct KrBound {
  double bound = 0.0;
  bool satisfied = false;
};

/// Kolmogorov-Rogozin: Q(sum) <= C / sqrt(sum_i (1 - Q_i)). Throws
/// DegenerateTerms when every Q_i equals 1.
KrBound kr_bound_check(std::span<const double> per_term_q, double sum_q, double C);

/// Greedy cover count with balls of the given (closed) radius; an upper
/// bound on the minimal cover within a factor O(log n). Ties break toward
/// the lowest point index.
std::size_t covering_number(std::span<const Complex> points, double radius);

/// { c_k z^k / ||(c_k z^k)_k||_2 }, computed in log space before
/// normalization.
std::vector<Complex> normalized_coefficient_points(const PolynomialSample& p, Complex z);

/// Fixed 21x21 grid of Lipschitz hat test functions on [-2.5, 2.5]^2 with
/// the limit-side integrals precomputed; estimate() is then linear in the
/// atom count. Auxiliary output only.
class BlTestGrid {
 public:
  explicit BlTestGrid(const LimitPotential& limit);
  double estimate(const EmpiricalMeasure& emp) const;

 private:
  std::vector<Complex> centers_;
  std::vector<double> limit_integrals_;
};

}  // namespace eqdist
