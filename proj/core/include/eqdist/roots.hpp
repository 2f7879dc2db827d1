// Copyright (c) 2026 The eqdist authors.
// SPDX-License-Identifier: Apache-2.0
//
// Simultaneous (Ehrlich-Aberth) root finding for one-variable polynomial
// samples with heavy-tailed coefficient magnitudes.
//
// Coefficients arrive in log-polar form and may span thousands of decimal
// orders, far beyond what a single double-precision scaling can hold. The
// finder works off the Newton polygon (upper convex hull of (k, log|c_k|)):
// hull edges give the root radii; runs of edges with comparable radii are
// solved together as a block after rescaling z by the block's central
// radius, which keeps every block's coefficients inside double range.
// Blocks are separated by radius gaps, so cross-block coupling is smaller
// than the working precision.
//
// Radius conventions at the double-precision boundary:
//   - hull edges with log radius below -700 produce roots that underflow
//     doubles; they are reported as exact roots at the origin (their true
//     moduli are below 1e-304), alongside the exact zeros from trailing
//     zero coefficients;
//   - hull edges with log radius above +700 produce roots that overflow
//     doubles; those degrees are dropped and counted in dropped_leading
//     (they carry no mass, mirroring the trimmed-leading-coefficient rule).
//
// Every representable root carries a relative residual certificate
// |p(r)| / sum_k |c_k||r|^k evaluated in log space against the full,
// untrimmed polynomial. Origin roots get residual 0 by the convention
// above.

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "eqdist/ensembles.hpp"
#include "eqdist/logspace.hpp"

namespace eqdist {

struct RootSet {
  std::vector<Complex> roots;    // size == realized_degree
  int realized_degree = 0;       // nominal n minus dropped_leading
  int dropped_leading = 0;       // exactly-zero or beyond-double leading degrees
  std::vector<double> residuals;  // per root: |p(r)| / sum_k |c_k| |r|^k

  double max_residual() const;
};

struct RootFindOptions {
  double tol = 1e-10;          // relative correction threshold per root
  int max_iter = 200;          // Ehrlich-Aberth sweeps per block
  double residual_tol = 1e-8;  // accepted-output certificate
};

/// Iteration failed to produce certified roots; carries partial output.
class NoConvergence : public std::runtime_error {
 public:
  NoConvergence(const std::string& what, RootSet partial, int iterations, double max_residual)
      : std::runtime_error(what), partial_(std::move(partial)), iterations_(iterations),
        max_residual_(max_residual) {}
  const RootSet& partial() const noexcept { return partial_; }
  int iterations() const noexcept { return iterations_; }
  double max_residual() const noexcept { return max_residual_; }

 private:
  RootSet partial_;
  int iterations_;
  double max_residual_;
};

RootSet find_roots(const PolynomialSample& p, const RootFindOptions& opts = {});

/// Weight carried by each found root in the normalized counting measure:
/// 1 / nominal_n. Dropped leading degrees carry no mass, so the measure is
/// a sub-probability measure when the realized degree falls short.
double mass_per_root(int nominal_n);

}  // namespace eqdist
