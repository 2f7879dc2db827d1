// Copyright (c) 2026 The eqdist authors.
// SPDX-License-Identifier: Apache-2.0
//
// Concrete random polynomial draws. Samples carry monomial coefficients in
// log-polar form so heavy-tailed draws (log|xi| far beyond 709) survive
// intact; the triangular basis combination happens once at draw time.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "eqdist/bases.hpp"
#include "eqdist/logspace.hpp"
#include "eqdist/rng.hpp"
#include "eqdist/rngdist.hpp"

namespace eqdist {

struct PolynomialSample {
  int n = 0;  // nominal degree; coeffs has n+1 entries, leading ones may be zero
  std::vector<LogComplex> coeffs;
  std::string ensemble_label;
  std::uint64_t seed = 0;
  std::uint64_t trial = 0;

  /// Coefficients divided by the largest modulus, as plain complex numbers;
  /// *log_scale receives the log of that modulus. Entries below about
  /// e^-745 relative underflow to zero.
  std::vector<Complex> scaled_coeffs(double* log_scale = nullptr) const;
};

/// Two-variable sample with coefficients on { (i,j) : i+j <= n }, stored in
/// lexicographic order: degree blocks s = 0..n, within a block ascending i.
struct PolynomialSample2 {
  int n = 0;
  std::vector<LogComplex> coeffs;
  std::string ensemble_label;
  std::uint64_t seed = 0;
  std::uint64_t trial = 0;

  static std::size_t index(int i, int j) {
    const int s = i + j;
    return static_cast<std::size_t>(s) * (s + 1) / 2 + static_cast<std::size_t>(i);
  }
  static std::size_t coeff_count(int n) {
    return static_cast<std::size_t>(n + 1) * (n + 2) / 2;
  }
};

/// Kac: H_n(z) = sum_j xi_j z^j; coefficients are the first n+1 draws of
/// the (seed, trial) stream. Throws IdenticallyZero (never resamples).
PolynomialSample draw_kac(int n, const DistributionSpec& dist, std::uint64_t seed,
                          std::uint64_t trial);
PolynomialSample draw_kac(int n, const DistributionSpec& dist, RngStream stream,
                          std::uint64_t seed, std::uint64_t trial);

/// H_n(z) = sum_j xi_j q_j(z), stored as monomial coefficients xi^T C.
PolynomialSample draw_ortho(int n, const OrthoBasis& basis, const DistributionSpec& dist,
                            std::uint64_t seed, std::uint64_t trial);
PolynomialSample draw_ortho(int n, const OrthoBasis& basis, const DistributionSpec& dist,
                            RngStream stream, std::uint64_t seed, std::uint64_t trial);

/// G_n(z) = sum_k xi_k f_{n,k} z^k.
PolynomialSample draw_array(const CoefficientArray& arr, const DistributionSpec& dist,
                            std::uint64_t seed, std::uint64_t trial);
PolynomialSample draw_array(const CoefficientArray& arr, const DistributionSpec& dist,
                            RngStream stream, std::uint64_t seed, std::uint64_t trial);

/// Two-variable Kac: K_n(z1,z2) = sum_{i+j<=n} xi_{i,j} z1^i z2^j.
PolynomialSample2 draw_kac2(int n, const DistributionSpec& dist, std::uint64_t seed,
                            std::uint64_t trial);
PolynomialSample2 draw_kac2(int n, const DistributionSpec& dist, RngStream stream,
                            std::uint64_t seed, std::uint64_t trial);

/// log|p(z)|; -inf when p(z) == 0 exactly. Stable for terms spanning
/// hundreds of decimal orders.
double log_abs_eval(const PolynomialSample& p, Complex z);
double log_abs_eval_2(const PolynomialSample2& p, Complex z1, Complex z2);

}  // namespace eqdist
