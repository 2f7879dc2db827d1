// Copyright (c) 2026 The eqdist authors.
// SPDX-License-Identifier: Apache-2.0
//
// Independent test-side oracles. These stay deliberately separate from the
// library implementation paths they check.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include "eqdist/logspace.hpp"

namespace eqdist::testing {

/// Hausdorff distance between two finite point sets.
inline double hausdorff(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  auto one_sided = [](const std::vector<Complex>& from, const std::vector<Complex>& to) {
    double worst = 0.0;
    for (const auto& p : from) {
      double best = std::numeric_limits<double>::infinity();
      for (const auto& q : to) best = std::min(best, std::abs(p - q));
      worst = std::max(worst, best);
    }
    return worst;
  };
  return std::max(one_sided(a, b), one_sided(b, a));
}

/// Exact binomial coefficient as double (valid far past n = 64 for our use).
inline double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  long double acc = 1.0L;
  for (int i = 1; i <= k; ++i) acc = acc * static_cast<long double>(n - k + i) / i;
  return static_cast<double>(acc);
}

/// Chebyshev polynomial of the first kind at a real point, by recurrence.
inline double chebyshev_t(int n, double x) {
  if (n == 0) return 1.0;
  double prev = 1.0, cur = x;
  for (int k = 2; k <= n; ++k) {
    const double next = 2.0 * x * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

/// Roots of a quadratic a z^2 + b z + c, the numerically careful variant.
inline std::vector<Complex> quadratic_roots(Complex a, Complex b, Complex c) {
  const Complex disc = std::sqrt(b * b - 4.0 * a * c);
  // pick the sign that avoids cancellation in -b -/+ disc
  const Complex q = (std::real(std::conj(b) * disc) >= 0.0) ? -0.5 * (b + disc)
                                                            : -0.5 * (b - disc);
  std::vector<Complex> roots;
  roots.push_back(q / a);
  roots.push_back(c / q);
  return roots;
}

/// Binomial-CI margin for an empirical frequency of a probability p over
/// `count` samples: 4 standard deviations.
inline double binomial_margin(double p, std::size_t count) {
  return 4.0 * std::sqrt(std::max(p * (1.0 - p), 1e-12) / static_cast<double>(count));
}

}  // namespace eqdist::testing
