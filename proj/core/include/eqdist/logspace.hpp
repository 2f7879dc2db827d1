// Copyright (c) 2026 The eqdist authors.
// SPDX-License-Identifier: Apache-2.0
//
// Log-polar complex arithmetic. Heavy-tailed coefficient laws produce values
// whose log-modulus exceeds 700, so the usual double-precision complex
// representation overflows at the sampling step. A LogComplex carries the
// modulus in log space and the phase as a unit complex number; sums factor
// out the largest term before exponentiating.

#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <span>
#include <vector>

namespace eqdist {

using Complex = std::complex<double>;

inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();

/// value = exp(log_abs) * phase, with |phase| == 1.
/// log_abs == -inf encodes exact zero (phase then unspecified).
struct LogComplex {
  double log_abs = kNegInf;
  Complex phase = {1.0, 0.0};

  static LogComplex zero() { return {}; }

  static LogComplex from(Complex v) {
    if (v == Complex{0.0, 0.0}) return zero();
    const double m = std::abs(v);
    return {std::log(m), v / m};
  }

  static LogComplex from_polar(double log_abs, double arg) {
    return {log_abs, std::polar(1.0, arg)};
  }

  bool is_zero() const { return log_abs == kNegInf; }

  /// May overflow to inf / underflow to 0 when |log_abs| is extreme.
  Complex to_complex() const {
    if (is_zero()) return {0.0, 0.0};
    return std::exp(log_abs) * phase;
  }

  friend LogComplex operator*(const LogComplex& a, const LogComplex& b) {
    if (a.is_zero() || b.is_zero()) return zero();
    LogComplex r{a.log_abs + b.log_abs, a.phase * b.phase};
    const double m = std::abs(r.phase);
    if (m != 0.0 && std::abs(m - 1.0) > 1e-14) {
      r.log_abs += std::log(m);
      r.phase /= m;
    }
    return r;
  }

  friend LogComplex operator*(const LogComplex& a, Complex b) {
    return a * LogComplex::from(b);
  }
};

/// log(sum_i exp(terms[i])); -inf entries are skipped.
double log_sum_exp(std::span<const double> terms);

/// Sum of log-polar values, computed by factoring out the largest modulus.
LogComplex log_polar_sum(std::span<const LogComplex> terms);

/// log|p(z)| for p given by monomial coefficients in log-polar form,
/// coeffs[k] multiplying z^k. Returns -inf when p(z) == 0 exactly.
/// Correct for coefficient/term magnitudes spanning hundreds of decimal
/// orders: the max log-magnitude term is factored out before summation.
double log_abs_poly(std::span<const LogComplex> coeffs, Complex z);

/// Same, for plain complex coefficients (no prior overflow assumed in the
/// coefficients themselves; terms c_k z^k may still span a huge range).
double log_abs_poly(std::span<const Complex> coeffs, Complex z);

/// log(sum_k |coeffs[k]| r^k) for r >= 0; the scale used by relative
/// residual certificates.
double log_abs_sum_poly(std::span<const LogComplex> coeffs, double r);
double log_abs_sum_poly(std::span<const Complex> coeffs, double r);

}  // namespace eqdist
