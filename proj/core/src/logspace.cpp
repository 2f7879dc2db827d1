// Copyright (c) 2026 The eqdist authors.
// SPDX-License-Identifier: Apache-2.0

#include "eqdist/logspace.hpp"

#include <algorithm>

namespace eqdist {

namespace {

// Unit phases z^k accumulated by running product; renormalize periodically
// so the modulus drift stays below 1e-13 over thousands of terms.
class PhasePowers {
 public:
  explicit PhasePowers(Complex unit) : unit_(unit) {}

  Complex next() {
    Complex out = cur_;
    cur_ *= unit_;
    if (++count_ % 512 == 0) {
      const double m = std::abs(cur_);
      if (m > 0.0) cur_ /= m;
    }
    return out;
  }

 private:
  Complex unit_;
  Complex cur_{1.0, 0.0};
  std::size_t count_ = 0;
};

}  // namespace

double log_sum_exp(std::span<const double> terms) {
  double m = kNegInf;
  for (double t : terms) m = std::max(m, t);
  if (m == kNegInf) return kNegInf;
  double s = 0.0;
  for (double t : terms) {
    if (t != kNegInf) s += std::exp(t - m);
  }
  return m + std::log(s);
}

LogComplex log_polar_sum(std::span<const LogComplex> terms) {
  double m = kNegInf;
  for (const auto& t : terms) m = std::max(m, t.log_abs);
  if (m == kNegInf) return LogComplex::zero();
  Complex s{0.0, 0.0};
  for (const auto& t : terms) {
    if (!t.is_zero()) s += std::exp(t.log_abs - m) * t.phase;
  }
  if (s == Complex{0.0, 0.0}) return LogComplex::zero();
  const double sm = std::abs(s);
  return {m + std::log(sm), s / sm};
}

double log_abs_poly(std::span<const LogComplex> coeffs, Complex z) {
  const std::size_t n = coeffs.size();
  if (n == 0) return kNegInf;
  const double r = std::abs(z);
  if (r == 0.0) return coeffs[0].log_abs;
  const double logr = std::log(r);
  const Complex zphase = z / r;

  double m = kNegInf;
  for (std::size_t k = 0; k < n; ++k) {
    if (!coeffs[k].is_zero())
      m = std::max(m, coeffs[k].log_abs + static_cast<double>(k) * logr);
  }
  if (m == kNegInf) return kNegInf;

  Complex s{0.0, 0.0};
  PhasePowers pw(zphase);
  for (std::size_t k = 0; k < n; ++k) {
    const Complex zk = pw.next();
    if (coeffs[k].is_zero()) continue;
    const double lt = coeffs[k].log_abs + static_cast<double>(k) * logr - m;
    if (lt > -745.0) s += std::exp(lt) * coeffs[k].phase * zk;
  }
  if (s == Complex{0.0, 0.0}) return kNegInf;
  return m + std::log(std::abs(s));
}

double log_abs_poly(std::span<const Complex> coeffs, Complex z) {
  std::vector<LogComplex> lc(coeffs.size());
  for (std::size_t k = 0; k < coeffs.size(); ++k) lc[k] = LogComplex::from(coeffs[k]);
  return log_abs_poly(std::span<const LogComplex>(lc), z);
}

double log_abs_sum_poly(std::span<const LogComplex> coeffs, double r) {
  const std::size_t n = coeffs.size();
  if (n == 0) return kNegInf;
  if (r == 0.0) return coeffs[0].log_abs;
  const double logr = std::log(r);
  std::vector<double> terms;
  terms.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (!coeffs[k].is_zero())
      terms.push_back(coeffs[k].log_abs + static_cast<double>(k) * logr);
  }
  return log_sum_exp(terms);
}

double log_abs_sum_poly(std::span<const Complex> coeffs, double r) {
  std::vector<LogComplex> lc(coeffs.size());
  for (std::size_t k = 0; k < coeffs.size(); ++k) lc[k] = LogComplex::from(coeffs[k]);
  return log_abs_sum_poly(std::span<const LogComplex>(lc), r);
}

}  // namespace eqdist
