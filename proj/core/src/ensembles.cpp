// Copyright (c) 2026 The eqdist authors.
// SPDX-License-Identifier: Apache-2.0

#include "eqdist/ensembles.hpp"

#include <algorithm>
#include <cmath>

#include "eqdist/errors.hpp"

namespace eqdist {

namespace {

bool all_zero(const std::vector<LogComplex>& coeffs) {
  return std::all_of(coeffs.begin(), coeffs.end(),
                     [](const LogComplex& c) { return c.is_zero(); });
}

void reject_zero(const std::vector<LogComplex>& coeffs, const std::string& label) {
  if (all_zero(coeffs))
    throw IdenticallyZero("drawn polynomial is identically zero (" + label + ")");
}

}  // namespace

std::vector<Complex> PolynomialSample::scaled_coeffs(double* log_scale) const {
  double m = kNegInf;
  for (const auto& c : coeffs) m = std::max(m, c.log_abs);
  if (log_scale != nullptr) *log_scale = m;
  std::vector<Complex> out(coeffs.size(), Complex{0.0, 0.0});
  if (m == kNegInf) return out;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k].is_zero()) continue;
    const double lt = coeffs[k].log_abs - m;
    if (lt > -745.0) out[k] = std::exp(lt) * coeffs[k].phase;
  }
  return out;
}

PolynomialSample draw_kac(int n, const DistributionSpec& dist, std::uint64_t seed,
                          std::uint64_t trial) {
  return draw_kac(n, dist, RngStream(seed).substream(trial), seed, trial);
}

PolynomialSample draw_kac(int n, const DistributionSpec& dist, RngStream stream,
                          std::uint64_t seed, std::uint64_t trial) {
  if (n < 1) throw std::invalid_argument("draw_kac: n must be >= 1");
  PolynomialSample p;
  p.n = n;
  p.coeffs = sample_log(dist, stream, static_cast<std::size_t>(n) + 1);
  p.ensemble_label = "kac";
  p.seed = seed;
  p.trial = trial;
  reject_zero(p.coeffs, p.ensemble_label);
  return p;
}

PolynomialSample draw_ortho(int n, const OrthoBasis& basis, const DistributionSpec& dist,
                            std::uint64_t seed, std::uint64_t trial) {
  return draw_ortho(n, basis, dist, RngStream(seed).substream(trial), seed, trial);
}

PolynomialSample draw_ortho(int n, const OrthoBasis& basis, const DistributionSpec& dist,
                            RngStream stream, std::uint64_t seed, std::uint64_t trial) {
  if (n < 1) throw std::invalid_argument("draw_ortho: n must be >= 1");
  if (basis.degree() < n) throw std::invalid_argument("draw_ortho: basis degree too small");
  const auto xi = sample_log(dist, stream, static_cast<std::size_t>(n) + 1);

  PolynomialSample p;
  p.n = n;
  p.coeffs.assign(static_cast<std::size_t>(n) + 1, LogComplex::zero());
  std::vector<LogComplex> terms;
  for (int i = 0; i <= n; ++i) {
    terms.clear();
    for (int j = i; j <= n; ++j) {
      const Complex c = basis.coeff(j, i);
      if (c == Complex{0.0, 0.0} || xi[static_cast<std::size_t>(j)].is_zero()) continue;
      terms.push_back(xi[static_cast<std::size_t>(j)] * c);
    }
    p.coeffs[static_cast<std::size_t>(i)] = log_polar_sum(terms);
  }
  p.ensemble_label = "ortho";
  p.seed = seed;
  p.trial = trial;
  reject_zero(p.coeffs, p.ensemble_label);
  return p;
}

PolynomialSample draw_array(const CoefficientArray& arr, const DistributionSpec& dist,
                            std::uint64_t seed, std::uint64_t trial) {
  return draw_array(arr, dist, RngStream(seed).substream(trial), seed, trial);
}

PolynomialSample draw_array(const CoefficientArray& arr, const DistributionSpec& dist,
                            RngStream stream, std::uint64_t seed, std::uint64_t trial) {
  const int n = arr.degree();
  const auto xi = sample_log(dist, stream, static_cast<std::size_t>(n) + 1);

  PolynomialSample p;
  p.n = n;
  p.coeffs.resize(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    const auto& x = xi[static_cast<std::size_t>(k)];
    const double lf = arr.log_f(k);
    p.coeffs[static_cast<std::size_t>(k)] =
        (x.is_zero() || lf == kNegInf) ? LogComplex::zero() : LogComplex{x.log_abs + lf, x.phase};
  }
  p.ensemble_label = "array:" + arr.label();
  p.seed = seed;
  p.trial = trial;
  reject_zero(p.coeffs, p.ensemble_label);
  return p;
}

PolynomialSample2 draw_kac2(int n, const DistributionSpec& dist, std::uint64_t seed,
                            std::uint64_t trial) {
  return draw_kac2(n, dist, RngStream(seed).substream(trial), seed, trial);
}

PolynomialSample2 draw_kac2(int n, const DistributionSpec& dist, RngStream stream,
                            std::uint64_t seed, std::uint64_t trial) {
  if (n < 1) throw std::invalid_argument("draw_kac2: n must be >= 1");
  PolynomialSample2 p;
  p.n = n;
  p.coeffs = sample_log(dist, stream, PolynomialSample2::coeff_count(n));
  p.ensemble_label = "kac2";
  p.seed = seed;
  p.trial = trial;
  if (all_zero(p.coeffs)) throw IdenticallyZero("drawn polynomial is identically zero (kac2)");
  return p;
}

double log_abs_eval(const PolynomialSample& p, Complex z) {
  return log_abs_poly(std::span<const LogComplex>(p.coeffs), z);
}

double log_abs_eval_2(const PolynomialSample2& p, Complex z1, Complex z2) {
  const double r1 = std::abs(z1);
  const double r2 = std::abs(z2);

  // A vanishing variable reduces to the one-variable slice along the other.
  if (r1 == 0.0 || r2 == 0.0) {
    std::vector<LogComplex> slice;
    const int n = p.n;
    if (r1 == 0.0 && r2 == 0.0) return p.coeffs[0].log_abs;
    if (r1 == 0.0) {
      for (int j = 0; j <= n; ++j) slice.push_back(p.coeffs[PolynomialSample2::index(0, j)]);
      return log_abs_poly(std::span<const LogComplex>(slice), z2);
    }
    for (int i = 0; i <= n; ++i) slice.push_back(p.coeffs[PolynomialSample2::index(i, 0)]);
    return log_abs_poly(std::span<const LogComplex>(slice), z1);
  }

  const double lr1 = std::log(r1);
  const double lr2 = std::log(r2);
  const Complex ph1 = z1 / r1;
  const Complex ph2 = z2 / r2;

  std::vector<Complex> pow1(static_cast<std::size_t>(p.n) + 1);
  std::vector<Complex> pow2(static_cast<std::size_t>(p.n) + 1);
  pow1[0] = pow2[0] = Complex{1.0, 0.0};
  for (int k = 1; k <= p.n; ++k) {
    pow1[static_cast<std::size_t>(k)] = pow1[static_cast<std::size_t>(k - 1)] * ph1;
    pow2[static_cast<std::size_t>(k)] = pow2[static_cast<std::size_t>(k - 1)] * ph2;
    if (k % 256 == 0) {
      pow1[static_cast<std::size_t>(k)] /= std::abs(pow1[static_cast<std::size_t>(k)]);
      pow2[static_cast<std::size_t>(k)] /= std::abs(pow2[static_cast<std::size_t>(k)]);
    }
  }

  double m = kNegInf;
  for (int s = 0; s <= p.n; ++s) {
    for (int i = 0; i <= s; ++i) {
      const auto& c = p.coeffs[PolynomialSample2::index(i, s - i)];
      if (!c.is_zero()) m = std::max(m, c.log_abs + i * lr1 + (s - i) * lr2);
    }
  }
  if (m == kNegInf) return kNegInf;

  Complex acc{0.0, 0.0};
  for (int s = 0; s <= p.n; ++s) {
    for (int i = 0; i <= s; ++i) {
      const auto& c = p.coeffs[PolynomialSample2::index(i, s - i)];
      if (c.is_zero()) continue;
      const double lt = c.log_abs + i * lr1 + (s - i) * lr2 - m;
      if (lt > -745.0)
        acc += std::exp(lt) * c.phase * pow1[static_cast<std::size_t>(i)] *
               pow2[static_cast<std::size_t>(s - i)];
    }
  }
  if (acc == Complex{0.0, 0.0}) return kNegInf;
  return m + std::log(std::abs(acc));
}

}  // namespace eqdist
