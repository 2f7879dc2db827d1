// Copyright (c) 2026 The eqdist authors.
// SPDX-License-Identifier: Apache-2.0
//
// Orthonormal polynomial bases with respect to discretized compactly
// supported measures, closed-form bases where available, and deterministic
// coefficient arrays f_{n,k} (profile-generated or induced by circularly
// symmetric weighted measures). All coefficient magnitudes are handled in
// log space: weighted integrands e^{-2nS} underflow doubles near n ~ 400.

#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "eqdist/logspace.hpp"
#include "eqdist/potential.hpp"

namespace eqdist {

struct MeasureSpec {
  enum class ClosedForm { None, CircleUniform, IntervalArcsine };

  std::vector<Complex> nodes;
  std::vector<double> weights;  // positive, finite total
  std::string label;
  ClosedForm closed_form = ClosedForm::None;
  double circle_radius = 1.0;  // CircleUniform parameter

  /// Probability measure on the circle of radius R, discretized on
  /// `node_count` equispaced nodes (exact for polynomial Grams up to degree
  /// floor((node_count-1)/2)).
  static MeasureSpec circle_uniform(double R, std::size_t node_count);

  /// Arcsine (Chebyshev equilibrium) measure on [-1, 1], discretized on
  /// Chebyshev nodes with equal Gauss-Chebyshev weights.
  static MeasureSpec interval_arcsine(std::size_t node_count);

  static MeasureSpec from_nodes(std::vector<Complex> nodes, std::vector<double> weights,
                                std::string label);
};

/// Lower-triangular monomial coefficients of an orthonormal family:
/// q_j(z) = sum_{i<=j} coeff(j,i) z^i with coeff(j,j) real positive.
class OrthoBasis {
 public:
  OrthoBasis(int degree, std::vector<Complex> packed_rows);

  int degree() const { return degree_; }
  std::span<const Complex> row(int j) const;
  Complex coeff(int j, int i) const;

  Complex evaluate(int j, Complex z) const;
  /// log|q_j(z)| for all j, stable across huge dynamic range.
  std::vector<double> log_abs_values(Complex z) const;

 private:
  int degree_;
  std::vector<Complex> packed_;  // row j at offset j(j+1)/2, length j+1
};

/// Deterministic magnitudes f_{n,k} >= 0 multiplying i.i.d. noise per
/// monomial, stored as log f_{n,k}.
class CoefficientArray {
 public:
  enum class Provenance { Profile, WeightedRadial, Explicit };

  int degree() const { return n_; }
  double log_f(int k) const { return log_f_.at(static_cast<std::size_t>(k)); }
  double f(int k) const { return std::exp(log_f(k)); }  // may overflow for extreme arrays
  Provenance provenance() const { return provenance_; }
  const std::string& label() const { return label_; }

  static CoefficientArray kac(int n);
  static CoefficientArray from_log(std::vector<double> log_f, Provenance prov, std::string label);
  static CoefficientArray from_values(std::span<const double> f, std::string label);

 private:
  CoefficientArray() = default;
  int n_ = 0;
  std::vector<double> log_f_;
  Provenance provenance_ = Provenance::Explicit;
  std::string label_;
};

/// Cholesky-type triangular factorization of the monomial Gram matrix, with
/// one reorthogonalization pass; bypassed by the closed form when the
/// measure carries one. Throws IllConditionedMeasure when the Gram matrix
/// is not numerically positive definite (smallest eigenvalue <= 1e-13 of
/// the largest): the discretization cannot support degree n.
OrthoBasis gram_schmidt_basis(const MeasureSpec& measure, int n);

/// f_{n,j} = ( sum_i w_i r_i^{2j} e^{-2 n S(r_i)} )^{-1/2} for a radial
/// measure given as (radius, weight) pairs and a radial weight S.
CoefficientArray weighted_radial_coefficients(std::span<const std::pair<double, double>> tau,
                                              const std::function<double(double)>& S, int n);

/// f_{n,k} = f(k/n)^n.
CoefficientArray profile_array(const Profile& p, int n);

/// (1/2n) log sum_k |f_{n,k} z^k|^2, the array-side finite-n potential.
double potential_from_coefficients(const CoefficientArray& arr, Complex z);
/// (1/2n) log sum_j |q_j(z)|^2, the basis-side finite-n potential.
double potential_from_coefficients(const OrthoBasis& basis, Complex z);

/// |{ k in [0, n] : |f_{n,k}| |z|^k >= e^{n (V - eps)} }|.
std::size_t condition_ii_count(const CoefficientArray& arr, Complex z, double eps, double V);

/// sup-norm over nodes divided by the L^2(tau) norm, for one coefficient
/// vector (monomial coefficients).
double sup_over_l2_ratio(const MeasureSpec& measure, std::span<const Complex> coeffs);

/// Max of sup_over_l2_ratio over `trials` random degree-n polynomials with
/// i.i.d. complex Gaussian monomial coefficients; diagnostic for the
/// subexponential sup/L2 growth of the measure.
double bernstein_markov_ratio(const MeasureSpec& measure, int n, int trials, std::uint64_t seed);

}  // namespace eqdist
