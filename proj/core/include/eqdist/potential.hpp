// Copyright (c) 2026 The eqdist authors.
// SPDX-License-Identifier: Apache-2.0
//
// Green functions of canonical compacts, limit potentials generated by
// coefficient profiles through the Legendre transform
//   V(z) = sup_{t in [0,1]} ( t log|z| + log f(t) ),
// and the induced radial limit CDFs F(r) = d/ds V(e^s) at s = log r.

#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "eqdist/logspace.hpp"

namespace eqdist {

struct CompactSetModel {
  enum class Kind { UnitCircle, Interval, CircleOfRadius, Torus2 };

  Kind kind = Kind::UnitCircle;
  double a = -1.0, b = 1.0;  // Interval endpoints, a < b
  double radius = 1.0;       // CircleOfRadius

  static CompactSetModel unit_circle() { return {Kind::UnitCircle, -1, 1, 1.0}; }
  static CompactSetModel circle(double R);
  static CompactSetModel interval(double a, double b);
  static CompactSetModel torus2() { return {Kind::Torus2, -1, 1, 1.0}; }
};

/// Closed-form Green function of a one-variable compact.
double green_value(const CompactSetModel& K, Complex z);

/// Green function of the two-variable unit torus: max(0, log|z1|, log|z2|).
double green_value_2(const CompactSetModel& K, Complex z1, Complex z2);

/// Area bound for the small-value set of a degree-n polynomial with leading
/// coefficient c:  m{ |P| <= r^n } <= pi n r^2 c^(-2/n).
double small_value_area_bound(int n, double leading, double r);

/// A continuous positive function on [0, 1], tabulated densely with a
/// continuous evaluator for local refinement. Throws std::invalid_argument
/// if the tabulation is not strictly positive.
class Profile {
 public:
  Profile(std::function<double(double)> f, std::string label, std::size_t grid_points = 2049);

  double value(double t) const { return f_(t); }
  double log_value(double t) const { return std::log(f_(t)); }
  std::size_t grid_size() const { return grid_log_.size(); }
  double grid_log_value(std::size_t i) const { return grid_log_[i]; }
  const std::string& label() const { return label_; }

  static Profile constant(double c);
  /// f(t) = exp(H(t)/2) with the binary entropy H(t) = -t ln t - (1-t) ln(1-t);
  /// the profile of the sqrt-binomial coefficient array.
  static Profile elliptic();

 private:
  std::function<double(double)> f_;
  std::vector<double> grid_log_;  // log f on the uniform grid
  std::string label_;
};

/// V(z) = sup_t (t log|z| + log f(t)): grid maximum refined by ternary
/// search on the bracketing cells. At z = 0 the sup is attained at t = 0.
double profile_potential(const Profile& p, Complex z);

/// A limit potential with its radial CDF. Built-ins come from circle-kind
/// compacts and from profiles; interval compacts carry a potential but no
/// radial CDF.
class LimitPotential {
 public:
  static LimitPotential from_compact(const CompactSetModel& K);
  static LimitPotential from_profile(const Profile& p);

  double value(Complex z) const { return eval_(z); }
  bool radial() const { return radial_; }
  const std::string& label() const { return label_; }

  /// Limit mass of the closed disk { |z| <= r }, as the right derivative of
  /// s -> V(e^s) at s = log r. Centered differences away from kinks,
  /// one-sided at detected kinks (slope jump above 1e-3); clamped to [0, 1].
  /// Throws std::logic_error when the source is not radial.
  double radial_cdf(double r) const;

 private:
  LimitPotential() = default;
  std::function<double(Complex)> eval_;
  bool radial_ = false;
  std::string label_;
};

}  // namespace eqdist
