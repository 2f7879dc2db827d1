// Copyright (c) 2026 The eqdist authors.
// SPDX-License-Identifier: Apache-2.0

#include "eqdist/potential.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace eqdist {

CompactSetModel CompactSetModel::circle(double R) {
  if (!(R > 0.0)) throw std::invalid_argument("circle radius must be positive");
  CompactSetModel k;
  k.kind = Kind::CircleOfRadius;
  k.radius = R;
  return k;
}

CompactSetModel CompactSetModel::interval(double a, double b) {
  if (!(a < b)) throw std::invalid_argument("interval requires a < b");
  CompactSetModel k;
  k.kind = Kind::Interval;
  k.a = a;
  k.b = b;
  return k;
}

double green_value(const CompactSetModel& K, Complex z) {
  switch (K.kind) {
    case CompactSetModel::Kind::UnitCircle:
      return std::max(0.0, std::log(std::abs(z)));
    case CompactSetModel::Kind::CircleOfRadius:
      return std::max(0.0, std::log(std::abs(z) / K.radius));
    case CompactSetModel::Kind::Interval: {
      // Affine transport to [-1, 1], then log|w + sqrt(w^2 - 1)| with the
      // branch of modulus >= 1 (the two candidates have product of moduli 1).
      const Complex w = (2.0 * z - Complex(K.a + K.b, 0.0)) / (K.b - K.a);
      const Complex s = std::sqrt(w * w - Complex(1.0, 0.0));
      const double m = std::max(std::abs(w + s), std::abs(w - s));
      return std::max(0.0, std::log(m));
    }
    case CompactSetModel::Kind::Torus2:
      throw std::logic_error("green_value: Torus2 is a two-variable compact");
  }
  return 0.0;
}

double green_value_2(const CompactSetModel& K, Complex z1, Complex z2) {
  if (K.kind != CompactSetModel::Kind::Torus2)
    throw std::logic_error("green_value_2 requires a Torus2 compact");
  return std::max({0.0, std::log(std::abs(z1)), std::log(std::abs(z2))});
}

double small_value_area_bound(int n, double leading, double r) {
  if (n < 1 || !(leading > 0.0) || r < 0.0)
    throw std::invalid_argument("small_value_area_bound: need n >= 1, leading > 0, r >= 0");
  return std::numbers::pi * n * r * r * std::exp(-2.0 * std::log(leading) / n);
}

Profile::Profile(std::function<double(double)> f, std::string label, std::size_t grid_points)
    : f_(std::move(f)), label_(std::move(label)) {
  if (grid_points < 1025) grid_points = 1025;
  grid_log_.resize(grid_points);
  for (std::size_t i = 0; i < grid_points; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(grid_points - 1);
    const double v = f_(t);
    if (!(v > 0.0)) throw std::invalid_argument("profile must be strictly positive on [0,1]");
    grid_log_[i] = std::log(v);
  }
}

Profile Profile::constant(double c) {
  if (!(c > 0.0)) throw std::invalid_argument("constant profile must be positive");
  return Profile([c](double) { return c; }, "const:" + std::to_string(c));
}

Profile Profile::elliptic() {
  auto f = [](double t) {
    double h = 0.0;
    if (t > 0.0 && t < 1.0) h = -t * std::log(t) - (1.0 - t) * std::log(1.0 - t);
    return std::exp(0.5 * h);
  };
  return Profile(f, "elliptic");
}

double profile_potential(const Profile& p, Complex z) {
  const double r = std::abs(z);
  if (r == 0.0) return p.log_value(0.0);
  const double s = std::log(r);
  const std::size_t m = p.grid_size();
  const double dt = 1.0 / static_cast<double>(m - 1);

  std::size_t best = 0;
  double best_val = kNegInf;
  for (std::size_t i = 0; i < m; ++i) {
    const double v = static_cast<double>(i) * dt * s + p.grid_log_value(i);
    if (v > best_val) {
      best_val = v;
      best = i;
    }
  }

  // Ternary refinement over the cells bracketing the grid argmax; valid
  // because t s + log f(t) is concave there for log-concave f, and harmless
  // (never below the grid value) otherwise.
  double lo = (best == 0) ? 0.0 : (best - 1) * dt;
  double hi = (best + 1 >= m) ? 1.0 : (best + 1) * dt;
  auto g = [&](double t) { return t * s + p.log_value(t); };
  for (int it = 0; it < 200 && hi - lo > 1e-13; ++it) {
    const double t1 = lo + (hi - lo) / 3.0;
    const double t2 = hi - (hi - lo) / 3.0;
    if (g(t1) < g(t2))
      lo = t1;
    else
      hi = t2;
  }
  return std::max(best_val, g(0.5 * (lo + hi)));
}

LimitPotential LimitPotential::from_compact(const CompactSetModel& K) {
  LimitPotential lp;
  switch (K.kind) {
    case CompactSetModel::Kind::UnitCircle:
      lp.radial_ = true;
      lp.label_ = "circle:1";
      break;
    case CompactSetModel::Kind::CircleOfRadius:
      lp.radial_ = true;
      lp.label_ = "circle:" + std::to_string(K.radius);
      break;
    case CompactSetModel::Kind::Interval:
      lp.radial_ = false;
      lp.label_ = "interval";
      break;
    case CompactSetModel::Kind::Torus2:
      throw std::logic_error("LimitPotential::from_compact: Torus2 has no one-variable potential");
  }
  lp.eval_ = [K](Complex z) { return green_value(K, z); };
  return lp;
}

LimitPotential LimitPotential::from_profile(const Profile& p) {
  LimitPotential lp;
  lp.radial_ = true;
  lp.label_ = "profile:" + p.label();
  auto shared = std::make_shared<Profile>(p);
  lp.eval_ = [shared](Complex z) { return profile_potential(*shared, z); };
  return lp;
}

double LimitPotential::radial_cdf(double r) const {
  if (!radial_) throw std::logic_error("radial_cdf: limit potential is not radial");
  if (!(r > 0.0)) throw std::invalid_argument("radial_cdf: r must be positive");
  const double s = std::log(r);
  auto v = [&](double x) { return eval_(Complex(std::exp(x), 0.0)); };

  const double h = 1e-5;
  const double dplus = (v(s + h) - v(s)) / h;
  const double dminus = (v(s) - v(s - h)) / h;
  double d;
  if (std::abs(dplus - dminus) > 1e-3) {
    // Kink: take the right derivative with a shrinking forward difference
    // so the estimate settles on the branch immediately right of s.
    d = dplus;
    for (double hh = h / 8.0; hh >= 1e-8; hh /= 8.0) {
      const double dn = (v(s + hh) - v(s)) / hh;
      if (std::abs(dn - d) < 1e-4) {
        d = dn;
        break;
      }
      d = dn;
    }
  } else {
    d = (v(s + h) - v(s - h)) / (2.0 * h);
  }
  return std::clamp(d, 0.0, 1.0);
}

}  // namespace eqdist
