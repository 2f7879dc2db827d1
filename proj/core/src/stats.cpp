// Copyright (c) 2026 The eqdist authors.
// SPDX-License-Identifier: Apache-2.0

#include "eqdist/stats.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <sstream>

#include "eqdist/errors.hpp"

namespace eqdist {

namespace {

constexpr double kLogClip = -20.0;

void append_double(std::ostringstream& os, double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  os << buf;
}

}  // namespace

EmpiricalMeasure EmpiricalMeasure::from_roots(const RootSet& rs, int nominal_n) {
  if (nominal_n < 1) throw std::invalid_argument("EmpiricalMeasure: nominal_n must be >= 1");
  return {rs.roots, nominal_n};
}

std::string discrepancy_json(const DiscrepancyReport& r) {
  std::ostringstream os;
  os << "{\"radial_ks\":";
  append_double(os, r.radial_ks);
  os << ",\"weyl\":[";
  for (std::size_t i = 0; i < r.weyl.size(); ++i) {
    if (i > 0) os << ',';
    append_double(os, r.weyl[i]);
  }
  os << "],\"annulus_mass\":";
  append_double(os, r.annulus_mass);
  os << ",\"potential_l1\":";
  if (r.potential_l1)
    append_double(os, *r.potential_l1);
  else
    os << "null";
  os << ",\"bl_estimate\":";
  if (r.bl_estimate)
    append_double(os, *r.bl_estimate);
  else
    os << "null";
  os << ",\"clip_bias\":";
  if (r.clip_bias)
    append_double(os, *r.clip_bias);
  else
    os << "null";
  os << '}';
  return os.str();
}

double radial_ks(const EmpiricalMeasure& emp, const LimitPotential& limit) {
  const double w = emp.weight();
  std::vector<double> radii(emp.atoms.size());
  for (std::size_t i = 0; i < emp.atoms.size(); ++i) radii[i] = std::abs(emp.atoms[i]);
  std::sort(radii.begin(), radii.end());

  auto flim = [&](double r) { return r <= 0.0 ? 0.0 : limit.radial_cdf(r); };

  double ks = 0.0;
  std::size_t i = 0;
  while (i < radii.size()) {
    std::size_t j = i;
    while (j < radii.size() && radii[j] == radii[i]) ++j;
    const double r = radii[i];
    const double fe_at = static_cast<double>(j) * w;
    const double fe_before = static_cast<double>(i) * w;
    ks = std::max(ks, std::abs(fe_at - flim(r)));
    // Left limit probed clear of the differentiation step inside radial_cdf.
    ks = std::max(ks, std::abs(fe_before - flim(r * (1.0 - 1e-4))));
    i = j;
  }
  const double r_tail = radii.empty() ? 1.0 : 2.0 * radii.back() + 1.0;
  ks = std::max(ks, std::abs(emp.total_mass() - flim(r_tail)));
  if (radii.empty()) ks = std::max(ks, 1.0);  // empty measure vs a probability limit
  return ks;
}

std::vector<double> weyl_sums(const EmpiricalMeasure& emp, std::size_t k_max) {
  if (k_max < 1) throw std::invalid_argument("weyl_sums: k_max must be >= 1");
  std::vector<double> out(k_max, 0.0);
  const double w = emp.weight();
  std::vector<Complex> unit(emp.atoms.size());
  for (std::size_t i = 0; i < emp.atoms.size(); ++i) {
    const double m = std::abs(emp.atoms[i]);
    unit[i] = m > 0.0 ? emp.atoms[i] / m : Complex{1.0, 0.0};
  }
  std::vector<Complex> cur(unit);
  for (std::size_t k = 1; k <= k_max; ++k) {
    Complex s{0.0, 0.0};
    for (const auto& u : cur) s += u;
    out[k - 1] = std::abs(s) * w;
    if (k < k_max)
      for (std::size_t i = 0; i < cur.size(); ++i) cur[i] *= unit[i];
  }
  return out;
}

double annulus_mass(const EmpiricalMeasure& emp, double r_lo, double r_hi) {
  if (!(r_lo >= 0.0) || !(r_lo < r_hi))
    throw std::invalid_argument("annulus_mass: need 0 <= r_lo < r_hi");
  std::size_t count = 0;
  for (const auto& a : emp.atoms) {
    const double r = std::abs(a);
    if (r > r_lo && r < r_hi) ++count;
  }
  return static_cast<double>(count) * emp.weight();
}

PotentialError potential_l1_error(const PolynomialSample& p, const LimitPotential& V,
                                  const AnnulusGrid& grid) {
  const double dr = (grid.r_hi - grid.r_lo) / static_cast<double>(grid.n_r);
  const double dth = 2.0 * std::numbers::pi / static_cast<double>(grid.n_theta);
  const double inv_n = 1.0 / static_cast<double>(p.n);

  double total_w = 0.0, acc = 0.0, clip = 0.0;
  for (std::size_t ir = 0; ir < grid.n_r; ++ir) {
    const double r = grid.r_lo + (static_cast<double>(ir) + 0.5) * dr;
    const double cell_w = r * dr * dth;
    for (std::size_t it = 0; it < grid.n_theta; ++it) {
      const double th = (static_cast<double>(it) + 0.5) * dth;
      const Complex z = std::polar(r, th);
      double v = inv_n * log_abs_eval(p, z);
      if (v == kNegInf) {
        v = kLogClip;
        clip += cell_w * (-kLogClip);
      }
      acc += cell_w * std::abs(v - V.value(z));
      total_w += cell_w;
    }
  }
  return {acc / total_w, clip / total_w};
}

PotentialError potential_l1_error_2(const PolynomialSample2& p, const CompactSetModel& torus,
                                    const TorusShellGrid& grid) {
  const double dr = (grid.r_hi - grid.r_lo) / static_cast<double>(grid.n_r);
  const double dth = 2.0 * std::numbers::pi / static_cast<double>(grid.n_theta);
  const double inv_n = 1.0 / static_cast<double>(p.n);

  double total_w = 0.0, acc = 0.0, clip = 0.0;
  for (std::size_t ir1 = 0; ir1 < grid.n_r; ++ir1) {
    const double r1 = grid.r_lo + (static_cast<double>(ir1) + 0.5) * dr;
    for (std::size_t it1 = 0; it1 < grid.n_theta; ++it1) {
      const Complex z1 = std::polar(r1, (static_cast<double>(it1) + 0.5) * dth);
      for (std::size_t ir2 = 0; ir2 < grid.n_r; ++ir2) {
        const double r2 = grid.r_lo + (static_cast<double>(ir2) + 0.5) * dr;
        const double cell_w = r1 * r2 * dr * dr * dth * dth;
        for (std::size_t it2 = 0; it2 < grid.n_theta; ++it2) {
          const Complex z2 = std::polar(r2, (static_cast<double>(it2) + 0.5) * dth);
          double v = inv_n * log_abs_eval_2(p, z1, z2);
          if (v == kNegInf) {
            v = kLogClip;
            clip += cell_w * (-kLogClip);
          }
          acc += cell_w * std::abs(v - green_value_2(torus, z1, z2));
          total_w += cell_w;
        }
      }
    }
  }
  return {acc / total_w, clip / total_w};
}

double concentration_estimate(std::span<const Complex> samples, double r) {
  if (samples.empty()) throw std::invalid_argument("concentration_estimate: empty samples");
  if (!(r > 0.0)) throw std::invalid_argument("concentration_estimate: r must be positive");

  // Collapse duplicates, then hash the distinct values onto a grid of cell
  // size r so each center only inspects its 3x3 neighborhood.
  std::map<std::pair<double, double>, std::size_t> dedup;
  for (const auto& s : samples) ++dedup[{s.real(), s.imag()}];
  struct Pt {
    Complex z;
    std::size_t count;
  };
  std::vector<Pt> pts;
  pts.reserve(dedup.size());
  for (const auto& [key, cnt] : dedup) pts.push_back({Complex(key.first, key.second), cnt});

  std::map<std::pair<long long, long long>, std::vector<std::size_t>> cells;
  auto cell_of = [r](Complex z) {
    return std::make_pair(static_cast<long long>(std::floor(z.real() / r)),
                          static_cast<long long>(std::floor(z.imag() / r)));
  };
  for (std::size_t i = 0; i < pts.size(); ++i) cells[cell_of(pts[i].z)].push_back(i);

  std::size_t best = 0;
  for (const auto& p : pts) {
    const auto c = cell_of(p.z);
    std::size_t inside = 0;
    for (long long dx = -1; dx <= 1; ++dx) {
      for (long long dy = -1; dy <= 1; ++dy) {
        const auto it = cells.find({c.first + dx, c.second + dy});
        if (it == cells.end()) continue;
        for (std::size_t idx : it->second) {
          if (std::abs(pts[idx].z - p.z) < r) inside += pts[idx].count;
        }
      }
    }
    best = std::max(best, inside);
  }
  return static_cast<double>(best) / static_cast<double>(samples.size());
}

KrBound kr_bound_check(std::span<const double> per_term_q, double sum_q, double C) {
  double denom = 0.0;
  for (double q : per_term_q) {
    if (!(q > 0.0) || q > 1.0)
      throw std::invalid_argument("kr_bound_check: per-term Q values must lie in (0, 1]");
    denom += 1.0 - q;
  }
  if (denom == 0.0)
    throw DegenerateTerms("kr_bound_check: all per-term concentrations equal 1");
  KrBound b;
  b.bound = C / std::sqrt(denom);
  b.satisfied = sum_q <= b.bound;
  return b;
}

std::size_t covering_number(std::span<const Complex> points, double radius) {
  if (points.empty()) throw std::invalid_argument("covering_number: empty point set");
  if (!(radius > 0.0)) throw std::invalid_argument("covering_number: radius must be positive");

  std::vector<bool> covered(points.size(), false);
  std::size_t remaining = points.size();
  std::size_t balls = 0;
  while (remaining > 0) {
    std::size_t best_idx = points.size();
    std::size_t best_gain = 0;
    for (std::size_t i = 0; i < points.size(); ++i) {
      if (covered[i]) continue;
      std::size_t gain = 0;
      for (std::size_t j = 0; j < points.size(); ++j) {
        if (!covered[j] && std::abs(points[j] - points[i]) <= radius) ++gain;
      }
      if (gain > best_gain) {
        best_gain = gain;
        best_idx = i;
      }
    }
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (!covered[j] && std::abs(points[j] - points[best_idx]) <= radius) {
        covered[j] = true;
        --remaining;
      }
    }
    ++balls;
  }
  return balls;
}

std::vector<Complex> normalized_coefficient_points(const PolynomialSample& p, Complex z) {
  const double r = std::abs(z);
  const double logr = r > 0.0 ? std::log(r) : kNegInf;
  const std::size_t cnt = p.coeffs.size();

  double m = kNegInf;
  for (std::size_t k = 0; k < cnt; ++k) {
    if (p.coeffs[k].is_zero()) continue;
    const double lt = (k == 0) ? p.coeffs[k].log_abs
                               : (r == 0.0 ? kNegInf : p.coeffs[k].log_abs + k * logr);
    m = std::max(m, lt);
  }
  if (m == kNegInf)
    throw std::invalid_argument("normalized_coefficient_points: all terms vanish at z");

  std::vector<Complex> terms(cnt, Complex{0.0, 0.0});
  Complex zp{1.0, 0.0};
  const Complex zphase = r > 0.0 ? z / r : Complex{1.0, 0.0};
  double norm_sq = 0.0;
  for (std::size_t k = 0; k < cnt; ++k) {
    if (!p.coeffs[k].is_zero()) {
      const double lt = (k == 0) ? p.coeffs[k].log_abs
                                 : (r == 0.0 ? kNegInf : p.coeffs[k].log_abs + k * logr);
      if (lt != kNegInf && lt - m > -745.0) {
        terms[k] = std::exp(lt - m) * p.coeffs[k].phase * zp;
        norm_sq += std::norm(terms[k]);
      }
    }
    zp *= zphase;
    if ((k + 1) % 512 == 0) zp /= std::abs(zp);
  }
  const double norm = std::sqrt(norm_sq);
  for (auto& t : terms) t /= norm;
  return terms;
}

BlTestGrid::BlTestGrid(const LimitPotential& limit) {
  constexpr int kSide = 21;
  constexpr double kExtent = 2.5;
  for (int iy = 0; iy < kSide; ++iy) {
    for (int ix = 0; ix < kSide; ++ix) {
      const double x = -kExtent + 2.0 * kExtent * ix / (kSide - 1);
      const double y = -kExtent + 2.0 * kExtent * iy / (kSide - 1);
      centers_.emplace_back(x, y);
    }
  }
  // Limit-side integrals of the hat functions against the radial measure,
  // via F(r) increments and an angular quadrature.
  constexpr std::size_t kRadial = 400;
  constexpr std::size_t kAngular = 256;
  const double r_max = 6.0;
  std::vector<double> f_vals(kRadial + 1);
  for (std::size_t i = 0; i <= kRadial; ++i) {
    const double r = r_max * static_cast<double>(i) / kRadial;
    f_vals[i] = r == 0.0 ? 0.0 : limit.radial_cdf(r);
  }
  limit_integrals_.assign(centers_.size(), 0.0);
  for (std::size_t i = 0; i < kRadial; ++i) {
    const double mass = f_vals[i + 1] - f_vals[i];
    if (mass <= 0.0) continue;
    const double r = r_max * (static_cast<double>(i) + 0.5) / kRadial;
    for (std::size_t a = 0; a < kAngular; ++a) {
      const Complex z = std::polar(r, 2.0 * std::numbers::pi * (a + 0.5) / kAngular);
      for (std::size_t c = 0; c < centers_.size(); ++c) {
        const double phi = std::max(0.0, 1.0 - std::abs(z - centers_[c]));
        if (phi > 0.0) limit_integrals_[c] += mass * phi / static_cast<double>(kAngular);
      }
    }
  }
}

double BlTestGrid::estimate(const EmpiricalMeasure& emp) const {
  double best = 0.0;
  const double w = emp.weight();
  for (std::size_t c = 0; c < centers_.size(); ++c) {
    double acc = 0.0;
    for (const auto& a : emp.atoms) {
      const double phi = std::max(0.0, 1.0 - std::abs(a - centers_[c]));
      acc += w * phi;
    }
    best = std::max(best, std::abs(acc - limit_integrals_[c]));
  }
  return best;
}

}  // namespace eqdist
