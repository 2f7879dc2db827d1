// Copyright (c) 2026 The eqdist authors.
// SPDX-License-Identifier: Apache-2.0

#include "eqdist/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "eqdist/errors.hpp"

namespace eqdist {

namespace {

// Beyond these log radii, roots are not representable as doubles.
constexpr double kLogRadiusFloor = -700.0;
constexpr double kLogRadiusCeil = 700.0;
// Maximum log spread a single rescaled block may cover.
constexpr double kBlockSpan = 600.0;
// Coefficients deeper than this below a block's hull peak cannot influence
// the block's roots at working precision.
constexpr double kDepthCutoff = 745.0;

struct HullVertex {
  int k;
  double log_abs;
};

// Upper convex hull of (k, log|c_k|) over nonzero coefficients, k ascending.
std::vector<HullVertex> upper_hull(const std::vector<LogComplex>& coeffs) {
  std::vector<HullVertex> hull;
  for (int k = 0; k < static_cast<int>(coeffs.size()); ++k) {
    if (coeffs[static_cast<std::size_t>(k)].is_zero()) continue;
    const HullVertex p{k, coeffs[static_cast<std::size_t>(k)].log_abs};
    while (hull.size() >= 2) {
      const auto& a = hull[hull.size() - 2];
      const auto& b = hull[hull.size() - 1];
      const double cross = (b.log_abs - a.log_abs) * (p.k - a.k) -
                           (p.log_abs - a.log_abs) * (b.k - a.k);
      if (cross <= 0.0)
        hull.pop_back();
      else
        break;
    }
    hull.push_back(p);
  }
  return hull;
}

// Newton correction p(z)/p'(z) for double coefficients (max modulus ~ 1).
// Direct Horner for |z| <= 1; the reversed polynomial at w = 1/z otherwise.
Complex newton_ratio(const std::vector<Complex>& q, Complex z) {
  const int m = static_cast<int>(q.size()) - 1;
  if (std::abs(z) <= 1.0) {
    Complex p{0.0, 0.0}, dp{0.0, 0.0};
    for (int k = m; k >= 0; --k) {
      dp = dp * z + p;
      p = p * z + q[static_cast<std::size_t>(k)];
    }
    return p / dp;
  }
  const Complex w = 1.0 / z;
  Complex qr{0.0, 0.0}, dqr{0.0, 0.0};
  for (int k = 0; k <= m; ++k) {  // qr(w) = sum_j q_{m-j} w^j
    dqr = dqr * w + qr;
    qr = qr * w + q[static_cast<std::size_t>(k)];
  }
  return z * qr / (static_cast<double>(m) * qr - w * dqr);
}

// Initial guesses on circles whose radii come from the block's own Newton
// polygon; angular offsets break symmetric stalemates.
std::vector<Complex> newton_polygon_init(const std::vector<Complex>& q) {
  const int m = static_cast<int>(q.size()) - 1;
  std::vector<std::pair<double, double>> pts;
  for (int k = 0; k <= m; ++k) {
    const double a = std::abs(q[static_cast<std::size_t>(k)]);
    if (a > 0.0) pts.emplace_back(static_cast<double>(k), std::log(a));
  }
  std::vector<std::pair<double, double>> hull;
  for (const auto& p : pts) {
    while (hull.size() >= 2) {
      const auto& a = hull[hull.size() - 2];
      const auto& b = hull[hull.size() - 1];
      if ((b.second - a.second) * (p.first - a.first) -
              (p.second - a.second) * (b.first - a.first) <=
          0.0)
        hull.pop_back();
      else
        break;
    }
    hull.push_back(p);
  }

  std::vector<Complex> z;
  z.reserve(static_cast<std::size_t>(m));
  const double golden = 2.0 * std::numbers::pi * 0.3819660112501051;
  for (std::size_t e = 0; e + 1 < hull.size(); ++e) {
    const auto& [k1, l1] = hull[e];
    const auto& [k2, l2] = hull[e + 1];
    const int cnt = static_cast<int>(k2 - k1);
    const double slope = (l2 - l1) / (k2 - k1);
    const double r = std::exp(std::clamp(-slope, kLogRadiusFloor, kLogRadiusCeil));
    for (int i = 0; i < cnt; ++i) {
      const double th =
          2.0 * std::numbers::pi * (i + 0.5) / cnt + golden * static_cast<double>(e + 1);
      z.push_back(std::polar(r, th));
    }
  }
  while (static_cast<int>(z.size()) < m)
    z.push_back(std::polar(1.0, golden * static_cast<double>(z.size() + 1)));
  z.resize(static_cast<std::size_t>(m));
  return z;
}

// Ehrlich-Aberth with Gauss-Seidel updates and two Newton polish steps.
// Convergence is judged per sweep, never frozen per root: an Aberth step
// can be transiently small away from a root when the repulsion term is
// large, so a sweep only terminates the iteration once every correction in
// it stayed below tolerance. Returns the sweep count.
int ehrlich_aberth(const std::vector<Complex>& q, std::vector<Complex>& z,
                   const RootFindOptions& opts) {
  const int m = static_cast<int>(z.size());
  int sweeps = 0;
  for (; sweeps < opts.max_iter; ++sweeps) {
    bool all_small = true;
    for (int i = 0; i < m; ++i) {
      Complex N = newton_ratio(q, z[static_cast<std::size_t>(i)]);
      if (!std::isfinite(N.real()) || !std::isfinite(N.imag())) {
        z[static_cast<std::size_t>(i)] +=
            Complex(1e-6, 1e-6) * (1.0 + std::abs(z[static_cast<std::size_t>(i)]));
        all_small = false;
        continue;
      }
      if (N == Complex{0.0, 0.0}) continue;  // exactly on a root
      Complex S{0.0, 0.0};
      for (int j = 0; j < m; ++j) {
        if (j == i) continue;
        const Complex d = z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(j)];
        if (d != Complex{0.0, 0.0}) S += 1.0 / d;
      }
      Complex denom = 1.0 - N * S;
      Complex step = (denom == Complex{0.0, 0.0} || !std::isfinite(denom.real()) ||
                      !std::isfinite(denom.imag()))
                         ? N
                         : N / denom;
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) step = N;
      z[static_cast<std::size_t>(i)] -= step;
      const double zs = std::abs(z[static_cast<std::size_t>(i)]);
      if (std::abs(step) > opts.tol * std::max(zs, 1e-300)) all_small = false;
    }
    if (all_small) break;
  }
  for (int i = 0; i < m; ++i) {
    Complex zi = z[static_cast<std::size_t>(i)];
    for (int it = 0; it < 2; ++it) {
      const Complex N = newton_ratio(q, zi);
      if (!std::isfinite(N.real()) || !std::isfinite(N.imag())) break;
      zi -= N;
    }
    if (std::isfinite(zi.real()) && std::isfinite(zi.imag())) z[static_cast<std::size_t>(i)] = zi;
  }
  return sweeps;
}

}  // namespace

double RootSet::max_residual() const {
  double m = 0.0;
  for (double r : residuals) m = std::max(m, r);
  return m;
}

RootSet find_roots(const PolynomialSample& p, const RootFindOptions& opts) {
  const std::vector<LogComplex>& coeffs = p.coeffs;
  const int n = p.n;

  const std::vector<HullVertex> hull = upper_hull(coeffs);
  if (hull.empty()) throw IdenticallyZero("find_roots: all coefficients are zero");

  RootSet rs;
  const int trail = hull.front().k;
  const int lead = hull.back().k;
  rs.dropped_leading = n - lead;  // exactly-zero leading coefficients

  // Exact zeros from trailing zero coefficients.
  for (int k = 0; k < trail; ++k) {
    rs.roots.emplace_back(0.0, 0.0);
    rs.residuals.push_back(0.0);
  }

  // Hull edges in ascending log radius; classify against the double range.
  struct Edge {
    int k1, k2;
    double l1, l2;
    double log_rho;
  };
  std::vector<Edge> edges;
  for (std::size_t e = 0; e + 1 < hull.size(); ++e) {
    const double log_rho =
        (hull[e].log_abs - hull[e + 1].log_abs) / static_cast<double>(hull[e + 1].k - hull[e].k);
    edges.push_back({hull[e].k, hull[e + 1].k, hull[e].log_abs, hull[e + 1].log_abs, log_rho});
  }

  std::vector<Edge> solvable;
  for (const auto& e : edges) {
    if (e.log_rho < kLogRadiusFloor) {
      // roots below the double radius floor: reported at the origin
      for (int k = e.k1; k < e.k2; ++k) {
        rs.roots.emplace_back(0.0, 0.0);
        rs.residuals.push_back(0.0);
      }
    } else if (e.log_rho > kLogRadiusCeil) {
      rs.dropped_leading += e.k2 - e.k1;  // roots beyond the double radius ceiling
    } else {
      solvable.push_back(e);
    }
  }
  rs.realized_degree = n - rs.dropped_leading;

  // Group consecutive solvable edges into blocks. A block is valid when
  // some rescale z = e^s w keeps every hull vertex coefficient within
  // kBlockSpan of the peak (no vertex underflows). The spread is convex in
  // s, so the optimal rescale comes from a ternary search over the block's
  // radius range.
  auto spread_at = [&](std::size_t a, std::size_t b, double s) {
    double mx = kNegInf, mn = -kNegInf;
    for (std::size_t e = a; e <= b; ++e) {
      const double la = solvable[e].l1 + solvable[e].k1 * s;
      const double lb = solvable[e].l2 + solvable[e].k2 * s;
      mx = std::max({mx, la, lb});
      mn = std::min({mn, la, lb});
    }
    return mx - mn;
  };
  struct Rescale {
    double spread;
    double s;
  };
  auto best_rescale = [&](std::size_t a, std::size_t b) {
    double lo = solvable[a].log_rho;
    double hi = solvable[b].log_rho;
    for (int it = 0; it < 200 && hi - lo > 1e-9; ++it) {
      const double s1 = lo + (hi - lo) / 3.0;
      const double s2 = hi - (hi - lo) / 3.0;
      if (spread_at(a, b, s1) < spread_at(a, b, s2))
        hi = s2;
      else
        lo = s1;
    }
    const double s = 0.5 * (lo + hi);
    return Rescale{spread_at(a, b, s), s};
  };

  int total_sweeps = 0;
  std::size_t i = 0;
  while (i < solvable.size()) {
    std::size_t j = i;
    while (j + 1 < solvable.size() && best_rescale(i, j + 1).spread <= kBlockSpan) ++j;
    const int ka = solvable[i].k1;
    const int kb = solvable[j].k2;
    const double s_center = best_rescale(i, j).s;

    // Rescale z = e^{s_center} w; block coefficients relative to the peak.
    double peak = kNegInf;
    for (int k = ka; k <= kb; ++k) {
      if (coeffs[static_cast<std::size_t>(k)].is_zero()) continue;
      peak = std::max(peak, coeffs[static_cast<std::size_t>(k)].log_abs + k * s_center);
    }
    std::vector<Complex> q(static_cast<std::size_t>(kb - ka) + 1, Complex{0.0, 0.0});
    for (int k = ka; k <= kb; ++k) {
      const auto& c = coeffs[static_cast<std::size_t>(k)];
      if (c.is_zero()) continue;
      const double lt = c.log_abs + k * s_center - peak;
      if (lt > -kDepthCutoff) q[static_cast<std::size_t>(k - ka)] = std::exp(lt) * c.phase;
    }

    std::vector<Complex> w = newton_polygon_init(q);
    total_sweeps = std::max(total_sweeps, ehrlich_aberth(q, w, opts));
    const double scale = std::exp(s_center);
    for (const auto& root : w) rs.roots.push_back(root * scale);
    i = j + 1;
  }

  // Residual certificate against the full polynomial, in log space.
  const std::span<const LogComplex> full(coeffs);
  for (std::size_t r = rs.residuals.size(); r < rs.roots.size(); ++r) {
    const Complex z = rs.roots[r];
    const double num = log_abs_poly(full, z);
    if (num == kNegInf) {
      rs.residuals.push_back(0.0);
      continue;
    }
    const double den = log_abs_sum_poly(full, std::abs(z));
    rs.residuals.push_back(std::exp(num - den));
  }

  if (static_cast<int>(rs.roots.size()) != rs.realized_degree) {
    throw NoConvergence("find_roots: internal accounting mismatch", std::move(rs), total_sweeps,
                        0.0);
  }
  const double worst = rs.max_residual();
  if (worst > opts.residual_tol) {
    throw NoConvergence("find_roots: residual certificate failed (max relative residual " +
                            std::to_string(worst) + ")",
                        std::move(rs), total_sweeps, worst);
  }
  return rs;
}

double mass_per_root(int nominal_n) {
  if (nominal_n < 1) throw std::invalid_argument("mass_per_root: nominal degree must be >= 1");
  return 1.0 / static_cast<double>(nominal_n);
}

}  // namespace eqdist
