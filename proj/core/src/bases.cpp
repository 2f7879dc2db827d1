// Copyright (c) 2026 The eqdist authors.
// SPDX-License-Identifier: Apache-2.0

#include "eqdist/bases.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Core>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numbers>

#include "eqdist/errors.hpp"
#include "eqdist/rng.hpp"
#include "eqdist/rngdist.hpp"

namespace eqdist {

namespace {

using Eigen::MatrixXcd;
using Eigen::VectorXd;

// H(i,k) = sum_s w_s node_s^i conj(node_s^k), the Gram matrix of the
// monomials under <p,q> = sum w p conj(q).
MatrixXcd monomial_gram(const MeasureSpec& m, int n) {
  const std::size_t cnt = m.nodes.size();
  MatrixXcd V(cnt, n + 1);
  for (std::size_t s = 0; s < cnt; ++s) {
    Complex p{1.0, 0.0};
    for (int k = 0; k <= n; ++k) {
      V(s, k) = p;
      p *= m.nodes[s];
    }
  }
  MatrixXcd H(n + 1, n + 1);
  for (int i = 0; i <= n; ++i) {
    for (int k = 0; k <= n; ++k) {
      Complex acc{0.0, 0.0};
      for (std::size_t s = 0; s < cnt; ++s)
        acc += m.weights[s] * V(s, i) * std::conj(V(s, k));
      H(i, k) = acc;
    }
  }
  return H;
}

// Lower-triangular C with C H C^H = I, via H = L L^H and C = L^-1.
MatrixXcd inverse_cholesky_factor(const MatrixXcd& H) {
  Eigen::LLT<MatrixXcd> llt(H);
  if (llt.info() != Eigen::Success)
    throw IllConditionedMeasure("monomial Gram matrix is not positive definite");
  const MatrixXcd L = llt.matrixL();
  return L.triangularView<Eigen::Lower>().solve(
      MatrixXcd::Identity(H.rows(), H.cols()));
}

std::vector<Complex> pack_lower(const MatrixXcd& C, int n) {
  std::vector<Complex> packed;
  packed.reserve(static_cast<std::size_t>(n + 1) * (n + 2) / 2);
  for (int j = 0; j <= n; ++j)
    for (int i = 0; i <= j; ++i) packed.push_back(C(j, i));
  return packed;
}

OrthoBasis chebyshev_closed_form(int n) {
  // q_0 = 1, q_j = sqrt(2) T_j for j >= 1 under the arcsine measure.
  std::vector<std::vector<double>> T(n + 1);
  T[0] = {1.0};
  if (n >= 1) T[1] = {0.0, 1.0};
  for (int j = 2; j <= n; ++j) {
    T[j].assign(j + 1, 0.0);
    for (int i = 0; i < j; ++i) T[j][i + 1] += 2.0 * T[j - 1][i];
    for (std::size_t i = 0; i < T[j - 2].size(); ++i) T[j][i] -= T[j - 2][i];
  }
  std::vector<Complex> packed;
  packed.reserve(static_cast<std::size_t>(n + 1) * (n + 2) / 2);
  for (int j = 0; j <= n; ++j) {
    const double scale = (j == 0) ? 1.0 : std::numbers::sqrt2;
    for (int i = 0; i <= j; ++i) packed.emplace_back(scale * T[j][i], 0.0);
  }
  return OrthoBasis(n, std::move(packed));
}

OrthoBasis circle_closed_form(double R, int n) {
  std::vector<Complex> packed;
  packed.reserve(static_cast<std::size_t>(n + 1) * (n + 2) / 2);
  for (int j = 0; j <= n; ++j) {
    for (int i = 0; i < j; ++i) packed.emplace_back(0.0, 0.0);
    packed.emplace_back(std::exp(-j * std::log(R)), 0.0);
  }
  return OrthoBasis(n, std::move(packed));
}

}  // namespace

MeasureSpec MeasureSpec::circle_uniform(double R, std::size_t node_count) {
  if (!(R > 0.0)) throw std::invalid_argument("circle_uniform: R must be positive");
  if (node_count < 2) throw std::invalid_argument("circle_uniform: need at least 2 nodes");
  MeasureSpec m;
  m.nodes.resize(node_count);
  m.weights.assign(node_count, 1.0 / static_cast<double>(node_count));
  for (std::size_t k = 0; k < node_count; ++k) {
    const double th = 2.0 * std::numbers::pi * static_cast<double>(k) / node_count;
    m.nodes[k] = R * std::polar(1.0, th);
  }
  m.label = "circle:" + std::to_string(R);
  m.closed_form = ClosedForm::CircleUniform;
  m.circle_radius = R;
  return m;
}

MeasureSpec MeasureSpec::interval_arcsine(std::size_t node_count) {
  if (node_count < 2) throw std::invalid_argument("interval_arcsine: need at least 2 nodes");
  MeasureSpec m;
  m.nodes.resize(node_count);
  m.weights.assign(node_count, 1.0 / static_cast<double>(node_count));
  for (std::size_t k = 0; k < node_count; ++k) {
    const double th = (2.0 * k + 1.0) * std::numbers::pi / (2.0 * node_count);
    m.nodes[k] = Complex(std::cos(th), 0.0);
  }
  m.label = "arcsine";
  m.closed_form = ClosedForm::IntervalArcsine;
  return m;
}

MeasureSpec MeasureSpec::from_nodes(std::vector<Complex> nodes, std::vector<double> weights,
                                    std::string label) {
  if (nodes.size() != weights.size())
    throw std::invalid_argument("MeasureSpec: nodes/weights size mismatch");
  for (double w : weights)
    if (!(w > 0.0)) throw std::invalid_argument("MeasureSpec: weights must be positive");
  MeasureSpec m;
  m.nodes = std::move(nodes);
  m.weights = std::move(weights);
  m.label = std::move(label);
  return m;
}

OrthoBasis::OrthoBasis(int degree, std::vector<Complex> packed_rows)
    : degree_(degree), packed_(std::move(packed_rows)) {
  const std::size_t expect = static_cast<std::size_t>(degree + 1) * (degree + 2) / 2;
  if (degree < 0 || packed_.size() != expect)
    throw std::invalid_argument("OrthoBasis: packed size mismatch");
}

std::span<const Complex> OrthoBasis::row(int j) const {
  const std::size_t off = static_cast<std::size_t>(j) * (j + 1) / 2;
  return {packed_.data() + off, static_cast<std::size_t>(j + 1)};
}

Complex OrthoBasis::coeff(int j, int i) const {
  if (i > j) return {0.0, 0.0};
  return row(j)[static_cast<std::size_t>(i)];
}

Complex OrthoBasis::evaluate(int j, Complex z) const {
  const auto r = row(j);
  Complex acc{0.0, 0.0};
  for (std::size_t i = r.size(); i-- > 0;) acc = acc * z + r[i];
  return acc;
}

std::vector<double> OrthoBasis::log_abs_values(Complex z) const {
  std::vector<double> out(static_cast<std::size_t>(degree_) + 1);
  for (int j = 0; j <= degree_; ++j) out[static_cast<std::size_t>(j)] = log_abs_poly(row(j), z);
  return out;
}

OrthoBasis gram_schmidt_basis(const MeasureSpec& measure, int n) {
  if (n < 0) throw std::invalid_argument("gram_schmidt_basis: n must be >= 0");
  if (measure.closed_form == MeasureSpec::ClosedForm::CircleUniform)
    return circle_closed_form(measure.circle_radius, n);
  if (measure.closed_form == MeasureSpec::ClosedForm::IntervalArcsine)
    return chebyshev_closed_form(n);

  if (measure.nodes.size() < static_cast<std::size_t>(n) + 1)
    throw IllConditionedMeasure("fewer nodes than coefficients: Gram matrix is rank deficient");

  MatrixXcd H = monomial_gram(measure, n);

  // Jacobi equilibration: the diagonal spans R^{2j} across degrees, which
  // would dominate the eigenvalue ratio without saying anything about rank.
  Eigen::VectorXd dscale(n + 1);
  for (int i = 0; i <= n; ++i) {
    const double d = H(i, i).real();
    if (!(d > 0.0))
      throw IllConditionedMeasure("monomial Gram matrix has a non-positive diagonal entry");
    dscale(i) = std::sqrt(d);
  }
  for (int i = 0; i <= n; ++i)
    for (int k = 0; k <= n; ++k) H(i, k) /= dscale(i) * dscale(k);

  Eigen::SelfAdjointEigenSolver<MatrixXcd> es(H, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success)
    throw IllConditionedMeasure("eigenvalue estimation failed for the monomial Gram matrix");
  const double lo = es.eigenvalues().minCoeff();
  const double hi = es.eigenvalues().maxCoeff();
  if (!(lo > 1e-13 * hi))
    throw IllConditionedMeasure("monomial Gram matrix numerically rank deficient (min/max eig " +
                                std::to_string(lo / hi) + ")");

  MatrixXcd C = inverse_cholesky_factor(H);
  // undo the equilibration: q rows act on unscaled monomials
  for (int j = 0; j <= n; ++j)
    for (int i = 0; i <= j; ++i) C(j, i) /= dscale(i);

  // One reorthogonalization pass: Cholesky-correct against the Gram of the
  // computed basis evaluated on the nodes.
  {
    const std::size_t cnt = measure.nodes.size();
    MatrixXcd P(cnt, n + 1);  // P(s, j) = q_j(node_s)
    for (std::size_t s = 0; s < cnt; ++s) {
      Complex p{1.0, 0.0};
      std::vector<Complex> pow(static_cast<std::size_t>(n) + 1);
      for (int k = 0; k <= n; ++k) {
        pow[static_cast<std::size_t>(k)] = p;
        p *= measure.nodes[s];
      }
      for (int j = 0; j <= n; ++j) {
        Complex acc{0.0, 0.0};
        for (int i = 0; i <= j; ++i) acc += C(j, i) * pow[static_cast<std::size_t>(i)];
        P(s, j) = acc;
      }
    }
    MatrixXcd Hq(n + 1, n + 1);
    for (int j = 0; j <= n; ++j) {
      for (int l = 0; l <= n; ++l) {
        Complex acc{0.0, 0.0};
        for (std::size_t s = 0; s < cnt; ++s)
          acc += measure.weights[s] * P(s, j) * std::conj(P(s, l));
        Hq(j, l) = acc;
      }
    }
    C = (inverse_cholesky_factor(Hq) * C).eval();
  }

  // Normalize the diagonal phase to keep leading coefficients real positive.
  for (int j = 0; j <= n; ++j) {
    const Complex d = C(j, j);
    const double m = std::abs(d);
    if (m > 0.0 && std::abs(d.imag()) > 0.0) C.row(j) *= std::conj(d) / m;
  }

  return OrthoBasis(n, pack_lower(C, n));
}

CoefficientArray CoefficientArray::kac(int n) {
  return from_log(std::vector<double>(static_cast<std::size_t>(n) + 1, 0.0),
                  Provenance::Explicit, "kac");
}

CoefficientArray CoefficientArray::from_log(std::vector<double> log_f, Provenance prov,
                                            std::string label) {
  if (log_f.empty()) throw std::invalid_argument("CoefficientArray: empty");
  bool any = false;
  for (double lf : log_f)
    if (lf != kNegInf) any = true;
  if (!any) throw std::invalid_argument("CoefficientArray: all entries zero");
  CoefficientArray a;
  a.n_ = static_cast<int>(log_f.size()) - 1;
  a.log_f_ = std::move(log_f);
  a.provenance_ = prov;
  a.label_ = std::move(label);
  return a;
}

CoefficientArray CoefficientArray::from_values(std::span<const double> f, std::string label) {
  std::vector<double> lf(f.size());
  for (std::size_t k = 0; k < f.size(); ++k) {
    if (f[k] < 0.0) throw std::invalid_argument("CoefficientArray: negative entry");
    lf[k] = f[k] == 0.0 ? kNegInf : std::log(f[k]);
  }
  return from_log(std::move(lf), Provenance::Explicit, std::move(label));
}

CoefficientArray weighted_radial_coefficients(std::span<const std::pair<double, double>> tau,
                                              const std::function<double(double)>& S, int n) {
  if (tau.empty()) throw std::invalid_argument("weighted_radial_coefficients: empty measure");
  for (const auto& [r, w] : tau)
    if (!(r > 0.0) || !(w > 0.0))
      throw std::invalid_argument("weighted_radial_coefficients: radii and weights must be > 0");

  std::vector<double> log_f(static_cast<std::size_t>(n) + 1);
  std::vector<double> terms(tau.size());
  for (int j = 0; j <= n; ++j) {
    for (std::size_t i = 0; i < tau.size(); ++i) {
      const auto& [r, w] = tau[i];
      terms[i] = std::log(w) + 2.0 * j * std::log(r) - 2.0 * n * S(r);
    }
    log_f[static_cast<std::size_t>(j)] = -0.5 * log_sum_exp(terms);
  }
  return CoefficientArray::from_log(std::move(log_f),
                                    CoefficientArray::Provenance::WeightedRadial, "weighted");
}

CoefficientArray profile_array(const Profile& p, int n) {
  if (n < 1) throw std::invalid_argument("profile_array: n must be >= 1");
  std::vector<double> log_f(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k)
    log_f[static_cast<std::size_t>(k)] =
        n * p.log_value(static_cast<double>(k) / static_cast<double>(n));
  return CoefficientArray::from_log(std::move(log_f), CoefficientArray::Provenance::Profile,
                                    "profile:" + p.label());
}

double potential_from_coefficients(const CoefficientArray& arr, Complex z) {
  const int n = arr.degree();
  const double r = std::abs(z);
  if (r == 0.0) return arr.log_f(0) / static_cast<double>(n);
  const double logr = std::log(r);
  std::vector<double> terms(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k)
    terms[static_cast<std::size_t>(k)] = 2.0 * (arr.log_f(k) + k * logr);
  return log_sum_exp(terms) / (2.0 * n);
}

double potential_from_coefficients(const OrthoBasis& basis, Complex z) {
  const int n = basis.degree();
  std::vector<double> lv = basis.log_abs_values(z);
  for (double& v : lv) v *= 2.0;
  return log_sum_exp(lv) / (2.0 * n);
}

std::size_t condition_ii_count(const CoefficientArray& arr, Complex z, double eps, double V) {
  if (!(eps > 0.0)) throw std::invalid_argument("condition_ii_count: eps must be positive");
  const int n = arr.degree();
  const double r = std::abs(z);
  const double threshold = n * (V - eps);
  std::size_t count = 0;
  for (int k = 0; k <= n; ++k) {
    const double term = (r == 0.0) ? (k == 0 ? arr.log_f(0) : kNegInf)
                                   : arr.log_f(k) + k * std::log(r);
    if (term >= threshold) ++count;
  }
  return count;
}

double sup_over_l2_ratio(const MeasureSpec& measure, std::span<const Complex> coeffs) {
  double sup = 0.0;
  double l2sq = 0.0;
  for (std::size_t s = 0; s < measure.nodes.size(); ++s) {
    Complex acc{0.0, 0.0};
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * measure.nodes[s] + coeffs[i];
    const double m = std::abs(acc);
    sup = std::max(sup, m);
    l2sq += measure.weights[s] * m * m;
  }
  if (l2sq == 0.0) return 0.0;
  return sup / std::sqrt(l2sq);
}

double bernstein_markov_ratio(const MeasureSpec& measure, int n, int trials, std::uint64_t seed) {
  if (measure.closed_form == MeasureSpec::ClosedForm::None &&
      measure.nodes.size() < static_cast<std::size_t>(n) + 1)
    throw IllConditionedMeasure("bernstein_markov_ratio: too few nodes for degree");
  RngStream stream(seed);
  const auto dist = DistributionSpec::complex_gaussian();
  double best = 0.0;
  for (int t = 0; t < trials; ++t) {
    auto xi = sample_log(dist, stream.substream(static_cast<std::uint64_t>(t)),
                         static_cast<std::size_t>(n) + 1);
    std::vector<Complex> coeffs(xi.size());
    for (std::size_t i = 0; i < xi.size(); ++i) coeffs[i] = xi[i].to_complex();
    best = std::max(best, sup_over_l2_ratio(measure, coeffs));
  }
  return best;
}

}  // namespace eqdist
