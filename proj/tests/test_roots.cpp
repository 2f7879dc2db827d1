// Copyright (c) 2026 The eqdist authors.
// SPDX-License-Identifier: Apache-2.0

#include "eqdist/roots.hpp"

#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>

#include "eqdist/errors.hpp"
#include "support.hpp"

using namespace eqdist;

namespace {

PolynomialSample from_complex_coeffs(std::vector<Complex> coeffs) {
  PolynomialSample p;
  p.n = static_cast<int>(coeffs.size()) - 1;
  p.coeffs.reserve(coeffs.size());
  for (const auto& c : coeffs) p.coeffs.push_back(LogComplex::from(c));
  return p;
}

// Companion-matrix eigenvalue oracle, independent of the Ehrlich-Aberth path.
std::vector<Complex> companion_roots(const std::vector<Complex>& coeffs) {
  int m = static_cast<int>(coeffs.size()) - 1;
  while (m > 0 && coeffs[static_cast<std::size_t>(m)] == Complex{0.0, 0.0}) --m;
  Eigen::MatrixXcd C = Eigen::MatrixXcd::Zero(m, m);
  for (int i = 1; i < m; ++i) C(i, i - 1) = 1.0;
  for (int i = 0; i < m; ++i)
    C(i, m - 1) = -coeffs[static_cast<std::size_t>(i)] / coeffs[static_cast<std::size_t>(m)];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(C, false);
  std::vector<Complex> out;
  for (int i = 0; i < m; ++i) out.push_back(es.eigenvalues()(i));
  return out;
}

}  // namespace

TEST_CASE("roots of unity") {
  for (int n : {8, 64}) {
    std::vector<Complex> coeffs(static_cast<std::size_t>(n) + 1, Complex{0.0, 0.0});
    coeffs[0] = {-1.0, 0.0};
    coeffs[static_cast<std::size_t>(n)] = {1.0, 0.0};
    const auto rs = find_roots(from_complex_coeffs(coeffs));
    REQUIRE(rs.roots.size() == static_cast<std::size_t>(n));
    std::vector<Complex> expect;
    for (int k = 0; k < n; ++k)
      expect.push_back(std::polar(1.0, 2.0 * std::numbers::pi * k / n));
    CHECK(testing::hausdorff(rs.roots, expect) < 1e-10);
    CHECK(rs.max_residual() < 1e-12);
  }
}

TEST_CASE("random gaussian polynomials match the companion oracle, degrees 2..8") {
  const auto dist = DistributionSpec::complex_gaussian();
  for (int deg = 2; deg <= 8; ++deg) {
    for (std::uint64_t trial = 0; trial < 50; ++trial) {
      const auto p = draw_kac(deg, dist, 1000 + static_cast<std::uint64_t>(deg), trial);
      const auto rs = find_roots(p);
      std::vector<Complex> coeffs(p.coeffs.size());
      for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] = p.coeffs[i].to_complex();
      const auto oracle = companion_roots(coeffs);
      REQUIRE(rs.roots.size() == oracle.size());
      CHECK(testing::hausdorff(rs.roots, oracle) < 1e-7);
    }
  }
}

TEST_CASE("fixed gaussian cubic matches the oracle tightly") {
  const auto p = draw_kac(3, DistributionSpec::complex_gaussian(), 77, 0);
  const auto rs = find_roots(p);
  std::vector<Complex> coeffs(4);
  for (std::size_t i = 0; i < 4; ++i) coeffs[i] = p.coeffs[i].to_complex();
  CHECK(testing::hausdorff(rs.roots, companion_roots(coeffs)) < 1e-9);
}

TEST_CASE("trailing zero coefficients become exact zero roots") {
  // z^2 + z^3: realized degree 3, roots {0, 0, -1}
  const auto p =
      from_complex_coeffs({{0.0, 0.0}, {0.0, 0.0}, {1.0, 0.0}, {1.0, 0.0}});
  const auto rs = find_roots(p);
  CHECK(rs.realized_degree == 3);
  CHECK(rs.dropped_leading == 0);
  REQUIRE(rs.roots.size() == 3);
  CHECK(rs.roots[0] == Complex{0.0, 0.0});
  CHECK(rs.roots[1] == Complex{0.0, 0.0});
  CHECK(std::abs(rs.roots[2] - Complex{-1.0, 0.0}) < 1e-12);
}

TEST_CASE("leading zero coefficients are dropped from the realized degree") {
  // 1 + z with two numerically-zero leading slots at nominal degree 3
  const auto p =
      from_complex_coeffs({{1.0, 0.0}, {1.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}});
  const auto rs = find_roots(p);
  CHECK(rs.realized_degree == 1);
  CHECK(rs.dropped_leading == 2);
  REQUIRE(rs.roots.size() == 1);
  CHECK(std::abs(rs.roots[0] - Complex{-1.0, 0.0}) < 1e-12);
}

TEST_CASE("quadratic with huge dynamic range") {
  // roots at -e^{300} and about -e^{-300}: coefficients {1, e^300+..., e^300 * e^-300}
  // use (z + e^300)(z + e^-300) = z^2 + (e^300 + e^-300) z + 1
  PolynomialSample p;
  p.n = 2;
  p.coeffs = {LogComplex::from({1.0, 0.0}), LogComplex{300.0, {1.0, 0.0}},
              LogComplex::from({1.0, 0.0})};
  const auto rs = find_roots(p);
  REQUIRE(rs.roots.size() == 2);
  double big = 0.0, small = 1e300;
  for (const auto& r : rs.roots) {
    big = std::max(big, std::abs(r));
    small = std::min(small, std::abs(r));
  }
  CHECK(std::log(big) == doctest::Approx(300.0).epsilon(1e-9));
  CHECK(std::log(small) == doctest::Approx(-300.0).epsilon(1e-9));
  CHECK(rs.max_residual() < 1e-10);
}

TEST_CASE("scale invariance of the root multiset") {
  const auto p = draw_kac(24, DistributionSpec::complex_gaussian(), 13, 1);
  auto scaled = p;
  for (auto& c : scaled.coeffs) c.log_abs += 600.0;  // x e^600
  const auto r1 = find_roots(p);
  const auto r2 = find_roots(scaled);
  REQUIRE(r1.roots.size() == r2.roots.size());
  CHECK(testing::hausdorff(r1.roots, r2.roots) < 1e-10);
}

TEST_CASE("residual certificate holds for heavy-tailed draws") {
  const auto dist = DistributionSpec::log_pareto(2.0);
  for (std::uint64_t trial = 0; trial < 10; ++trial) {
    const auto p = draw_kac(64, dist, 31, trial);
    const auto rs = find_roots(p);
    CHECK(rs.max_residual() <= 1e-8);
    CHECK(rs.roots.size() == static_cast<std::size_t>(rs.realized_degree));
  }
}

TEST_CASE("degree accounting under extreme tails") {
  // LogPareto(0.5) draws routinely have one dominant coefficient; trims must
  // keep realized + dropped == nominal.
  const auto dist = DistributionSpec::log_pareto(0.5);
  for (std::uint64_t trial = 0; trial < 20; ++trial) {
    const auto p = draw_kac(32, dist, 999, trial);
    const auto rs = find_roots(p);
    CHECK(rs.realized_degree + rs.dropped_leading == 32);
    CHECK(rs.roots.size() == static_cast<std::size_t>(rs.realized_degree));
    CHECK(rs.max_residual() <= 1e-8);
  }
}

TEST_CASE("degree 512 roots of unity stay exact") {
  std::vector<Complex> coeffs(513, Complex{0.0, 0.0});
  coeffs[0] = {-1.0, 0.0};
  coeffs[512] = {1.0, 0.0};
  const auto rs = find_roots(from_complex_coeffs(coeffs));
  REQUIRE(rs.roots.size() == 512);
  double worst = 0.0;
  for (const auto& r : rs.roots) worst = std::max(worst, std::abs(std::abs(r) - 1.0));
  CHECK(worst < 1e-10);
  CHECK(rs.max_residual() < 1e-12);
}

TEST_CASE("mass per root") {
  CHECK(mass_per_root(64) == doctest::Approx(1.0 / 64.0));
  CHECK_THROWS_AS(mass_per_root(0), std::invalid_argument);
}
