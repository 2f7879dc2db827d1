// Copyright (c) 2026 The eqdist authors.
// SPDX-License-Identifier: Apache-2.0

#include "eqdist/rngdist.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "eqdist/errors.hpp"
#include "support.hpp"

using namespace eqdist;

TEST_CASE("sampling is deterministic in (spec, seed, count)") {
  const auto spec = DistributionSpec::complex_gaussian();
  const auto a = sample(spec, 42, 16);
  const auto b = sample(spec, 42, 16);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
  const auto c = sample(spec, 43, 16);
  CHECK(a[0] != c[0]);
}

TEST_CASE("substreams are disjoint") {
  RngStream root(7);
  auto s0 = root.substream(0);
  auto s1 = root.substream(1);
  CHECK(s0.state_key() != s1.state_key());
  CHECK(s0.next_u64() != s1.next_u64());
}

TEST_CASE("rademacher support") {
  const auto spec = DistributionSpec::rademacher();
  const auto draws = sample(spec, 1, 3);
  for (const auto& v : draws) {
    CHECK(v.imag() == 0.0);
    CHECK(std::abs(std::abs(v.real()) - 1.0) == 0.0);
  }
}

TEST_CASE("point pairs validation") {
  CHECK_THROWS_AS(DistributionSpec::point_pairs({{1.0, 0.0}}, {1.0}), DegenerateLaw);
  CHECK_THROWS_AS(DistributionSpec::point_pairs({{1.0, 0.0}, {2.0, 0.0}}, {0.6, 0.6}),
                  DegenerateLaw);
  // duplicate support points collapse to one
  CHECK_THROWS_AS(DistributionSpec::point_pairs({{1.0, 0.0}, {1.0, 0.0}}, {0.5, 0.5}),
                  DegenerateLaw);
  CHECK_NOTHROW(DistributionSpec::point_pairs({{1.0, 0.0}, {-1.0, 0.0}}, {0.5, 0.5}));
}

TEST_CASE("log_tail closed forms") {
  CHECK(log_tail(DistributionSpec::log_pareto(1.0), 4.0) == doctest::Approx(0.25));
  CHECK(log_tail(DistributionSpec::log_pareto(2.0), 2.0) == doctest::Approx(0.25));
  // complex Gaussian with E|xi|^2 = 1: P(|xi| > 1) = e^-1
  CHECK(log_tail(DistributionSpec::complex_gaussian(), 0.0) ==
        doctest::Approx(std::exp(-1.0)).epsilon(1e-12));
  CHECK(log_tail(DistributionSpec::rademacher(), 0.5) == 0.0);
  CHECK(log_tail(DistributionSpec::log_pareto_log(), 1.0) == 1.0);
  CHECK(log_tail(DistributionSpec::log_pareto_log(), std::numbers::e) ==
        doctest::Approx(1.0 / std::numbers::e));
  const auto pp = DistributionSpec::point_pairs({{10.0, 0.0}, {0.1, 0.0}}, {0.25, 0.75});
  CHECK(log_tail(pp, 1.0) == doctest::Approx(0.25));
}

TEST_CASE("empirical LogPareto tails match the exact tail within a binomial CI") {
  const std::size_t count = 100000;
  for (double rho : {0.5, 1.0, 2.0}) {
    const auto spec = DistributionSpec::log_pareto(rho);
    const auto draws = sample_log(spec, RngStream(1234), count);
    for (double t : {1.5, 2.0, 4.0}) {
      const double exact = std::pow(t, -rho);
      std::size_t hits = 0;
      for (const auto& d : draws)
        if (d.log_abs > t) ++hits;
      const double emp = static_cast<double>(hits) / static_cast<double>(count);
      CHECK(std::abs(emp - exact) <= testing::binomial_margin(exact, count));
    }
  }
}

TEST_CASE("empirical LogParetoLog tail matches 1/(t ln t)") {
  const std::size_t count = 200000;
  const auto spec = DistributionSpec::log_pareto_log();
  const auto draws = sample_log(spec, RngStream(99), count);
  for (double t : {3.0, 6.0, 12.0}) {
    const double exact = 1.0 / (t * std::log(t));
    std::size_t hits = 0;
    for (const auto& d : draws)
      if (d.log_abs > t) ++hits;
    const double emp = static_cast<double>(hits) / static_cast<double>(count);
    CHECK(std::abs(emp - exact) <= testing::binomial_margin(exact, count));
  }
}

TEST_CASE("complex gaussian modulus tail empirical check") {
  const std::size_t count = 100000;
  const auto spec = DistributionSpec::complex_gaussian();
  const auto draws = sample_log(spec, RngStream(5), count);
  std::size_t hits = 0;
  for (const auto& d : draws)
    if (d.log_abs > 0.0) ++hits;
  const double emp = static_cast<double>(hits) / static_cast<double>(count);
  CHECK(std::abs(emp - std::exp(-1.0)) <= testing::binomial_margin(std::exp(-1.0), count));
}

TEST_CASE("condition classification") {
  const auto r22 = classify_conditions(DistributionSpec::log_pareto(2.0), 1);
  CHECK(r22.meas_holds);
  CHECK(r22.elog_power_finite);

  const auto r1 = classify_conditions(DistributionSpec::log_pareto(1.0), 1);
  CHECK(!r1.meas_holds);  // boundary: t^-1 is not o(t^-1)
  CHECK(!r1.elog_power_finite);

  const auto rl = classify_conditions(DistributionSpec::log_pareto_log(), 1);
  CHECK(rl.meas_holds);
  CHECK(!rl.elog_power_finite);  // 1/(t ln t) = o(1/t) but the integral diverges

  const auto rl2 = classify_conditions(DistributionSpec::log_pareto_log(), 2);
  CHECK(!rl2.meas_holds);

  const auto g2 = classify_conditions(DistributionSpec::complex_gaussian(), 2);
  CHECK(g2.meas_holds);
  CHECK(g2.elog_power_finite);

  const auto lp15 = classify_conditions(DistributionSpec::log_pareto(1.5), 2);
  CHECK(!lp15.meas_holds);
  CHECK(!lp15.elog_power_finite);
}

TEST_CASE("classification is consistent with the numeric tail") {
  // whenever meas_holds for d, t^d * log_tail(t) decreases along 1e2,1e3,1e4
  const DistributionSpec specs[] = {
      DistributionSpec::complex_gaussian(), DistributionSpec::log_pareto(2.0),
      DistributionSpec::log_pareto(1.0), DistributionSpec::log_pareto_log()};
  for (const auto& spec : specs) {
    for (int d : {1, 2}) {
      if (!classify_conditions(spec, d).meas_holds) continue;
      double prev = std::numeric_limits<double>::infinity();
      for (double t : {1e2, 1e3, 1e4}) {
        const double v = std::pow(t, d) * log_tail(spec, t);
        CHECK(v <= prev + 1e-12);
        prev = v;
      }
    }
  }
}

TEST_CASE("empirical tail report") {
  const auto spec = DistributionSpec::log_pareto(2.0);

  SUBCASE("all samples equal 1") {
    std::vector<LogComplex> ones(10, LogComplex::from({1.0, 0.0}));
    const double grid[] = {1.0};
    const auto rep = empirical_tail_report(spec, ones, grid);
    REQUIRE(rep.size() == 1);
    CHECK(rep[0].empirical == 0.0);
  }

  SUBCASE("empty grid") {
    const auto draws = sample_log(spec, RngStream(3), 10);
    const auto rep = empirical_tail_report(spec, draws, {});
    CHECK(rep.empty());
  }

  SUBCASE("binomial CI at t = 2") {
    const std::size_t count = 100000;
    const auto draws = sample_log(spec, RngStream(77), count);
    const double grid[] = {2.0};
    const auto rep = empirical_tail_report(spec, draws, grid);
    REQUIRE(rep.size() == 1);
    CHECK(rep[0].exact == doctest::Approx(0.25));
    CHECK(std::abs(rep[0].empirical - rep[0].exact) <= testing::binomial_margin(0.25, count));
  }
}

TEST_CASE("distribution label parsing") {
  CHECK(parse_distribution("gaussian").has_value());
  CHECK(parse_distribution("rademacher").has_value());
  CHECK(parse_distribution("uniform-disk").has_value());
  CHECK(parse_distribution("logpareto:0.5").has_value());
  CHECK(parse_distribution("logparetolog").has_value());
  CHECK(!parse_distribution("cauchy").has_value());
  CHECK(!parse_distribution("logpareto:-1").has_value());
}
