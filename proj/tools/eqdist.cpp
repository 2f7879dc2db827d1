// Copyright (c) 2026 The eqdist authors.
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: config-driven Monte Carlo sweeps plus small
// single-shot diagnostics (root dumps, tail classification, covering checks,
// potential grids).
//
// Exit codes: 0 success, 1 config/usage error, 2 I/O error.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "eqdist/errors.hpp"
#include "eqdist/harness.hpp"
#include "eqdist/roots.hpp"
#include "eqdist/stats.hpp"

namespace {

using namespace eqdist;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitIo = 2;

Complex parse_complex_pair(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos)
    throw ConfigError("--z", "expected 're,im', got '" + text + "'");
  try {
    return {std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1))};
  } catch (const std::exception&) {
    throw ConfigError("--z", "cannot parse '" + text + "'");
  }
}

PolynomialSample draw_for_cli(const EnsembleSpec& ensemble, int n, const DistributionSpec& dist,
                              std::uint64_t seed, std::uint64_t trial) {
  switch (ensemble.kind) {
    case EnsembleSpec::Kind::Kac:
      return draw_kac(n, dist, seed, trial);
    case EnsembleSpec::Kind::Ortho: {
      const OrthoBasis basis = gram_schmidt_basis(make_measure(ensemble.label, n), n);
      return draw_ortho(n, basis, dist, seed, trial);
    }
    case EnsembleSpec::Kind::Array:
      return draw_array(make_array(ensemble.label, n), dist, seed, trial);
    case EnsembleSpec::Kind::Kac2:
      throw ConfigError("--ensemble", "kac2 has no one-variable root set");
  }
  throw ConfigError("--ensemble", "unreachable");
}

int cmd_run(const std::string& config_path, int threads) {
  ExperimentConfig config = ExperimentConfig::from_json_file(config_path);
  ExperimentResult result = run(config, threads);
  if (!config.output_dir.empty()) {
    auto files = emit(result, EmitFormat::Json, config.output_dir);
    auto more = emit(result, EmitFormat::Csv, config.output_dir);
    files.insert(files.end(), more.begin(), more.end());
    for (const auto& f : files) std::cout << "wrote " << f << "\n";
  } else {
    std::cout << summary_json(result);
  }
  return kExitOk;
}

int cmd_roots(const std::string& ensemble_text, int n, const std::string& dist_text,
              std::uint64_t seed, std::uint64_t trial, const std::string& out_path) {
  const EnsembleSpec ensemble = EnsembleSpec::parse(ensemble_text);
  const auto dist = parse_distribution(dist_text);
  if (!dist) throw ConfigError("--dist", "unknown distribution '" + dist_text + "'");
  const PolynomialSample sample = draw_for_cli(ensemble, n, *dist, seed, trial);
  const RootSet rs = find_roots(sample);
  const std::string csv = roots_csv(rs.roots);
  if (out_path.empty()) {
    std::cout << csv;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::ios_base::failure("cannot open for writing: " + out_path);
    out << csv;
    if (!out) throw std::ios_base::failure("write failed: " + out_path);
  }
  return kExitOk;
}

int cmd_tail_check(const std::string& dist_text, int d, std::size_t samples, std::uint64_t seed) {
  const auto dist = parse_distribution(dist_text);
  if (!dist) throw ConfigError("--dist", "unknown distribution '" + dist_text + "'");
  const ConditionReport rep = classify_conditions(*dist, d);
  std::cout << "dist=" << dist->label << " d=" << d
            << " meas_holds=" << (rep.meas_holds ? "true" : "false")
            << " elog_power_finite=" << (rep.elog_power_finite ? "true" : "false") << "\n";
  if (samples > 0) {
    const auto draws = sample_log(*dist, RngStream(seed), samples);
    const double grid[] = {0.5, 1.0, 2.0, 4.0, 8.0, 16.0};
    std::cout << "t,empirical,exact\n";
    for (const auto& pt : empirical_tail_report(*dist, draws, grid)) {
      std::printf("%g,%.6g,%.6g\n", pt.t, pt.empirical, pt.exact);
    }
  }
  return kExitOk;
}

int cmd_cover_check(const std::string& array_label, int n, const std::string& z_text, double eps,
                    std::uint64_t /*seed*/) {
  const CoefficientArray arr = make_array(array_label, n);
  const Complex z = parse_complex_pair(z_text);
  // Deterministic coefficient points w_k = f_{n,k} z^k / ||.||.
  PolynomialSample p;
  p.n = n;
  p.coeffs.resize(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k)
    p.coeffs[static_cast<std::size_t>(k)] = LogComplex{arr.log_f(k), Complex{1.0, 0.0}};
  const auto points = normalized_coefficient_points(p, z);
  const double radius = std::exp(-eps * n);
  const std::size_t cover = covering_number(points, radius);
  const double v = potential_from_coefficients(arr, z);
  const std::size_t cond_count = condition_ii_count(arr, z, eps, v);
  std::printf("array=%s n=%d z=%.17g,%.17g eps=%g radius=%.6g\n", array_label.c_str(), n,
              z.real(), z.imag(), eps, radius);
  std::printf("covering_number=%zu condition_ii_count=%zu n_two_thirds=%.6g\n", cover, cond_count,
              std::pow(static_cast<double>(n), 2.0 / 3.0));
  return kExitOk;
}

int cmd_potential_grid(const std::string& ensemble_text, int n, const std::string& dist_text,
                       std::uint64_t seed, std::uint64_t trial) {
  const EnsembleSpec ensemble = EnsembleSpec::parse(ensemble_text);
  const auto dist = parse_distribution(dist_text);
  if (!dist) throw ConfigError("--dist", "unknown distribution '" + dist_text + "'");
  if (ensemble.kind == EnsembleSpec::Kind::Kac2) {
    const PolynomialSample2 sample = draw_kac2(n, *dist, seed, trial);
    const PotentialError pe = potential_l1_error_2(sample, CompactSetModel::torus2());
    std::printf("ensemble=kac2 n=%d potential_l1=%.6g clip_bias=%.6g\n", n, pe.l1, pe.clip_bias);
    return kExitOk;
  }
  const PolynomialSample sample = draw_for_cli(ensemble, n, *dist, seed, trial);
  const LimitPotential limit = make_limit(ensemble);
  const PotentialError pe = potential_l1_error(sample, limit);
  std::printf("ensemble=%s n=%d potential_l1=%.6g clip_bias=%.6g\n", ensemble.text().c_str(), n,
              pe.l1, pe.clip_bias);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"eqdist: random polynomial zero equidistribution experiments"};
  app.require_subcommand(1);

  auto* run_cmd = app.add_subcommand("run", "run an experiment config (JSON)");
  std::string config_path;
  int threads = 0;
  run_cmd->add_option("config", config_path, "config JSON path")->required();
  run_cmd->add_option("--threads", threads, "worker count (default: EQDIST_THREADS or hardware)");

  auto* roots_cmd = app.add_subcommand("roots", "single draw, roots to CSV");
  std::string ensemble_text = "kac";
  std::string dist_text = "gaussian";
  std::string out_path;
  std::string z_text = "1,0";
  std::string array_label = "kac";
  int n = 64;
  int dim = 1;
  std::uint64_t seed = 0;
  std::uint64_t trial = 0;
  std::size_t tail_samples = 0;
  double eps = 0.1;
  roots_cmd->add_option("--ensemble", ensemble_text, "kac | ortho:<measure> | array:<label>");
  roots_cmd->add_option("--n", n, "degree")->required();
  roots_cmd->add_option("--dist", dist_text, "coefficient law");
  roots_cmd->add_option("--seed", seed, "seed");
  roots_cmd->add_option("--trial", trial, "trial index");
  roots_cmd->add_option("--out", out_path, "output CSV path (default: stdout)");

  auto* tail_cmd = app.add_subcommand("tail-check", "classify tail conditions of a law");
  tail_cmd->add_option("--dist", dist_text, "coefficient law")->required();
  tail_cmd->add_option("--d", dim, "dimension (1 or 2)");
  tail_cmd->add_option("--samples", tail_samples, "optional empirical tail sample count");
  tail_cmd->add_option("--seed", seed, "seed for the empirical check");

  auto* cover_cmd = app.add_subcommand("cover-check", "covering diagnostic for an array at z");
  cover_cmd->add_option("--array", array_label, "array label")->required();
  cover_cmd->add_option("--n", n, "degree")->required();
  cover_cmd->add_option("--z", z_text, "evaluation point re,im")->required();
  cover_cmd->add_option("--eps", eps, "ball radius exponent: radius = exp(-eps n)")->required();

  auto* grid_cmd = app.add_subcommand("potential-grid", "L1 potential error of one draw");
  grid_cmd->add_option("--ensemble", ensemble_text, "kac | kac2 | ortho:<m> | array:<l>");
  grid_cmd->add_option("--n", n, "degree")->required();
  grid_cmd->add_option("--dist", dist_text, "coefficient law");
  grid_cmd->add_option("--seed", seed, "seed");
  grid_cmd->add_option("--trial", trial, "trial index");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help();
    return kExitConfig;
  }

  try {
    if (*run_cmd) return cmd_run(config_path, threads);
    if (*roots_cmd) return cmd_roots(ensemble_text, n, dist_text, seed, trial, out_path);
    if (*tail_cmd) return cmd_tail_check(dist_text, dim, tail_samples, seed);
    if (*cover_cmd) return cmd_cover_check(array_label, n, z_text, eps, seed);
    if (*grid_cmd) return cmd_potential_grid(ensemble_text, n, dist_text, seed, trial);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitConfig;
}
