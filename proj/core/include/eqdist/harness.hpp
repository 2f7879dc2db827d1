// Copyright (c) 2026 The eqdist authors.
// SPDX-License-Identifier: Apache-2.0
//
// Config-driven Monte Carlo experiment runner. Trials execute on a worker
// pool; every trial draws from a stream derived from (seed, degree, trial),
// so results are identical for any worker count and unchanged when degrees
// are added to a sweep.

#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "eqdist/bases.hpp"
#include "eqdist/ensembles.hpp"
#include "eqdist/potential.hpp"
#include "eqdist/rngdist.hpp"
#include "eqdist/stats.hpp"

namespace eqdist {

struct EnsembleSpec {
  enum class Kind { Kac, Ortho, Array, Kac2 };
  Kind kind = Kind::Kac;
  std::string label;  // basis label (ortho) or array label (array)

  std::string text() const;
  /// "kac", "kac2", "ortho:<measure>", "array:<array>". Throws ConfigError.
  static EnsembleSpec parse(const std::string& text);
};

struct StatisticSpec {
  enum class Kind { RadialKs, Weyl, AnnulusMass, NoRootsEvent, PotentialL1, BlEstimate };
  Kind kind = Kind::RadialKs;
  double lo = 0.5, hi = 1.5;  // annulus bounds
  std::size_t k_max = 8;      // weyl sums
  std::string name;           // original text; aggregate key

  /// "radial_ks", "weyl[:k_max]", "annulus_mass:lo:hi",
  /// "no_roots_event[:lo:hi]", "potential_l1", "bl_estimate".
  static StatisticSpec parse(const std::string& text);
};

struct ExperimentConfig {
  EnsembleSpec ensemble;
  DistributionSpec dist;
  std::vector<int> degrees;  // ascending, >= 1
  int trials = 1;
  std::vector<StatisticSpec> statistics;
  std::uint64_t seed = 0;
  std::string output_dir;  // empty: emit writes nothing
  bool dump_roots = false;

  static ExperimentConfig from_json_text(const std::string& text);
  /// Throws std::ios_base::failure when the file cannot be read.
  static ExperimentConfig from_json_file(const std::string& path);
  std::string to_json_text() const;  // normalized; fixed point of parse/emit
};

struct TrialRecord {
  enum class Status { Ok, NoConvergence, IdenticallyZero };
  int degree = 0;
  int trial = 0;
  Status status = Status::Ok;
  DiscrepancyReport report;
  std::map<std::string, double> scalars;  // per requested statistic
  std::vector<Complex> roots;             // kept when dump_roots is set
  std::string root_file;                  // reference relative to output_dir
};

struct DegreeAggregate {
  int n = 0;
  // per statistic name: mean, median, q10, q90 over successful trials
  std::map<std::string, std::array<double, 4>> stats;
  int successes = 0;
  int failures_no_convergence = 0;
  int failures_identically_zero = 0;
};

struct ExperimentResult {
  ExperimentConfig config;
  std::vector<TrialRecord> trials;  // ordered by (degree index, trial index)
  std::vector<DegreeAggregate> per_degree;
};

/// Number of workers: explicit argument, else EQDIST_THREADS, else hardware
/// concurrency.
int resolve_thread_count(int requested);

/// Runs every (degree, trial) cell; per-trial failures are recorded, never
/// abort the sweep. Deterministic for a fixed config, including under
/// parallel execution.
ExperimentResult run(const ExperimentConfig& config, int threads = 0);

enum class EmitFormat { Json, Csv };

/// Json: summary.json. Csv: trials.csv plus roots/*.csv (when dumped).
/// Returns the written paths. Pure function of the result: re-emitting
/// produces byte-identical files.
std::vector<std::string> emit(const ExperimentResult& result, EmitFormat format,
                              const std::string& dir);

std::string summary_json(const ExperimentResult& result);

/// Root dump format: header "re,im", one root per line in full round-trip
/// precision, sorted by argument in [0, 2pi) then modulus.
std::string roots_csv(std::span<const Complex> roots);

// Built-in label registries (shared with the CLI).
MeasureSpec make_measure(const std::string& label, int degree);
CoefficientArray make_array(const std::string& label, int n);
/// The limit measure an ensemble's zeros converge to. Throws ConfigError
/// when the ensemble has none (kac2) or the label is unknown.
LimitPotential make_limit(const EnsembleSpec& ensemble);

}  // namespace eqdist
