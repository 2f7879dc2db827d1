// Copyright (c) 2026 The eqdist authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace eqdist {

/// A coefficient law whose support collapses to fewer than two points.
class DegenerateLaw : public std::invalid_argument {
 public:
  explicit DegenerateLaw(const std::string& what) : std::invalid_argument(what) {}
};

/// The discretized measure cannot support the requested polynomial degree:
/// the monomial Gram matrix is numerically rank-deficient.
class IllConditionedMeasure : public std::runtime_error {
 public:
  explicit IllConditionedMeasure(const std::string& what) : std::runtime_error(what) {}
};

/// A drawn polynomial whose coefficients are all exactly zero.
class IdenticallyZero : public std::runtime_error {
 public:
  explicit IdenticallyZero(const std::string& what) : std::runtime_error(what) {}
};

/// All per-term concentration values equal 1, so the Kolmogorov-Rogozin
/// denominator vanishes.
class DegenerateTerms : public std::invalid_argument {
 public:
  explicit DegenerateTerms(const std::string& what) : std::invalid_argument(what) {}
};

/// Experiment configuration rejected; `path` names the offending field.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string path, const std::string& what)
      : std::runtime_error(path + ": " + what), path_(std::move(path)) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

}  // namespace eqdist
