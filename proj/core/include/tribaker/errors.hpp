// Copyright 2026 The tribaker Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace tribaker {

/// Invalid run configuration. Carries every violated constraint, not just the first.
class ConfigError : public std::invalid_argument {
 public:
  explicit ConfigError(std::vector<std::string> violations);

  const std::vector<std::string>& violations() const noexcept { return violations_; }

 private:
  std::vector<std::string> violations_;
};

class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The right-eigenvector matrix is too ill-conditioned for a biorthogonal pairing.
class NearDefectiveSpectrum : public NumericalError {
 public:
  NearDefectiveSpectrum(double condition, std::vector<std::complex<double>> cluster);

  double condition() const noexcept { return condition_; }
  const std::vector<std::complex<double>>& cluster() const noexcept { return cluster_; }

 private:
  double condition_;
  std::vector<std::complex<double>> cluster_;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace tribaker
