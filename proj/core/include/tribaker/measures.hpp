// Copyright 2026 The tribaker Authors
// SPDX-License-Identifier: Apache-2.0
//
// Localization measures of scaled phase-space distributions:
//   sigma - L1 distance between the intensity histogram and exp(-w),
//   mu    - squared L1/L2 phase-space norm ratio, referenced to a coherent state.

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "tribaker/quantum_map.hpp"
#include "tribaker/repeller.hpp"
#include "tribaker/torus.hpp"

namespace tribaker {

struct IntensityHistogram {
  std::vector<double> bin_edges;  // bins + 1 increasing edges on [0, w_max]
  std::vector<double> density;    // normalized over the binned range
  std::size_t sample_count = 0;   // samples that entered the histogram (in range)
  std::size_t excluded_count = 0;
  std::size_t overflow_count = 0; // samples above w_max

  std::size_t bins() const noexcept { return density.size(); }
  double bin_width(std::size_t b) const { return bin_edges[b + 1] - bin_edges[b]; }
  double bin_center(std::size_t b) const { return 0.5 * (bin_edges[b] + bin_edges[b + 1]); }
};

inline constexpr std::size_t kDefaultSamples = 1000;
inline constexpr int kDefaultBins = 50;
inline constexpr double kDefaultWMax = 6.0;

/// Density histogram of the given samples on [0, w_max] with equal-width bins.
IntensityHistogram histogram_from_samples(std::span<const double> samples, int bins, double w_max);

/// Strided deterministic subsample of the field (excluded points skipped)
/// binned into a density histogram. Rejects fields whose strided sample is
/// more than half excluded.
IntensityHistogram intensity_histogram(const PhaseDistribution& field,
                                       std::size_t samples = kDefaultSamples,
                                       int bins = kDefaultBins, double w_max = kDefaultWMax);

double sigma_measure(const IntensityHistogram& hist);

/// Fixed center of the coherent-state reference field rho_c.
inline const TorusPoint kReferenceCenter{0.25, 0.25};

/// L1/L2 ratio of rho_c(q,p) = |<q,p|q0,p0>|^2 on `grid`.
double reference_norm_ratio(const PhaseGrid& grid, int N, const BoundaryPhases& phases = {});

/// mu = [(|f|_1 / |f|_2) / (|rho_c|_1 / |rho_c|_2)]^2.
double norm_ratio(const PhaseDistribution& field, int N);
double norm_ratio(const PhaseDistribution& field, double reference_ratio);

struct MeasureReport {
  int N = 0;
  double R = 1.0;
  DistributionKind kind = DistributionKind::ScaledLR;
  int i = 0;
  int j = 0;
  int grid_q = 0;
  int grid_p = 0;
  std::size_t samples = 0;
  double sigma = 0.0;
  double mu = 0.0;
  double mu_over_N = 0.0;
  double excluded_fraction = 0.0;
  std::string error;  // non-empty for a failed cell

  bool ok() const noexcept { return error.empty(); }
};

/// mu of the unscaled averages <H^R>_j and Q_j.
struct AverageReport {
  int N = 0;
  double R = 1.0;
  DistributionKind kind = DistributionKind::Repeller;
  int j = 0;
  double mu = 0.0;
  double mu_over_N = 0.0;
  std::string error;

  bool ok() const noexcept { return error.empty(); }
};

struct SweepConfig {
  std::vector<int> N_list{48, 96, 192};
  std::vector<double> R_list{1.0, 0.1, 0.05, 0.0};
  int subset = 32;
  std::vector<int> states{6, 10, 16};
  int grid_q = 128;
  int grid_p = 128;
  std::vector<DistributionKind> kinds{DistributionKind::ScaledLR};
  Ordering ordering = Ordering::UP;
  std::size_t samples = kDefaultSamples;
  int bins = kDefaultBins;
  double w_max = kDefaultWMax;
  int workers = 1;

  /// Every violated constraint, empty when valid.
  std::vector<std::string> violations() const;
  /// Throws ConfigError listing all violations.
  void validate() const;

  friend bool operator==(const SweepConfig&, const SweepConfig&) = default;
};

struct SweepResult {
  std::vector<MeasureReport> reports;   // order: N, R, kind, state
  std::vector<AverageReport> averages;  // order: N, R, {HusimiAverage, Repeller}
};

/// Runs every (N, R) cell; a failing cell is recorded in its rows, not thrown.
SweepResult measure_sweep(const SweepConfig& config);

}  // namespace tribaker
