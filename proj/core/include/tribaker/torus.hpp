// Copyright 2026 The tribaker Authors
// SPDX-License-Identifier: Apache-2.0
//
// Quantized 2-torus: phase-space points, boundary phases, evaluation grids and
// periodized-Gaussian coherent states.

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace tribaker {

/// A point of the unit torus. Coordinates are reduced mod 1 on construction.
class TorusPoint {
 public:
  TorusPoint() = default;
  TorusPoint(double q, double p);

  double q() const noexcept { return q_; }
  double p() const noexcept { return p_; }

  friend bool operator==(const TorusPoint&, const TorusPoint&) = default;

 private:
  double q_ = 0.0;
  double p_ = 0.0;
};

/// Reduces x into [0, 1).
double wrap_unit(double x);

/// Shortest distance between two points on the unit torus.
double torus_distance(const TorusPoint& a, const TorusPoint& b);

/// Twist angles of the torus quantization; (1/2, 1/2) is the antiperiodic choice.
struct BoundaryPhases {
  double chi_q = 0.5;
  double chi_p = 0.5;

  /// Throws std::invalid_argument unless both phases lie in [0, 1).
  void validate() const;
};

/// Uniform n_q x n_p grid; samples sit at cell centers ((i+1/2)/n_q, (k+1/2)/n_p).
class PhaseGrid {
 public:
  PhaseGrid(int n_q, int n_p);
  explicit PhaseGrid(int n) : PhaseGrid(n, n) {}

  int n_q() const noexcept { return n_q_; }
  int n_p() const noexcept { return n_p_; }
  std::size_t size() const noexcept { return static_cast<std::size_t>(n_q_) * n_p_; }
  double cell_area() const noexcept { return 1.0 / (static_cast<double>(n_q_) * n_p_); }

  /// Row-major index: q varies fastest.
  std::size_t index(int iq, int ip) const noexcept {
    return static_cast<std::size_t>(ip) * n_q_ + iq;
  }
  TorusPoint point(std::size_t index) const;

  friend bool operator==(const PhaseGrid&, const PhaseGrid&) = default;

 private:
  int n_q_;
  int n_p_;
};

std::vector<TorusPoint> grid_points(const PhaseGrid& grid);

/// Riemann-sum phase-space norm (sum v^gamma * area)^(1/gamma).
/// Values must be finite and non-negative.
double quadrature(const PhaseGrid& grid, std::span<const double> values, double gamma);

struct CoherentState {
  TorusPoint center;
  int N = 0;
  BoundaryPhases phases;
  Eigen::VectorXcd coefficients;  // position basis, unit norm
};

/// Number of image cells summed on either side of the fundamental domain.
inline constexpr int kCoherentImageWindow = 4;

/// Periodized Gaussian |q,p> with position variance 1/(4 pi N). Requires N >= 3.
CoherentState coherent_state(const TorusPoint& center, int N, const BoundaryPhases& phases = {});

/// Overlaps <q,p|psi_k> for every grid point (rows) and every column psi_k of
/// `states` (N x K, position basis). Coherent states are generated on the fly,
/// one grid row at a time.
Eigen::MatrixXcd coherent_overlaps(const PhaseGrid& grid, const Eigen::MatrixXcd& states,
                                   const BoundaryPhases& phases = {});

}  // namespace tribaker
