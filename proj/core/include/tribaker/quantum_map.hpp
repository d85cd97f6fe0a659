// Copyright 2026 The tribaker Authors
// SPDX-License-Identifier: Apache-2.0
//
// Quantum tribaker propagator in the position basis and its partially open
// version obtained with the reflectivity projector.

#pragma once

#include <string_view>

#include <Eigen/Dense>

#include "tribaker/torus.hpp"

namespace tribaker {

/// Composition of the unitary U with the opening projector P.
enum class Ordering {
  UP,         // U * P: attenuate, then propagate
  PU,         // P * U
  Symmetric,  // sqrt(P) * U * sqrt(P)
};

std::string_view to_string(Ordering ordering);
/// Accepts "UP", "PU" and "sym". Throws std::invalid_argument otherwise.
Ordering parse_ordering(std::string_view text);

struct QuantumMap {
  int N = 0;
  BoundaryPhases phases;
  double R = 1.0;
  Ordering ordering = Ordering::UP;
  Eigen::MatrixXcd matrix;
};

/// <p_k|q_j> = exp(-2 pi i (j + chi_q)(k + chi_p) / N) / sqrt(N), rows indexed by k.
Eigen::MatrixXcd fourier_kernel(int N, const BoundaryPhases& phases);

/// Closed map G_N^{-1} diag(G_{N/3}, G_{N/3}, G_{N/3}) with antiperiodic phases.
QuantumMap closed_map(int N);

/// diag(1, sqrt(R), 1) by thirds of the position basis.
Eigen::DiagonalMatrix<double, Eigen::Dynamic> opening_projector(int N, double R);

QuantumMap open_map(int N, double R, Ordering ordering = Ordering::UP);

}  // namespace tribaker
