// Copyright 2026 The tribaker Authors
// SPDX-License-Identifier: Apache-2.0

#include "tribaker/quantum_map.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace tribaker {

std::string_view to_string(Ordering ordering) {
  switch (ordering) {
    case Ordering::UP: return "UP";
    case Ordering::PU: return "PU";
    case Ordering::Symmetric: return "sym";
  }
  return "?";
}

Ordering parse_ordering(std::string_view text) {
  if (text == "UP") return Ordering::UP;
  if (text == "PU") return Ordering::PU;
  if (text == "sym") return Ordering::Symmetric;
  throw std::invalid_argument("unknown ordering '" + std::string(text) + "' (expected UP, PU or sym)");
}

namespace {

void require_dimension(int N) {
  if (N < 3 || N % 3 != 0) {
    throw std::invalid_argument("quantum map dimension must be a positive multiple of 3, got " +
                                std::to_string(N));
  }
}

void require_reflectivity(double R) {
  if (!(R >= 0.0 && R <= 1.0)) throw std::invalid_argument("reflectivity must lie in [0,1]");
}

}  // namespace

Eigen::MatrixXcd fourier_kernel(int N, const BoundaryPhases& phases) {
  if (N < 1) throw std::invalid_argument("fourier_kernel: N must be >= 1");
  phases.validate();
  const double scale = 1.0 / std::sqrt(static_cast<double>(N));
  Eigen::MatrixXcd G(N, N);
  for (int k = 0; k < N; ++k) {
    for (int j = 0; j < N; ++j) {
      // Integer part j*k reduced mod N first to keep the phase argument small.
      const long long jk = (static_cast<long long>(j) * k) % N;
      const double frac =
          (static_cast<double>(jk) + j * phases.chi_p + k * phases.chi_q +
           phases.chi_q * phases.chi_p) / N;
      const double angle = -2.0 * std::numbers::pi * (frac - std::floor(frac));
      G(k, j) = std::polar(scale, angle);
    }
  }
  return G;
}

QuantumMap closed_map(int N) {
  require_dimension(N);
  const BoundaryPhases phases{0.5, 0.5};
  const int third = N / 3;
  const Eigen::MatrixXcd block = fourier_kernel(third, phases);
  const Eigen::MatrixXcd G_inv = fourier_kernel(N, phases).adjoint();

  QuantumMap map{N, phases, 1.0, Ordering::UP, Eigen::MatrixXcd(N, N)};
  for (int b = 0; b < 3; ++b) {
    map.matrix.middleCols(b * third, third).noalias() =
        G_inv.middleCols(b * third, third) * block;
  }
  return map;
}

Eigen::DiagonalMatrix<double, Eigen::Dynamic> opening_projector(int N, double R) {
  require_dimension(N);
  require_reflectivity(R);
  Eigen::VectorXd d = Eigen::VectorXd::Ones(N);
  d.segment(N / 3, N / 3).setConstant(std::sqrt(R));
  return Eigen::DiagonalMatrix<double, Eigen::Dynamic>(d);
}

QuantumMap open_map(int N, double R, Ordering ordering) {
  require_reflectivity(R);
  QuantumMap map = closed_map(N);
  map.R = R;
  map.ordering = ordering;
  if (R == 1.0) return map;

  const Eigen::VectorXd p = opening_projector(N, R).diagonal();
  switch (ordering) {
    case Ordering::UP:
      map.matrix = map.matrix * p.asDiagonal();
      break;
    case Ordering::PU:
      map.matrix = p.asDiagonal() * map.matrix;
      break;
    case Ordering::Symmetric: {
      const Eigen::VectorXd half = p.cwiseSqrt();
      map.matrix = half.asDiagonal() * map.matrix * half.asDiagonal();
      break;
    }
  }
  return map;
}

}  // namespace tribaker
