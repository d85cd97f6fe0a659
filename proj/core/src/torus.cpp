// Copyright 2026 The tribaker Authors
// SPDX-License-Identifier: Apache-2.0

#include "tribaker/torus.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "tribaker/errors.hpp"

namespace tribaker {

ConfigError::ConfigError(std::vector<std::string> violations)
    : std::invalid_argument([&] {
        std::string msg = "invalid configuration:";
        for (const auto& v : violations) msg += "\n  - " + v;
        return msg;
      }()),
      violations_(std::move(violations)) {}

NearDefectiveSpectrum::NearDefectiveSpectrum(double condition,
                                             std::vector<std::complex<double>> cluster)
    : NumericalError("near-defective spectrum: eigenvector condition number " +
                     std::to_string(condition) + " (" + std::to_string(cluster.size()) +
                     " ill-conditioned eigenvalues)"),
      condition_(condition),
      cluster_(std::move(cluster)) {}

double wrap_unit(double x) {
  double r = x - std::floor(x);
  if (r >= 1.0) r = 0.0;
  return r;
}

TorusPoint::TorusPoint(double q, double p) {
  if (!std::isfinite(q) || !std::isfinite(p)) {
    throw std::invalid_argument("TorusPoint: non-finite coordinate");
  }
  q_ = wrap_unit(q);
  p_ = wrap_unit(p);
}

double torus_distance(const TorusPoint& a, const TorusPoint& b) {
  double dq = std::abs(a.q() - b.q());
  double dp = std::abs(a.p() - b.p());
  dq = std::min(dq, 1.0 - dq);
  dp = std::min(dp, 1.0 - dp);
  return std::hypot(dq, dp);
}

void BoundaryPhases::validate() const {
  auto ok = [](double c) { return c >= 0.0 && c < 1.0; };
  if (!ok(chi_q) || !ok(chi_p)) {
    throw std::invalid_argument("BoundaryPhases: chi_q and chi_p must lie in [0,1)");
  }
}

PhaseGrid::PhaseGrid(int n_q, int n_p) : n_q_(n_q), n_p_(n_p) {
  if (n_q < 1 || n_p < 1) throw std::invalid_argument("PhaseGrid: dimensions must be >= 1");
}

TorusPoint PhaseGrid::point(std::size_t index) const {
  const auto iq = static_cast<int>(index % n_q_);
  const auto ip = static_cast<int>(index / n_q_);
  return {(iq + 0.5) / n_q_, (ip + 0.5) / n_p_};
}

std::vector<TorusPoint> grid_points(const PhaseGrid& grid) {
  std::vector<TorusPoint> points;
  points.reserve(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) points.push_back(grid.point(i));
  return points;
}

double quadrature(const PhaseGrid& grid, std::span<const double> values, double gamma) {
  if (!(gamma > 0.0) || !std::isfinite(gamma)) {
    throw std::invalid_argument("quadrature: exponent must be positive");
  }
  if (values.size() != grid.size()) {
    throw std::invalid_argument("quadrature: field size does not match grid");
  }
  double sum = 0.0;
  for (double v : values) {
    if (!std::isfinite(v) || v < 0.0) {
      throw std::invalid_argument("quadrature: field values must be finite and non-negative");
    }
    sum += gamma == 1.0 ? v : std::pow(v, gamma);
  }
  sum *= grid.cell_area();
  return gamma == 1.0 ? sum : std::pow(sum, 1.0 / gamma);
}

namespace {

// Unnormalized periodized Gaussian. The image m carries the factor
// exp(2 pi i chi_p m) so that psi(x+1) = exp(2 pi i chi_p) psi(x), consistent
// with the position-to-momentum kernel.
void fill_coherent(double q, double p, int N, const BoundaryPhases& phases,
                   std::complex<double>* out) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  const double n = N;
  for (int j = 0; j < N; ++j) {
    const double x = (j + phases.chi_q) / n;
    std::complex<double> acc{0.0, 0.0};
    for (int m = -kCoherentImageWindow; m <= kCoherentImageWindow; ++m) {
      const double d = x - q - m;
      const double envelope = std::exp(-std::numbers::pi * n * d * d);
      if (envelope == 0.0) continue;
      acc += std::polar(envelope, two_pi * (phases.chi_p * m + n * p * d));
    }
    out[j] = acc;
  }
}

}  // namespace

CoherentState coherent_state(const TorusPoint& center, int N, const BoundaryPhases& phases) {
  if (N < 3) throw std::invalid_argument("coherent_state: N must be >= 3");
  phases.validate();
  CoherentState cs{center, N, phases, Eigen::VectorXcd(N)};
  fill_coherent(center.q(), center.p(), N, phases, cs.coefficients.data());
  cs.coefficients.normalize();
  return cs;
}

Eigen::MatrixXcd coherent_overlaps(const PhaseGrid& grid, const Eigen::MatrixXcd& states,
                                   const BoundaryPhases& phases) {
  const auto N = static_cast<int>(states.rows());
  if (N < 3) throw std::invalid_argument("coherent_overlaps: N must be >= 3");
  phases.validate();

  Eigen::MatrixXcd result(static_cast<Eigen::Index>(grid.size()), states.cols());
  // Row-major chunk: one coherent state per row.
  Eigen::Matrix<std::complex<double>, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> chunk(
      grid.n_q(), N);
  for (int ip = 0; ip < grid.n_p(); ++ip) {
    const double p = (ip + 0.5) / grid.n_p();
    for (int iq = 0; iq < grid.n_q(); ++iq) {
      const double q = (iq + 0.5) / grid.n_q();
      fill_coherent(q, p, N, phases, chunk.row(iq).data());
      chunk.row(iq).normalize();
    }
    result.middleRows(static_cast<Eigen::Index>(grid.index(0, ip)), grid.n_q()).noalias() =
        chunk.conjugate() * states;
  }
  return result;
}

}  // namespace tribaker
