// Copyright 2026 The tribaker Authors
// SPDX-License-Identifier: Apache-2.0
//
// Resonance projectors h_j = |R_j><L_j| / <L_j|R_j>, the quantum repeller
// Q_j = (1/j) sum h_j', and their coherent-state phase-space fields.

#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "tribaker/spectral.hpp"
#include "tribaker/torus.hpp"

namespace tribaker {

enum class DistributionKind {
  HusimiR,
  HusimiL,
  LR,
  HusimiAverage,
  Repeller,
  ScaledHusimi,
  ScaledLR,
};

std::string_view to_string(DistributionKind kind);
DistributionKind parse_distribution_kind(std::string_view text);

enum class Side { Right, Left };

struct DistributionParams {
  int N = 0;
  double R = 1.0;
  int j = 0;  // subset size, 0 when not applicable
  int i = 0;  // 1-based resonance index, 0 when not applicable
};

/// Non-negative scalar field sampled on a PhaseGrid, in grid_points() order.
struct PhaseDistribution {
  PhaseGrid grid{1};
  std::vector<double> values;
  std::vector<std::uint8_t> excluded;  // 1 = excluded from statistics; empty = none
  DistributionKind kind = DistributionKind::HusimiR;
  DistributionParams params;

  bool is_excluded(std::size_t k) const { return !excluded.empty() && excluded[k] != 0; }
  std::size_t excluded_count() const;
  double max_value() const;
};

/// Phase-space norm of a distribution; excluded cells contribute nothing.
double quadrature(const PhaseDistribution& field, double gamma);

class ResonanceProjector {
 public:
  /// Projector of the j-th (1-based) resonance of `res`.
  ResonanceProjector(const ResonanceSet& res, int j);

  int index() const noexcept { return index_; }
  const Eigen::VectorXcd& right() const noexcept { return right_; }
  const Eigen::VectorXcd& left() const noexcept { return left_; }
  std::complex<double> overlap() const noexcept { return overlap_; }

  Eigen::VectorXcd apply(const Eigen::VectorXcd& v) const;

 private:
  int index_;
  Eigen::VectorXcd right_;
  Eigen::VectorXcd left_;
  std::complex<double> overlap_;
};

/// Denominators below this fraction of their maximum mark a grid point as excluded.
inline constexpr double kScaledFloor = 1e-6;

enum class RepellerWeighting {
  Equal,    // 1/j per projector
  Modulus,  // proportional to |z_j|
};

/// Coherent-state overlaps of the j longest-lived left and right resonances,
/// computed once and shared by every derived field.
class RepellerFields {
 public:
  RepellerFields(const ResonanceSet& res, int j, const PhaseGrid& grid,
                 const BoundaryPhases& phases = {});

  int subset() const noexcept { return j_; }
  const PhaseGrid& grid() const noexcept { return grid_; }

  /// Husimi of the unit-normalized i-th right or left resonance.
  PhaseDistribution husimi(int i, Side side = Side::Right) const;
  /// h_i(q,p) = |<q,p|h_i|q,p>|.
  PhaseDistribution lr(int i) const;
  /// <H^R>_j, mean of the unit-norm right Husimis.
  PhaseDistribution husimi_average() const;
  /// Q_j(q,p) = |<q,p|Q_j|q,p>|, modulus taken after the coherent sum.
  PhaseDistribution repeller(RepellerWeighting weighting = RepellerWeighting::Equal) const;
  PhaseDistribution scaled_husimi(int i) const;
  PhaseDistribution scaled_lr(int i) const;

 private:
  void check_index(int i) const;
  PhaseDistribution make(DistributionKind kind, int i) const;

  int N_;
  double R_;
  int j_;
  PhaseGrid grid_;
  Eigen::VectorXcd eigenvalues_;
  Eigen::MatrixXcd right_overlaps_;  // <q,p|R_k>
  Eigen::MatrixXcd left_overlaps_;   // <q,p|L_k>
  Eigen::VectorXd right_norms_;
  Eigen::VectorXd left_norms_;
  Eigen::VectorXcd pair_overlaps_;   // <L_k|R_k>
};

PhaseDistribution husimi(const Eigen::VectorXcd& state, Side side, const PhaseGrid& grid,
                         const BoundaryPhases& phases = {});
PhaseDistribution lr_representation(const ResonanceProjector& proj, const PhaseGrid& grid,
                                    const BoundaryPhases& phases = {});
PhaseDistribution quantum_repeller(const ResonanceSet& res, int j, const PhaseGrid& grid,
                                   RepellerWeighting weighting = RepellerWeighting::Equal);
PhaseDistribution husimi_average(const ResonanceSet& res, int j, const PhaseGrid& grid);
PhaseDistribution scaled_husimi(const ResonanceSet& res, int i, int j, const PhaseGrid& grid);
PhaseDistribution scaled_lr(const ResonanceSet& res, int i, int j, const PhaseGrid& grid);

/// Pointwise numerator / denominator with the kScaledFloor exclusion rule.
PhaseDistribution scaled_quotient(const PhaseDistribution& numerator,
                                  const PhaseDistribution& denominator, DistributionKind kind);

}  // namespace tribaker
