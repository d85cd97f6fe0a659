// Copyright 2026 The tribaker Authors
// SPDX-License-Identifier: Apache-2.0

#include "tribaker/repeller.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace tribaker {

namespace {

constexpr std::pair<DistributionKind, std::string_view> kKindNames[] = {
    {DistributionKind::HusimiR, "husimi-right"},
    {DistributionKind::HusimiL, "husimi-left"},
    {DistributionKind::LR, "lr"},
    {DistributionKind::HusimiAverage, "husimi-average"},
    {DistributionKind::Repeller, "repeller"},
    {DistributionKind::ScaledHusimi, "scaled-husimi"},
    {DistributionKind::ScaledLR, "scaled-lr"},
};

}  // namespace

std::string_view to_string(DistributionKind kind) {
  for (const auto& [k, name] : kKindNames) {
    if (k == kind) return name;
  }
  return "?";
}

DistributionKind parse_distribution_kind(std::string_view text) {
  for (const auto& [k, name] : kKindNames) {
    if (name == text) return k;
  }
  throw std::invalid_argument("unknown distribution kind '" + std::string(text) + "'");
}

std::size_t PhaseDistribution::excluded_count() const {
  return static_cast<std::size_t>(std::count(excluded.begin(), excluded.end(), std::uint8_t{1}));
}

double PhaseDistribution::max_value() const {
  double m = 0.0;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (!is_excluded(k)) m = std::max(m, values[k]);
  }
  return m;
}

double quadrature(const PhaseDistribution& field, double gamma) {
  if (field.excluded.empty()) return quadrature(field.grid, field.values, gamma);
  std::vector<double> masked = field.values;
  for (std::size_t k = 0; k < masked.size(); ++k) {
    if (field.is_excluded(k)) masked[k] = 0.0;
  }
  return quadrature(field.grid, masked, gamma);
}

ResonanceProjector::ResonanceProjector(const ResonanceSet& res, int j) : index_(j) {
  if (j < 1 || j > res.size()) throw std::invalid_argument("ResonanceProjector: index out of range");
  right_ = res.right.col(j - 1);
  left_ = res.left.col(j - 1);
  overlap_ = left_.dot(right_);
  if (!(std::abs(overlap_) > 1e-12)) {
    throw std::invalid_argument("ResonanceProjector: ill-conditioned pairing <L|R> ~ 0");
  }
}

Eigen::VectorXcd ResonanceProjector::apply(const Eigen::VectorXcd& v) const {
  return right_ * (left_.dot(v) / overlap_);
}

RepellerFields::RepellerFields(const ResonanceSet& res, int j, const PhaseGrid& grid,
                               const BoundaryPhases& phases)
    : N_(res.N), R_(res.R), j_(j), grid_(grid) {
  if (j < 1 || j > res.size()) {
    throw std::invalid_argument("RepellerFields: subset size " + std::to_string(j) +
                                " outside [1, " + std::to_string(res.size()) + "]");
  }
  eigenvalues_ = res.eigenvalues.head(j);
  Eigen::MatrixXcd both(res.N, 2 * j);
  both << res.right.leftCols(j), res.left.leftCols(j);
  const Eigen::MatrixXcd ov = coherent_overlaps(grid, both, phases);
  right_overlaps_ = ov.leftCols(j);
  left_overlaps_ = ov.rightCols(j);
  right_norms_ = res.right.leftCols(j).colwise().norm().transpose();
  left_norms_ = res.left.leftCols(j).colwise().norm().transpose();
  pair_overlaps_.resize(j);
  for (int k = 0; k < j; ++k) pair_overlaps_(k) = res.left.col(k).dot(res.right.col(k));
}

void RepellerFields::check_index(int i) const {
  if (i < 1 || i > j_) {
    throw std::invalid_argument("resonance index " + std::to_string(i) + " outside [1, " +
                                std::to_string(j_) + "]");
  }
}

PhaseDistribution RepellerFields::make(DistributionKind kind, int i) const {
  PhaseDistribution d;
  d.grid = grid_;
  d.values.resize(grid_.size());
  d.kind = kind;
  d.params = {N_, R_, j_, i};
  return d;
}

PhaseDistribution RepellerFields::husimi(int i, Side side) const {
  check_index(i);
  const bool right = side == Side::Right;
  auto d = make(right ? DistributionKind::HusimiR : DistributionKind::HusimiL, i);
  const auto& ov = right ? right_overlaps_ : left_overlaps_;
  const double norm2 = std::pow(right ? right_norms_(i - 1) : left_norms_(i - 1), 2);
  for (std::size_t k = 0; k < d.values.size(); ++k) {
    d.values[k] = std::norm(ov(static_cast<Eigen::Index>(k), i - 1)) / norm2;
  }
  return d;
}

PhaseDistribution RepellerFields::lr(int i) const {
  check_index(i);
  auto d = make(DistributionKind::LR, i);
  const double denom = std::abs(pair_overlaps_(i - 1));
  for (std::size_t k = 0; k < d.values.size(); ++k) {
    const auto row = static_cast<Eigen::Index>(k);
    d.values[k] = std::abs(right_overlaps_(row, i - 1)) * std::abs(left_overlaps_(row, i - 1)) / denom;
  }
  return d;
}

PhaseDistribution RepellerFields::husimi_average() const {
  auto d = make(DistributionKind::HusimiAverage, 0);
  const Eigen::VectorXd inv_norm2 = right_norms_.array().square().inverse();
  for (std::size_t k = 0; k < d.values.size(); ++k) {
    const auto row = static_cast<Eigen::Index>(k);
    d.values[k] = right_overlaps_.row(row).cwiseAbs2().dot(inv_norm2.transpose()) / j_;
  }
  return d;
}

PhaseDistribution RepellerFields::repeller(RepellerWeighting weighting) const {
  auto d = make(DistributionKind::Repeller, 0);
  Eigen::VectorXcd w(j_);
  if (weighting == RepellerWeighting::Equal) {
    w.setConstant(1.0 / j_);
  } else {
    const Eigen::VectorXd mod = eigenvalues_.cwiseAbs();
    w = (mod / mod.sum()).cast<std::complex<double>>();
  }
  w = w.cwiseQuotient(pair_overlaps_);
  for (std::size_t k = 0; k < d.values.size(); ++k) {
    const auto row = static_cast<Eigen::Index>(k);
    std::complex<double> acc{0.0, 0.0};
    for (int c = 0; c < j_; ++c) {
      acc += w(c) * right_overlaps_(row, c) * std::conj(left_overlaps_(row, c));
    }
    d.values[k] = std::abs(acc);
  }
  return d;
}

PhaseDistribution RepellerFields::scaled_husimi(int i) const {
  auto d = scaled_quotient(husimi(i, Side::Right), husimi_average(), DistributionKind::ScaledHusimi);
  d.params.i = i;
  return d;
}

PhaseDistribution RepellerFields::scaled_lr(int i) const {
  auto d = scaled_quotient(lr(i), repeller(), DistributionKind::ScaledLR);
  d.params.i = i;
  return d;
}

PhaseDistribution scaled_quotient(const PhaseDistribution& numerator,
                                  const PhaseDistribution& denominator, DistributionKind kind) {
  if (!(numerator.grid == denominator.grid)) {
    throw std::invalid_argument("scaled_quotient: grids differ");
  }
  PhaseDistribution d;
  d.grid = numerator.grid;
  d.kind = kind;
  d.params = numerator.params;
  d.values.assign(numerator.values.size(), 0.0);
  d.excluded.assign(numerator.values.size(), 0);
  const double floor = kScaledFloor * denominator.max_value();
  for (std::size_t k = 0; k < d.values.size(); ++k) {
    const double den = denominator.values[k];
    if (numerator.is_excluded(k) || denominator.is_excluded(k) || !(den > floor)) {
      d.excluded[k] = 1;
    } else {
      d.values[k] = numerator.values[k] / den;
    }
  }
  return d;
}

PhaseDistribution husimi(const Eigen::VectorXcd& state, Side side, const PhaseGrid& grid,
                         const BoundaryPhases& phases) {
  const double norm = state.norm();
  if (!(norm > 0.0)) throw std::invalid_argument("husimi: zero state");
  const Eigen::MatrixXcd ov = coherent_overlaps(grid, state / norm, phases);
  PhaseDistribution d;
  d.grid = grid;
  d.kind = side == Side::Right ? DistributionKind::HusimiR : DistributionKind::HusimiL;
  d.params.N = static_cast<int>(state.size());
  d.values.resize(grid.size());
  for (std::size_t k = 0; k < d.values.size(); ++k) {
    d.values[k] = std::norm(ov(static_cast<Eigen::Index>(k), 0));
  }
  return d;
}

PhaseDistribution lr_representation(const ResonanceProjector& proj, const PhaseGrid& grid,
                                    const BoundaryPhases& phases) {
  Eigen::MatrixXcd both(proj.right().size(), 2);
  both << proj.right(), proj.left();
  const Eigen::MatrixXcd ov = coherent_overlaps(grid, both, phases);
  PhaseDistribution d;
  d.grid = grid;
  d.kind = DistributionKind::LR;
  d.params.N = static_cast<int>(proj.right().size());
  d.params.i = proj.index();
  d.values.resize(grid.size());
  const double denom = std::abs(proj.overlap());
  for (std::size_t k = 0; k < d.values.size(); ++k) {
    const auto row = static_cast<Eigen::Index>(k);
    d.values[k] = std::abs(ov(row, 0)) * std::abs(ov(row, 1)) / denom;
  }
  return d;
}

PhaseDistribution quantum_repeller(const ResonanceSet& res, int j, const PhaseGrid& grid,
                                   RepellerWeighting weighting) {
  return RepellerFields(res, j, grid).repeller(weighting);
}

PhaseDistribution husimi_average(const ResonanceSet& res, int j, const PhaseGrid& grid) {
  return RepellerFields(res, j, grid).husimi_average();
}

PhaseDistribution scaled_husimi(const ResonanceSet& res, int i, int j, const PhaseGrid& grid) {
  return RepellerFields(res, j, grid).scaled_husimi(i);
}

PhaseDistribution scaled_lr(const ResonanceSet& res, int i, int j, const PhaseGrid& grid) {
  return RepellerFields(res, j, grid).scaled_lr(i);
}

}  // namespace tribaker
