// Copyright 2026 The tribaker Authors
// SPDX-License-Identifier: Apache-2.0
//
// Biorthogonal resonance decomposition of a (non-unitary) quantum map.

#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "tribaker/quantum_map.hpp"

namespace tribaker {

/// Eigenvalues z_j with right kets |R_j> (columns of `right`) and left kets
/// |L_j> (columns of `left`, so <L_j| = left.col(j).adjoint()).
///
/// Pairs satisfy <L_j|R_k> = delta_jk and <R_j|R_j> = <L_j|L_j>, and are
/// ordered by decreasing |z|; equal moduli are ordered by decreasing Re z,
/// then increasing Im z.
struct ResonanceSet {
  int N = 0;
  double R = 1.0;
  Ordering ordering = Ordering::UP;

  Eigen::VectorXcd eigenvalues;
  Eigen::MatrixXcd right;
  Eigen::MatrixXcd left;
  std::vector<Eigen::Index> order;  // sorted position -> index in the raw eigensolver output

  /// Dimension of the subspace annihilated by the opening (N/3 when R = 0).
  int null_dimension = 0;
  /// Eigenvalues of the reduced map too close to zero to pair (R = 0 only).
  std::vector<std::complex<double>> discarded;
  /// Estimated condition number of the right-eigenvector matrix.
  double condition = 1.0;

  int size() const noexcept { return static_cast<int>(eigenvalues.size()); }
};

struct DecomposeOptions {
  double max_condition = 1e10;
  /// Eigenvalues closer than this are treated as one degenerate cluster.
  double cluster_tolerance = 1e-10;
  /// On a fully open map, reduced eigenvalues below this modulus join the null block.
  double zero_floor = 1e-6;
};

/// Full eigendecomposition. Left vectors come from the inverse of the
/// right-eigenvector matrix. For R = 0 the annihilated middle block is split
/// off first and the remaining 2N/3-dimensional map is decomposed.
/// Throws NearDefectiveSpectrum when the eigenvector matrix is too ill-conditioned.
ResonanceSet decompose(const QuantumMap& map, const DecomposeOptions& options = {});

/// First j resonances in the modulus order, 1 <= j <= res.size().
ResonanceSet longest_lived(const ResonanceSet& res, int j);

}  // namespace tribaker
