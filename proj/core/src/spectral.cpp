// Copyright 2026 The tribaker Authors
// SPDX-License-Identifier: Apache-2.0

#include "tribaker/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include <Eigen/Eigenvalues>

#include "tribaker/errors.hpp"

namespace tribaker {

namespace {

using Index = Eigen::Index;

// |z| quantized so that conjugate pairs and unit-circle spectra tie exactly.
long long modulus_key(std::complex<double> z) { return std::llround(std::abs(z) * 1e10); }

std::vector<Index> sorted_order(const Eigen::VectorXcd& z) {
  std::vector<Index> order(static_cast<std::size_t>(z.size()));
  std::iota(order.begin(), order.end(), Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) {
    const auto ka = modulus_key(z(a));
    const auto kb = modulus_key(z(b));
    if (ka != kb) return ka > kb;
    if (z(a).real() != z(b).real()) return z(a).real() > z(b).real();
    return z(a).imag() < z(b).imag();
  });
  return order;
}

Index find_root(std::vector<Index>& parent, Index i) {
  while (parent[i] != i) i = parent[i] = parent[parent[i]];
  return i;
}

// Replaces the eigenvectors of every degenerate cluster by an orthonormal
// basis of their span. Clusters whose span is not invariant (defective
// blocks) are left alone.
void orthonormalize_clusters(const Eigen::MatrixXcd& A, const Eigen::VectorXcd& z,
                             Eigen::MatrixXcd& V, double tol) {
  const double scale = std::max(A.cwiseAbs().maxCoeff(), 1.0);
  const Index n = z.size();
  std::vector<Index> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), Index{0});
  for (Index a = 0; a < n; ++a) {
    for (Index b = a + 1; b < n; ++b) {
      if (std::abs(z(a) - z(b)) < tol) parent[find_root(parent, b)] = find_root(parent, a);
    }
  }
  std::vector<std::vector<Index>> clusters(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) clusters[find_root(parent, i)].push_back(i);

  for (const auto& members : clusters) {
    if (members.size() < 2) continue;
    const auto m = static_cast<Index>(members.size());
    Eigen::MatrixXcd block(V.rows(), m);
    for (Index c = 0; c < m; ++c) block.col(c) = V.col(members[c]);
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(block);
    const Eigen::MatrixXcd Q = qr.householderQ() * Eigen::MatrixXcd::Identity(V.rows(), m);
    bool invariant = true;
    for (Index c = 0; c < m && invariant; ++c) {
      invariant = (A * Q.col(c) - z(members[c]) * Q.col(c)).norm() <= 1e-8 * scale * V.rows();
    }
    if (!invariant) continue;
    for (Index c = 0; c < m; ++c) V.col(members[c]) = Q.col(c);
  }
}

// Rescales each pair so <R|R> = <L|L> while keeping <L|R> = 1.
void balance_pairs(Eigen::MatrixXcd& right, Eigen::MatrixXcd& left) {
  for (Index j = 0; j < right.cols(); ++j) {
    const std::complex<double> overlap = left.col(j).dot(right.col(j));
    right.col(j) /= overlap;
    const double a = std::sqrt(left.col(j).norm() / right.col(j).norm());
    right.col(j) *= a;
    left.col(j) /= a;
  }
}

}  // namespace

ResonanceSet decompose(const QuantumMap& map, const DecomposeOptions& options) {
  const int N = map.N;
  if (map.matrix.rows() != N || map.matrix.cols() != N) {
    throw std::invalid_argument("decompose: matrix shape does not match N");
  }
  const bool reduced = map.R == 0.0;
  const int third = N / 3;

  // Kept position indices: everything except the annihilated middle block.
  std::vector<Index> keep;
  for (Index i = 0; i < N; ++i) {
    if (!reduced || i < third || i >= 2 * third) keep.push_back(i);
  }
  const auto n = static_cast<Index>(keep.size());
  Eigen::MatrixXcd A(n, n);
  if (reduced) {
    for (Index r = 0; r < n; ++r)
      for (Index c = 0; c < n; ++c) A(r, c) = map.matrix(keep[r], keep[c]);
  } else {
    A = map.matrix;
  }

  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(A, true);
  if (solver.info() != Eigen::Success) throw NumericalError("decompose: eigensolver failed");

  ResonanceSet res;
  res.N = N;
  res.R = map.R;
  res.ordering = map.ordering;
  res.order = sorted_order(solver.eigenvalues());
  res.null_dimension = reduced ? third : 0;

  Eigen::VectorXcd z(n);
  Eigen::MatrixXcd V(n, n);
  for (Index k = 0; k < n; ++k) {
    z(k) = solver.eigenvalues()(res.order[k]);
    V.col(k) = solver.eigenvectors().col(res.order[k]);
  }
  orthonormalize_clusters(A, z, V, options.cluster_tolerance);
  V.colwise().normalize();

  Eigen::PartialPivLU<Eigen::MatrixXcd> lu(V);
  const double rcond = lu.rcond();
  res.condition = rcond > 0.0 ? 1.0 / rcond : std::numeric_limits<double>::infinity();
  const Eigen::MatrixXcd V_inv = lu.inverse();
  if (!(res.condition <= options.max_condition)) {
    // Per-eigenvalue condition ||<L_j|| * ||R_j|| with unit right vectors.
    const Eigen::VectorXd kappa = V_inv.rowwise().norm();
    const double worst = kappa.maxCoeff();
    std::vector<std::complex<double>> cluster;
    for (Index k = 0; k < n; ++k) {
      if (kappa(k) >= 1e-2 * worst) cluster.push_back(z(k));
    }
    throw NearDefectiveSpectrum(res.condition, std::move(cluster));
  }
  Eigen::MatrixXcd L = V_inv.adjoint();

  if (!reduced) {
    res.eigenvalues = std::move(z);
    res.right = std::move(V);
    res.left = std::move(L);
  } else {
    // Lift reduced eigenpairs: |R> = U~|v>/z and |L> = U~^dag|u>/conj(z) with
    // v, u embedded in the full space. Valid for every ordering.
    Index usable = 0;
    while (usable < n && std::abs(z(usable)) >= options.zero_floor) ++usable;
    for (Index k = usable; k < n; ++k) res.discarded.push_back(z(k));

    Eigen::MatrixXcd v_full = Eigen::MatrixXcd::Zero(N, usable);
    Eigen::MatrixXcd u_full = Eigen::MatrixXcd::Zero(N, usable);
    for (Index r = 0; r < n; ++r) {
      v_full.row(keep[r]) = V.row(r).head(usable);
      u_full.row(keep[r]) = L.row(r).head(usable);
    }
    res.eigenvalues = z.head(usable);
    res.right = map.matrix * v_full;
    res.left = map.matrix.adjoint() * u_full;
    for (Index k = 0; k < usable; ++k) {
      res.right.col(k) /= z(k);
      res.left.col(k) /= std::conj(z(k));
    }
    res.order.resize(static_cast<std::size_t>(usable));
  }
  balance_pairs(res.right, res.left);
  return res;
}

ResonanceSet longest_lived(const ResonanceSet& res, int j) {
  if (j < 1 || j > res.size()) {
    throw std::invalid_argument("longest_lived: j=" + std::to_string(j) + " outside [1, " +
                                std::to_string(res.size()) + "]");
  }
  ResonanceSet out;
  out.N = res.N;
  out.R = res.R;
  out.ordering = res.ordering;
  out.eigenvalues = res.eigenvalues.head(j);
  out.right = res.right.leftCols(j);
  out.left = res.left.leftCols(j);
  out.order.assign(res.order.begin(), res.order.begin() + j);
  out.null_dimension = res.null_dimension;
  out.discarded = res.discarded;
  out.condition = res.condition;
  return out;
}

}  // namespace tribaker
