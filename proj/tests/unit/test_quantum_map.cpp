// Copyright 2026 The tribaker Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstring>
#include <numbers>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "tribaker/quantum_map.hpp"
#include "tribaker/spectral.hpp"

namespace tribaker {
namespace {

double unitarity_defect(const Eigen::MatrixXcd& M) {
  const auto n = M.rows();
  return (M * M.adjoint() - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff();
}

TEST(FourierKernel, Examples) {
  const Eigen::MatrixXcd one = fourier_kernel(1, {0.0, 0.0});
  ASSERT_EQ(one.rows(), 1);
  EXPECT_LT(std::abs(one(0, 0) - 1.0), 1e-15);

  const Eigen::MatrixXcd g3 = fourier_kernel(3, {});
  const std::complex<double> expected =
      std::exp(std::complex<double>(0, -std::numbers::pi / 6)) / std::sqrt(3.0);
  EXPECT_LT(std::abs(g3(0, 0) - expected), 1e-15);
}

TEST(FourierKernel, EntriesMatchFormula) {
  const int N = 12;
  const BoundaryPhases ph{0.3, 0.7};
  const Eigen::MatrixXcd G = fourier_kernel(N, ph);
  for (int k = 0; k < N; ++k) {
    for (int j = 0; j < N; ++j) {
      const double angle = -2 * std::numbers::pi * (j + ph.chi_q) * (k + ph.chi_p) / N;
      EXPECT_LT(std::abs(G(k, j) - std::polar(1.0 / std::sqrt(N), angle)), 1e-13);
    }
  }
}

TEST(FourierKernel, Unitary) {
  for (int N : {1, 3, 7, 48, 192}) {
    EXPECT_LT(unitarity_defect(fourier_kernel(N, {})), 1e-12) << N;
    EXPECT_LT(unitarity_defect(fourier_kernel(N, {0.0, 0.0})), 1e-12) << N;
  }
}

TEST(ClosedMap, UnitaryForSmallDimensions) {
  for (int N : {3, 9, 27, 96}) EXPECT_LT(unitarity_defect(closed_map(N).matrix), 1e-12) << N;
}

TEST(ClosedMap, RejectsDimensionNotDivisibleByThree) {
  EXPECT_THROW(closed_map(10), std::invalid_argument);
  EXPECT_THROW(open_map(8, 0.5), std::invalid_argument);
}

TEST(ClosedMap, FixedPointCoherentStateReturnsToItself) {
  const int N = 9;
  const auto U = closed_map(N).matrix;
  const auto c0 = oracle::periodized_gaussian(0.5, 0.5, N);
  const Eigen::VectorXcd image = U * c0;
  const double self = std::norm(c0.dot(image));
  oracle::UnitSampler u(21);
  for (int trial = 0; trial < 20; ++trial) {
    const auto other = oracle::periodized_gaussian(u(), u(), N);
    EXPECT_GT(self, std::norm(other.dot(image)));
  }
}

TEST(ClosedMap, EigenvaluesOnUnitCircle) {
  const Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(closed_map(27).matrix, false);
  for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) {
    EXPECT_NEAR(std::abs(es.eigenvalues()(k)), 1.0, 1e-10);
  }
}

TEST(OpeningProjector, Examples) {
  const auto id = opening_projector(9, 1.0);
  EXPECT_EQ(id.diagonal(), Eigen::VectorXd::Ones(9));

  const auto zero = opening_projector(3, 0.0);
  EXPECT_EQ(zero.diagonal(), Eigen::Vector3d(1, 0, 1));

  const auto quarter = opening_projector(6, 0.25);
  Eigen::VectorXd expected(6);
  expected << 1, 1, 0.5, 0.5, 1, 1;
  EXPECT_EQ(quarter.diagonal(), expected);
}

TEST(OpeningProjector, RejectsInvalidReflectivity) {
  EXPECT_THROW(opening_projector(6, -0.1), std::invalid_argument);
  EXPECT_THROW(opening_projector(6, 1.1), std::invalid_argument);
  EXPECT_THROW(opening_projector(6, NAN), std::invalid_argument);
}

TEST(OpenMap, FullReflectivityIsClosedMap) {
  for (auto ord : {Ordering::UP, Ordering::PU, Ordering::Symmetric}) {
    EXPECT_EQ(open_map(27, 1.0, ord).matrix, closed_map(27).matrix);
  }
}

TEST(OpenMap, FullOpeningHasRankTwoThirds) {
  const Eigen::JacobiSVD<Eigen::MatrixXcd> svd(open_map(27, 0.0).matrix);
  const auto sv = svd.singularValues();
  EXPECT_EQ((sv.array() > 1e-12).count(), 18);
}

TEST(OpenMap, Contraction) {
  for (auto ord : {Ordering::UP, Ordering::PU, Ordering::Symmetric}) {
    const Eigen::JacobiSVD<Eigen::MatrixXcd> svd(open_map(27, 0.05, ord).matrix);
    EXPECT_LE(svd.singularValues().maxCoeff(), 1.0 + 1e-10);
    EXPECT_GE(svd.singularValues().minCoeff(), 0.0);
  }
}

TEST(OpenMap, OrderingsAreComposedAsNamed) {
  const int N = 12;
  const double R = 0.3;
  const Eigen::MatrixXcd U = closed_map(N).matrix;
  const Eigen::MatrixXcd P = opening_projector(N, R).toDenseMatrix().cast<std::complex<double>>();
  const Eigen::MatrixXcd S =
      opening_projector(N, R).diagonal().cwiseSqrt().asDiagonal().toDenseMatrix().cast<std::complex<double>>();
  EXPECT_LT((open_map(N, R, Ordering::UP).matrix - U * P).cwiseAbs().maxCoeff(), 1e-14);
  EXPECT_LT((open_map(N, R, Ordering::PU).matrix - P * U).cwiseAbs().maxCoeff(), 1e-14);
  EXPECT_LT((open_map(N, R, Ordering::Symmetric).matrix - S * U * S).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(OpenMap, CommutesWithParity) {
  for (int N : {27, 48, 81}) {
    const Eigen::MatrixXd flip = Eigen::MatrixXd::Identity(N, N).rowwise().reverse();
    const Eigen::MatrixXcd Pi = flip.cast<std::complex<double>>();
    for (double R : {1.0, 0.1, 0.05, 0.0}) {
      for (auto ord : {Ordering::UP, Ordering::PU, Ordering::Symmetric}) {
        const auto M = open_map(N, R, ord).matrix;
        EXPECT_LT((Pi * M * Pi - M).cwiseAbs().maxCoeff(), 1e-12) << "N=" << N << " R=" << R;
      }
    }
  }
}

TEST(OpenMap, TransposeIsFourierConjugate) {
  for (int N : {27, 48}) {
    const auto G = fourier_kernel(N, {});
    const auto U = closed_map(N).matrix;
    EXPECT_LT((G * U * G.adjoint() - U.transpose()).cwiseAbs().maxCoeff(), 1e-12);
  }
}

// A conjugation-symmetric spectrum has a real trace; this one does not.
TEST(OpenMap, SpectrumIsNotConjugationSymmetric) {
  for (int N : {27, 48, 81}) {
    for (double R : {1.0, 0.1}) {
      const auto res = decompose(open_map(N, R));
      double worst = 0;
      for (Eigen::Index k = 0; k < res.eigenvalues.size(); ++k) {
        double best = INFINITY;
        for (Eigen::Index m = 0; m < res.eigenvalues.size(); ++m) {
          best = std::min(best, std::abs(res.eigenvalues(m) - std::conj(res.eigenvalues(k))));
        }
        worst = std::max(worst, best);
      }
      EXPECT_GT(worst, 1e-2) << "N=" << N << " R=" << R;
      EXPECT_GT(std::abs(open_map(N, R).matrix.trace().imag()), 1e-2);
    }
  }
}

TEST(OpenMap, DeterminantModulus) {
  for (int N : {12, 27, 48}) {
    for (double R : {0.5, 0.1, 0.05}) {
      const double det = std::abs(Eigen::PartialPivLU<Eigen::MatrixXcd>(open_map(N, R).matrix).determinant());
      const double expected = std::pow(R, N / 6.0);
      EXPECT_NEAR(det / expected, 1.0, 1e-6) << "N=" << N << " R=" << R;
    }
  }
}

TEST(OpenMap, BitwiseDeterministic) {
  const auto a = open_map(48, 0.05).matrix;
  const auto b = open_map(48, 0.05).matrix;
  EXPECT_EQ(std::memcmp(a.data(), b.data(), sizeof(std::complex<double>) * a.size()), 0);
}

TEST(Ordering, ParseRoundTrip) {
  for (auto ord : {Ordering::UP, Ordering::PU, Ordering::Symmetric}) {
    EXPECT_EQ(parse_ordering(to_string(ord)), ord);
  }
  EXPECT_THROW(parse_ordering("UPU"), std::invalid_argument);
}

}  // namespace
}  // namespace tribaker
