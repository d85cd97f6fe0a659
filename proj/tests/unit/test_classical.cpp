// Copyright 2026 The tribaker Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cmath>
#include <set>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "tribaker/classical.hpp"

namespace tribaker {
namespace {

void expect_point(const TorusPoint& x, double q, double p, double tol = 1e-12) {
  EXPECT_LT(torus_distance(x, TorusPoint(q, p)), tol) << "(" << x.q() << ", " << x.p() << ")";
}

TEST(BakerStep, ThreeBranches) {
  expect_point(baker_step({0.1, 0.3}), 0.3, 0.1);
  expect_point(baker_step({0.5, 0.0}), 0.5, 1.0 / 3.0);
  expect_point(baker_step({0.9, 0.9}), 0.7, 29.0 / 30.0);
}

TEST(BakerStep, BranchEdgesAreHalfOpen) {
  expect_point(baker_step({1.0 / 3.0, 0.0}), 0.0, 1.0 / 3.0, 1e-15);
  expect_point(baker_step({0.0, 0.6}), 0.0, 0.2, 1e-15);
}

TEST(EvolveWeighted, Examples) {
  EXPECT_DOUBLE_EQ(evolve_weighted({0.1, 0.1}, 1, ReflectivityConfig(0.5)).weight, 1.0);
  EXPECT_DOUBLE_EQ(evolve_weighted({0.5, 0.5}, 1, ReflectivityConfig(0.5)).weight, 0.5);
  EXPECT_DOUBLE_EQ(evolve_weighted({0.5, 0.5}, 3, ReflectivityConfig(0.0)).weight, 0.0);
}

TEST(EvolveWeighted, WeightCountsOpeningVisits) {
  oracle::UnitSampler u(3);
  for (int trial = 0; trial < 100; ++trial) {
    const auto traj = evolve_weighted({u(), u()}, 12, ReflectivityConfig(0.3));
    ASSERT_EQ(traj.points.size(), 13u);
    int visits = 0;
    for (std::size_t k = 0; k + 1 < traj.points.size(); ++k) {
      visits += ReflectivityConfig::in_opening(traj.points[k]) ? 1 : 0;
      EXPECT_EQ(traj.points[k + 1], baker_step(traj.points[k]));
    }
    EXPECT_NEAR(traj.weight, std::pow(0.3, visits), 1e-15);
  }
}

TEST(Reflectivity, RejectsOutOfRange) {
  EXPECT_THROW(ReflectivityConfig(1.5), std::invalid_argument);
  EXPECT_THROW(ReflectivityConfig(-0.1), std::invalid_argument);
  EXPECT_FALSE(ReflectivityConfig::in_opening({1.0 / 3.0, 0.2}));
}

TEST(PeriodicOrbits, PeriodOne) {
  const auto orbits = periodic_orbits(1);
  ASSERT_EQ(orbits.size(), 3u);
  EXPECT_EQ(orbits[0].word, "0");
  EXPECT_EQ(orbits[1].word, "1");
  EXPECT_EQ(orbits[2].word, "2");
  expect_point(orbits[0].points[0], 0.0, 0.0);
  expect_point(orbits[1].points[0], 0.5, 0.5);
  expect_point(orbits[2].points[0], 0.0, 0.0);  // 0.222..._3 = 1
  for (const auto& o : orbits) expect_point(baker_step(o.points[0]), o.points[0].q(), o.points[0].p());
}

TEST(PeriodicOrbits, PeriodTwo) {
  const auto orbits = periodic_orbits(2);
  ASSERT_EQ(orbits.size(), 3u);
  EXPECT_EQ(orbits[0].word, "01");
  EXPECT_EQ(orbits[1].word, "02");
  EXPECT_EQ(orbits[2].word, "12");
  expect_point(orbits[0].points[0], 1.0 / 8.0, 3.0 / 8.0);
  expect_point(orbits[0].points[1], 3.0 / 8.0, 1.0 / 8.0);
  expect_point(baker_step(orbits[0].points[0]), 3.0 / 8.0, 1.0 / 8.0);
  expect_point(baker_step(orbits[0].points[1]), 1.0 / 8.0, 3.0 / 8.0);
}

TEST(PeriodicOrbits, EveryPointIsPeriodic) {
  for (int T = 1; T <= kMaxOrbitPeriod; ++T) {
    for (const auto& orbit : periodic_orbits(T)) {
      ASSERT_EQ(orbit.points.size(), static_cast<std::size_t>(T));
      for (std::size_t k = 0; k < orbit.points.size(); ++k) {
        TorusPoint x = orbit.points[k];
        for (int s = 0; s < T; ++s) x = baker_step(x);
        EXPECT_LT(torus_distance(x, orbit.points[k]), 1e-12) << orbit.word;
        EXPECT_LT(torus_distance(baker_step(orbit.points[k]), orbit.points[(k + 1) % T]), 1e-12);
      }
    }
  }
}

long long pow3(int T) {
  long long v = 1;
  for (int i = 0; i < T; ++i) v *= 3;
  return v;
}

TEST(PeriodicOrbits, MoebiusCount) {
  std::vector<long long> count(kMaxOrbitPeriod + 1, 0);
  for (int T = 1; T <= kMaxOrbitPeriod; ++T) {
    long long expected = pow3(T);
    for (int d = 1; d < T; ++d) {
      if (T % d == 0) expected -= d * count[d];
    }
    expected /= T;
    count[T] = static_cast<long long>(periodic_orbits(T).size());
    EXPECT_EQ(count[T], expected) << "T=" << T;
  }
}

// Brute force: every fixed point of B^T lies on the lattice k/(3^T - 1); scan
// the whole lattice and compare with the symbolic orbits of all divisors.
TEST(PeriodicOrbits, MatchBruteForceFixedPoints) {
  for (int T = 1; T <= 6; ++T) {
    const long long M = pow3(T) - 1;
    std::set<std::pair<long long, long long>> brute;
    for (long long k = 0; k < M; ++k) {
      for (long long l = 0; l < M; ++l) {
        const TorusPoint x0(static_cast<double>(k) / M, static_cast<double>(l) / M);
        TorusPoint x = x0;
        for (int s = 0; s < T; ++s) x = baker_step(x);
        if (torus_distance(x, x0) < 1e-9) brute.emplace(k, l);
      }
    }
    std::set<std::pair<long long, long long>> symbolic;
    for (int d = 1; d <= T; ++d) {
      if (T % d != 0) continue;
      for (const auto& orbit : periodic_orbits(d)) {
        for (const auto& x : orbit.points) {
          symbolic.emplace(std::llround(x.q() * M) % M, std::llround(x.p() * M) % M);
        }
      }
    }
    EXPECT_EQ(brute, symbolic) << "T=" << T;
  }
}

TEST(PeriodicOrbits, RejectsPeriodOutsideRange) {
  EXPECT_THROW(periodic_orbits(0), std::invalid_argument);
  EXPECT_THROW(periodic_orbits(9), std::invalid_argument);
}

// Each 300 x 300 target cell receives exactly the images of 9 of the
// 900 x 900 sub-cell centers.
TEST(BakerStep, AreaPreservingOnGrid) {
  const int n = 300;
  const int fine = 3 * n;
  std::vector<int> count(static_cast<std::size_t>(n) * n, 0);
  for (int ip = 0; ip < fine; ++ip) {
    for (int iq = 0; iq < fine; ++iq) {
      const auto y = baker_step({(iq + 0.5) / fine, (ip + 0.5) / fine});
      const auto cq = static_cast<std::size_t>(y.q() * n);
      const auto cp = static_cast<std::size_t>(y.p() * n);
      ++count[cp * n + cq];
    }
  }
  const auto exact = std::count(count.begin(), count.end(), 9);
  EXPECT_GE(static_cast<double>(exact), 0.99 * n * n);
}

// One sample per cell cannot certify a bijection: the map stretches q by 3 and
// contracts p by 3, so cell centers land on a third of the target columns.
TEST(BakerStep, CellCentersCoverOneThirdOfTargetCells) {
  const int n = 300;
  std::set<long long> hit;
  for (int ip = 0; ip < n; ++ip) {
    for (int iq = 0; iq < n; ++iq) {
      const auto y = baker_step({(iq + 0.5) / n, (ip + 0.5) / n});
      hit.insert(static_cast<long long>(y.p() * n) * n + static_cast<long long>(y.q() * n));
    }
  }
  EXPECT_EQ(hit.size(), static_cast<std::size_t>(n * n / 3));
}

// Base-3 digits of q shift left; the leading digit is prepended to p.
TEST(BakerStep, SymbolicConjugacy) {
  oracle::UnitSampler u(5);
  for (int trial = 0; trial < 100; ++trial) {
    TorusPoint x(u(), u());
    for (int s = 0; s < 10; ++s) {
      const int digit = static_cast<int>(std::floor(3.0 * x.q()));
      const double q_shift = 3.0 * x.q() - digit;
      const double p_prepend = (digit + x.p()) / 3.0;
      const auto y = baker_step(x);
      ASSERT_NEAR(y.q(), q_shift, 1e-9);
      ASSERT_NEAR(y.p(), p_prepend, 1e-9);
      x = y;
    }
  }
}

}  // namespace
}  // namespace tribaker
