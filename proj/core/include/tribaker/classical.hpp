// Copyright 2026 The tribaker Authors
// SPDX-License-Identifier: Apache-2.0
//
// Classical tribaker map with a partial opening on 1/3 < q < 2/3, plus a
// symbolic-dynamics enumeration of its periodic orbits.

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tribaker/torus.hpp"

namespace tribaker {

/// (q, p) -> (3q - a, (p + a)/3) with a = floor(3q).
TorusPoint baker_step(const TorusPoint& x);

struct ReflectivityConfig {
  double R = 1.0;

  explicit ReflectivityConfig(double reflectivity);

  /// Open interval; the endpoints 1/3 and 2/3 are not absorbed.
  static bool in_opening(const TorusPoint& x) noexcept;
};

struct WeightedTrajectory {
  std::vector<TorusPoint> points;  // steps + 1 entries, starting at x0
  double weight = 1.0;             // R^(opening visits among points[0 .. n-2])
};

WeightedTrajectory evolve_weighted(const TorusPoint& x0, std::size_t steps,
                                   const ReflectivityConfig& cfg);

struct PeriodicOrbit {
  std::string word;                // lexicographically smallest rotation, digits '0'..'2'
  std::vector<TorusPoint> points;  // points[k+1] = baker_step(points[k])
};

inline constexpr int kMaxOrbitPeriod = 8;

/// All prime periodic orbits of exact period `period` in [1, 8], one entry per
/// cyclic class of ternary words.
std::vector<PeriodicOrbit> periodic_orbits(int period);

}  // namespace tribaker
