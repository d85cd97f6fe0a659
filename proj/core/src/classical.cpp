// Copyright 2026 The tribaker Authors
// SPDX-License-Identifier: Apache-2.0

#include "tribaker/classical.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tribaker {

TorusPoint baker_step(const TorusPoint& x) {
  const double scaled = 3.0 * x.q();
  const double branch = std::min(std::floor(scaled), 2.0);
  return {scaled - branch, (x.p() + branch) / 3.0};
}

ReflectivityConfig::ReflectivityConfig(double reflectivity) : R(reflectivity) {
  if (!(reflectivity >= 0.0 && reflectivity <= 1.0)) {
    throw std::invalid_argument("ReflectivityConfig: R must lie in [0,1]");
  }
}

bool ReflectivityConfig::in_opening(const TorusPoint& x) noexcept {
  return x.q() > 1.0 / 3.0 && x.q() < 2.0 / 3.0;
}

WeightedTrajectory evolve_weighted(const TorusPoint& x0, std::size_t steps,
                                   const ReflectivityConfig& cfg) {
  WeightedTrajectory traj;
  traj.points.reserve(steps + 1);
  traj.points.push_back(x0);
  for (std::size_t s = 0; s < steps; ++s) {
    const TorusPoint& cur = traj.points.back();
    if (ReflectivityConfig::in_opening(cur)) traj.weight *= cfg.R;
    traj.points.push_back(baker_step(cur));
  }
  return traj;
}

namespace {

// Value of the digit string read as a base-3 integer.
long long ternary_value(const std::string& digits) {
  long long v = 0;
  for (char c : digits) v = 3 * v + (c - '0');
  return v;
}

bool is_primitive(const std::string& w) {
  const auto n = w.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d == 0 && std::equal(w.begin() + d, w.end(), w.begin())) return false;
  }
  return true;
}

std::string rotate_left(const std::string& w, std::size_t k) {
  return w.substr(k) + w.substr(0, k);
}

}  // namespace

std::vector<PeriodicOrbit> periodic_orbits(int period) {
  if (period < 1 || period > kMaxOrbitPeriod) {
    throw std::invalid_argument("periodic_orbits: period must lie in [1, 8]");
  }
  const auto T = static_cast<std::size_t>(period);
  long long words = 1;
  for (std::size_t i = 0; i < T; ++i) words *= 3;
  // q = 0.(a1..aT)... in base 3 equals value(a1..aT) / (3^T - 1).
  const double denom = static_cast<double>(words - 1);

  std::vector<PeriodicOrbit> orbits;
  std::string w(T, '0');
  for (long long code = 0; code < words; ++code) {
    long long c = code;
    for (std::size_t i = T; i-- > 0;) {
      w[i] = static_cast<char>('0' + c % 3);
      c /= 3;
    }
    if (!is_primitive(w)) continue;
    bool canonical = true;
    for (std::size_t k = 1; k < T && canonical; ++k) canonical = w <= rotate_left(w, k);
    if (!canonical) continue;

    PeriodicOrbit orbit{w, {}};
    for (std::size_t k = 0; k < T; ++k) {
      const std::string shifted = rotate_left(w, k);
      const std::string reversed(shifted.rbegin(), shifted.rend());
      const double q = ternary_value(shifted) / denom;
      const double p = ternary_value(reversed) / denom;
      orbit.points.emplace_back(q, p);
    }
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

}  // namespace tribaker
