// Copyright 2026 The tribaker Authors
// SPDX-License-Identifier: Apache-2.0
//
// End-to-end runs: measure sweeps written to an artifact directory with a
// hashed manifest, and single-distribution renders.

#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "tribaker/measures.hpp"
#include "tribaker/repeller.hpp"

namespace tribaker {

struct RunConfig {
  SweepConfig sweep;
  std::string profile = "desk";
  std::filesystem::path out_dir = "tribaker-out";
  bool images = false;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

/// N in {48, 96, 192}, 128 x 128 grid.
RunConfig desk_profile();
/// N up to 3936 and 500 x 500 grids; hours of runtime.
RunConfig paper_profile();
RunConfig profile_by_name(const std::string& name);

std::string config_to_json(const RunConfig& config);
RunConfig config_from_json(const std::string& text);

/// Writes reports.csv, averages.csv, optional heatmaps and manifest.json into
/// config.out_dir. Returns the output directory.
std::filesystem::path run_sweep(const RunConfig& config);

/// Re-hashes every file listed in the manifest; returns the mismatching paths.
std::vector<std::string> verify_manifest(const std::filesystem::path& dir);

struct RenderConfig {
  int N = 192;
  double R = 0.05;
  Ordering ordering = Ordering::UP;
  int subset = 32;
  int state = 1;
  DistributionKind kind = DistributionKind::LR;
  int grid_q = 128;
  int grid_p = 128;
  std::vector<int> overlay_periods;  // periodic orbits marked on the image
  std::filesystem::path out_dir = "tribaker-out";
};

struct RenderOutput {
  PhaseDistribution distribution;
  std::filesystem::path grid_path;
  std::filesystem::path image_path;
};

/// Computes one distribution, writes its .tbgrid and .png.
RenderOutput render_distribution(const RenderConfig& config);

/// Points of every periodic orbit of the given periods.
std::vector<TorusPoint> orbit_points(const std::vector<int>& periods);

/// Coherent-state width 1/sqrt(2 pi N).
double coherent_width(int N);

}  // namespace tribaker
