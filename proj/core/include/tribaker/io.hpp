// Copyright 2026 The tribaker Authors
// SPDX-License-Identifier: Apache-2.0
//
// File formats:
//   reports.csv    N,R,kind,i,j,sigma,mu,mu_over_N,excluded_fraction
//   averages.csv   N,R,kind,j,mu,mu_over_N
//   spectrum.csv   index,re,im,abs
//   *.tbev         16-byte header {"TBEV", u32 N, u32 count, u32 bytes-per-real},
//                  then right and left vectors as interleaved re/im float64,
//                  column by column, little endian
//   *.tbgrid       "TBGRID1\n", u64 header length, JSON header, n_q*n_p float64
//                  values (q fastest), excluded bitmap (LSB first)
//   *.png          8-bit RGB heatmap, low-to-high values mapped blue to red

#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "tribaker/measures.hpp"
#include "tribaker/repeller.hpp"
#include "tribaker/spectral.hpp"

namespace tribaker {

/// Shortest round-trip decimal form; "nan" for NaN.
std::string format_number(double x);

void write_reports_csv(const std::filesystem::path& path, const std::vector<MeasureReport>& rows);
void write_averages_csv(const std::filesystem::path& path, const std::vector<AverageReport>& rows);
void write_spectrum_csv(const std::filesystem::path& path, const ResonanceSet& res);

void write_eigenvector_blob(const std::filesystem::path& path, const ResonanceSet& res);

struct EigenvectorBlob {
  int N = 0;
  Eigen::MatrixXcd right;
  Eigen::MatrixXcd left;
};
EigenvectorBlob read_eigenvector_blob(const std::filesystem::path& path);

void write_grid_file(const std::filesystem::path& path, const PhaseDistribution& dist);
PhaseDistribution read_grid_file(const std::filesystem::path& path);

/// RGB for t in [0,1] on the blue-cyan-yellow-red ramp.
struct Rgb {
  unsigned char r, g, b;
};
Rgb heat_color(double t);

/// Heatmap with one pixel per grid cell (p increasing upwards). `markers` are
/// drawn as white circles of `marker_radius` in torus units.
void write_heatmap_png(const std::filesystem::path& path, const PhaseDistribution& dist,
                       const std::vector<TorusPoint>& markers = {}, double marker_radius = 0.0);

std::string sha256_file(const std::filesystem::path& path);

}  // namespace tribaker
