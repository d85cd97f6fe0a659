// Copyright 2026 The tribaker Authors
// SPDX-License-Identifier: Apache-2.0
//
// tribaker: open quantum tribaker resonances, phase-space distributions and
// localization measures from the command line.
//
// Exit codes: 0 success, 2 configuration error, 3 numerical diagnostic,
// 4 I/O error.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tribaker/classical.hpp"
#include "tribaker/errors.hpp"
#include "tribaker/io.hpp"
#include "tribaker/pipeline.hpp"
#include "tribaker/quantum_map.hpp"
#include "tribaker/spectral.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitIo = 4;

const std::map<std::string, std::string> kOrderings{{"UP", "UP"}, {"PU", "PU"}, {"sym", "sym"}};

struct SweepArgs {
  std::string profile = "desk";
  std::vector<int> N;
  std::vector<double> R;
  std::optional<int> subset;
  std::vector<int> states;
  std::optional<int> grid;
  std::optional<std::string> ordering;
  std::string kind = "lr";
  std::optional<std::string> out;
  bool images = false;
  int workers = 1;
};

int run_sweep_command(const SweepArgs& a) {
  tribaker::RunConfig cfg = tribaker::profile_by_name(a.profile);
  auto& s = cfg.sweep;
  if (!a.N.empty()) s.N_list = a.N;
  if (!a.R.empty()) s.R_list = a.R;
  if (a.subset) s.subset = *a.subset;
  if (!a.states.empty()) s.states = a.states;
  if (a.grid) s.grid_q = s.grid_p = *a.grid;
  if (a.ordering) s.ordering = tribaker::parse_ordering(*a.ordering);
  if (a.kind == "husimi") {
    s.kinds = {tribaker::DistributionKind::ScaledHusimi};
  } else if (a.kind == "lr") {
    s.kinds = {tribaker::DistributionKind::ScaledLR};
  } else {
    s.kinds = {tribaker::DistributionKind::ScaledHusimi, tribaker::DistributionKind::ScaledLR};
  }
  if (a.out) cfg.out_dir = *a.out;
  cfg.images = a.images;
  s.workers = a.workers;

  const auto dir = tribaker::run_sweep(cfg);
  std::cout << "wrote " << (dir / "reports.csv").string() << ", "
            << (dir / "averages.csv").string() << ", " << (dir / "manifest.json").string() << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Open quantum tribaker map: resonances, Husimi/LR distributions, localization measures"};
  app.require_subcommand(1);

  SweepArgs sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "Sigma and mu over N and R, written as CSV with a manifest");
  sweep_cmd->add_option("--profile", sweep.profile, "Parameter profile")
      ->check(CLI::IsMember({"desk", "paper"}));
  sweep_cmd->add_option("--n", sweep.N, "Hilbert-space dimensions (multiples of 3)");
  sweep_cmd->add_option("--reflectivity", sweep.R, "Reflectivities in [0,1]");
  sweep_cmd->add_option("--subset", sweep.subset, "Number of longest-lived resonances averaged");
  sweep_cmd->add_option("--state", sweep.states, "1-based resonance indices to measure");
  sweep_cmd->add_option("--grid", sweep.grid, "Grid points per side");
  sweep_cmd->add_option("--ordering", sweep.ordering, "Composition of U and P")
      ->check(CLI::IsMember(kOrderings));
  sweep_cmd->add_option("--kind", sweep.kind, "Scaled representation")
      ->check(CLI::IsMember({"husimi", "lr", "both"}));
  sweep_cmd->add_option("--out", sweep.out, "Output directory");
  sweep_cmd->add_flag("--images", sweep.images, "Also write heatmaps of the averages");
  sweep_cmd->add_option("--workers", sweep.workers, "Parallel sweep cells")->check(CLI::PositiveNumber);

  tribaker::RenderConfig render;
  std::string render_kind = "lr";
  std::string render_ordering = "UP";
  std::optional<int> render_grid;
  std::string render_out = "tribaker-out";
  auto* render_cmd = app.add_subcommand("render", "One phase-space distribution as .tbgrid and .png");
  render_cmd->add_option("--n", render.N, "Hilbert-space dimension")->capture_default_str();
  render_cmd->add_option("--reflectivity", render.R, "Reflectivity")->capture_default_str();
  render_cmd->add_option("--subset", render.subset, "Resonances in the average")->capture_default_str();
  render_cmd->add_option("--state", render.state, "1-based resonance index")->capture_default_str();
  render_cmd->add_option("--grid", render_grid, "Grid points per side");
  render_cmd->add_option("--ordering", render_ordering)->check(CLI::IsMember(kOrderings));
  render_cmd->add_option("--kind", render_kind, "husimi-right, husimi-left, lr, husimi-average, repeller, scaled-husimi, scaled-lr")
      ->capture_default_str();
  render_cmd->add_option("--overlay", render.overlay_periods, "Mark periodic orbits of these periods");
  render_cmd->add_option("--out", render_out, "Output directory")->capture_default_str();

  int spec_N = 48;
  double spec_R = 1.0;
  std::string spec_ordering = "UP";
  std::string spec_out = "tribaker-out";
  bool spec_vectors = false;
  auto* spectrum_cmd = app.add_subcommand("spectrum", "Eigenvalues (CSV) and optionally eigenvectors (.tbev)");
  spectrum_cmd->add_option("--n", spec_N)->capture_default_str();
  spectrum_cmd->add_option("--reflectivity", spec_R)->capture_default_str();
  spectrum_cmd->add_option("--ordering", spec_ordering)->check(CLI::IsMember(kOrderings));
  spectrum_cmd->add_option("--out", spec_out)->capture_default_str();
  spectrum_cmd->add_flag("--vectors", spec_vectors, "Write the biorthogonal eigenvectors");

  std::vector<int> orbit_periods{1, 2, 4};
  std::optional<std::string> orbit_out;
  auto* orbits_cmd = app.add_subcommand("orbits", "Periodic orbits of the classical map (CSV)");
  orbits_cmd->add_option("--period", orbit_periods, "Periods in [1, 8]")->capture_default_str();
  orbits_cmd->add_option("--out", orbit_out, "CSV file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (*sweep_cmd) return run_sweep_command(sweep);

    if (*render_cmd) {
      render.kind = tribaker::parse_distribution_kind(render_kind);
      render.ordering = tribaker::parse_ordering(render_ordering);
      if (render_grid) render.grid_q = render.grid_p = *render_grid;
      render.out_dir = render_out;
      const auto out = tribaker::render_distribution(render);
      std::cout << "wrote " << out.grid_path.string() << ", " << out.image_path.string() << '\n';
      return 0;
    }

    if (*spectrum_cmd) {
      const auto res = tribaker::decompose(
          tribaker::open_map(spec_N, spec_R, tribaker::parse_ordering(spec_ordering)));
      const std::filesystem::path dir = spec_out;
      const std::string stem = "spectrum_N" + std::to_string(spec_N) + "_R" + tribaker::format_number(spec_R);
      tribaker::write_spectrum_csv(dir / (stem + ".csv"), res);
      std::cout << "wrote " << (dir / (stem + ".csv")).string();
      if (spec_vectors) {
        tribaker::write_eigenvector_blob(dir / (stem + ".tbev"), res);
        std::cout << ", " << (dir / (stem + ".tbev")).string();
      }
      std::cout << '\n';
      if (res.null_dimension > 0) {
        std::cout << "annihilated subspace: " << res.null_dimension << " dimensions; "
                  << res.discarded.size() << " near-zero eigenvalues not paired\n";
      }
      return 0;
    }

    if (*orbits_cmd) {
      std::ofstream file;
      if (orbit_out) {
        file.open(*orbit_out);
        if (!file) throw tribaker::IoError("cannot open " + *orbit_out);
      }
      std::ostream& os = orbit_out ? file : std::cout;
      os << "period,word,point,q,p\n";
      for (int T : orbit_periods) {
        for (const auto& orbit : tribaker::periodic_orbits(T)) {
          for (std::size_t k = 0; k < orbit.points.size(); ++k) {
            os << T << ',' << orbit.word << ',' << k << ',' << tribaker::format_number(orbit.points[k].q())
               << ',' << tribaker::format_number(orbit.points[k].p()) << '\n';
          }
        }
      }
      return 0;
    }
  } catch (const tribaker::NumericalError& e) {
    std::cerr << "numerical diagnostic: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const tribaker::IoError& e) {
    std::cerr << "I/O error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "I/O error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << '\n';
    return kExitConfig;
  }
  return 0;
}
