// Copyright 2026 The tribaker Authors
// SPDX-License-Identifier: Apache-2.0

#include "tribaker/pipeline.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

#include <Eigen/Core>

#include "json.hpp"
#include "tribaker/classical.hpp"
#include "tribaker/errors.hpp"
#include "tribaker/io.hpp"
#include "tribaker/quantum_map.hpp"
#include "tribaker/spectral.hpp"

namespace tribaker {

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {
constexpr const char* kVersion = "0.1.0";
}

RunConfig desk_profile() { return RunConfig{}; }

RunConfig paper_profile() {
  RunConfig c;
  c.profile = "paper";
  c.sweep.N_list = {480, 960, 1968, 3936};
  c.sweep.grid_q = c.sweep.grid_p = 500;
  return c;
}

RunConfig profile_by_name(const std::string& name) {
  if (name == "desk") return desk_profile();
  if (name == "paper") return paper_profile();
  throw ConfigError({"unknown profile '" + name + "' (expected desk or paper)"});
}

std::string config_to_json(const RunConfig& config) {
  const auto& s = config.sweep;
  json kinds = json::array();
  for (auto k : s.kinds) kinds.push_back(to_string(k));
  const json j = {
      {"profile", config.profile},
      {"out_dir", config.out_dir.string()},
      {"images", config.images},
      {"sweep",
       {{"N", s.N_list},
        {"R", s.R_list},
        {"subset", s.subset},
        {"states", s.states},
        {"grid", {s.grid_q, s.grid_p}},
        {"kinds", kinds},
        {"ordering", to_string(s.ordering)},
        {"samples", s.samples},
        {"bins", s.bins},
        {"w_max", s.w_max},
        {"workers", s.workers}}},
  };
  return j.dump(2);
}

RunConfig config_from_json(const std::string& text) {
  try {
    const json j = json::parse(text);
    RunConfig c;
    c.profile = j.at("profile").get<std::string>();
    c.out_dir = j.at("out_dir").get<std::string>();
    c.images = j.at("images").get<bool>();
    const auto& s = j.at("sweep");
    c.sweep.N_list = s.at("N").get<std::vector<int>>();
    c.sweep.R_list = s.at("R").get<std::vector<double>>();
    c.sweep.subset = s.at("subset").get<int>();
    c.sweep.states = s.at("states").get<std::vector<int>>();
    c.sweep.grid_q = s.at("grid").at(0).get<int>();
    c.sweep.grid_p = s.at("grid").at(1).get<int>();
    c.sweep.kinds.clear();
    for (const auto& k : s.at("kinds")) c.sweep.kinds.push_back(parse_distribution_kind(k.get<std::string>()));
    c.sweep.ordering = parse_ordering(s.at("ordering").get<std::string>());
    c.sweep.samples = s.at("samples").get<std::size_t>();
    c.sweep.bins = s.at("bins").get<int>();
    c.sweep.w_max = s.at("w_max").get<double>();
    c.sweep.workers = s.at("workers").get<int>();
    return c;
  } catch (const json::exception& e) {
    throw ConfigError({std::string("malformed configuration JSON: ") + e.what()});
  }
}

namespace {

std::string cell_stem(const std::string& kind, int N, double R, int i) {
  std::string stem = kind + "_N" + std::to_string(N) + "_R" + format_number(R);
  if (i > 0) stem += "_i" + std::to_string(i);
  return stem;
}

}  // namespace

fs::path run_sweep(const RunConfig& config) {
  config.sweep.validate();
  const auto start = std::chrono::steady_clock::now();
  std::error_code ec;
  fs::create_directories(config.out_dir, ec);
  if (ec) throw IoError("cannot create output directory " + config.out_dir.string());

  const SweepResult result = measure_sweep(config.sweep);
  std::vector<fs::path> files{"reports.csv", "averages.csv"};
  write_reports_csv(config.out_dir / files[0], result.reports);
  write_averages_csv(config.out_dir / files[1], result.averages);

  json failures = json::array();
  std::set<std::pair<int, double>> failed_cells;
  for (const auto& r : result.reports) {
    if (!r.ok() && failed_cells.emplace(r.N, r.R).second) {
      failures.push_back({{"N", r.N}, {"R", r.R}, {"error", r.error}});
    }
  }

  if (config.images) {
    const PhaseGrid grid(config.sweep.grid_q, config.sweep.grid_p);
    for (int N : config.sweep.N_list) {
      for (double R : config.sweep.R_list) {
        if (failed_cells.contains({N, R})) continue;
        const RepellerFields fields(decompose(open_map(N, R, config.sweep.ordering)),
                                    config.sweep.subset, grid);
        for (const auto& dist : {fields.husimi_average(), fields.repeller()}) {
          const fs::path name = cell_stem(std::string(to_string(dist.kind)), N, R, 0) + ".png";
          write_heatmap_png(config.out_dir / name, dist);
          files.push_back(name);
        }
      }
    }
  }

  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  json listed = json::array();
  for (const auto& f : files) {
    listed.push_back({{"path", f.string()},
                      {"sha256", sha256_file(config.out_dir / f)},
                      {"bytes", fs::file_size(config.out_dir / f)}});
  }
  const json manifest = {
      {"tool", "tribaker"},
      {"version", kVersion},
      {"eigen", std::to_string(EIGEN_WORLD_VERSION) + "." + std::to_string(EIGEN_MAJOR_VERSION) + "." +
                    std::to_string(EIGEN_MINOR_VERSION)},
      {"config", json::parse(config_to_json(config))},
      {"files", listed},
      {"failures", failures},
      {"timings", {{"total_seconds", seconds}}},
  };
  std::ofstream out(config.out_dir / "manifest.json");
  out << manifest.dump(2) << '\n';
  if (!out) throw IoError("cannot write manifest");
  return config.out_dir;
}

std::vector<std::string> verify_manifest(const fs::path& dir) {
  std::ifstream in(dir / "manifest.json");
  if (!in) throw IoError("missing manifest in " + dir.string());
  std::stringstream ss;
  ss << in.rdbuf();
  std::vector<std::string> bad;
  const json manifest = json::parse(ss.str());
  for (const auto& f : manifest.at("files")) {
    const auto rel = f.at("path").get<std::string>();
    const fs::path p = dir / rel;
    if (!fs::exists(p) || sha256_file(p) != f.at("sha256").get<std::string>()) bad.push_back(rel);
  }
  return bad;
}

std::vector<TorusPoint> orbit_points(const std::vector<int>& periods) {
  std::vector<TorusPoint> pts;
  for (int T : periods) {
    for (const auto& orbit : periodic_orbits(T)) pts.insert(pts.end(), orbit.points.begin(), orbit.points.end());
  }
  return pts;
}

double coherent_width(int N) { return 1.0 / std::sqrt(2.0 * std::numbers::pi * N); }

RenderOutput render_distribution(const RenderConfig& config) {
  std::vector<std::string> problems;
  if (config.N < 3 || config.N % 3 != 0) problems.push_back("N must be a positive multiple of 3");
  if (!(config.R >= 0.0 && config.R <= 1.0)) problems.push_back("R must lie in [0,1]");
  if (config.subset < 1 || config.subset > config.N) problems.push_back("subset must lie in [1, N]");
  if (config.state < 1 || config.state > config.subset) problems.push_back("state must lie in [1, subset]");
  if (config.grid_q < 1 || config.grid_p < 1) problems.push_back("grid dimensions must be >= 1");
  for (int T : config.overlay_periods) {
    if (T < 1 || T > kMaxOrbitPeriod) problems.push_back("overlay period must lie in [1, 8]");
  }
  if (!problems.empty()) throw ConfigError(std::move(problems));

  const PhaseGrid grid(config.grid_q, config.grid_p);
  const RepellerFields fields(decompose(open_map(config.N, config.R, config.ordering)), config.subset, grid);

  RenderOutput out;
  const int i = config.state;
  switch (config.kind) {
    case DistributionKind::HusimiR: out.distribution = fields.husimi(i, Side::Right); break;
    case DistributionKind::HusimiL: out.distribution = fields.husimi(i, Side::Left); break;
    case DistributionKind::LR: out.distribution = fields.lr(i); break;
    case DistributionKind::HusimiAverage: out.distribution = fields.husimi_average(); break;
    case DistributionKind::Repeller: out.distribution = fields.repeller(); break;
    case DistributionKind::ScaledHusimi: out.distribution = fields.scaled_husimi(i); break;
    case DistributionKind::ScaledLR: out.distribution = fields.scaled_lr(i); break;
  }
  const bool per_state = config.kind != DistributionKind::HusimiAverage &&
                         config.kind != DistributionKind::Repeller;
  const std::string stem =
      cell_stem(std::string(to_string(config.kind)), config.N, config.R, per_state ? i : 0);
  out.grid_path = config.out_dir / (stem + ".tbgrid");
  out.image_path = config.out_dir / (stem + ".png");
  write_grid_file(out.grid_path, out.distribution);
  write_heatmap_png(out.image_path, out.distribution, orbit_points(config.overlay_periods),
                    coherent_width(config.N));
  return out;
}

}  // namespace tribaker
