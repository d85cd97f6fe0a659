// Copyright 2026 The tribaker Authors
// SPDX-License-Identifier: Apache-2.0

#include "tribaker/measures.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "tribaker/errors.hpp"
#include "tribaker/spectral.hpp"

namespace tribaker {

IntensityHistogram histogram_from_samples(std::span<const double> samples, int bins, double w_max) {
  if (bins < 1) throw std::invalid_argument("histogram: bins must be positive");
  if (!(w_max > 0.0)) throw std::invalid_argument("histogram: w_max must be positive");
  IntensityHistogram h;
  h.bin_edges.resize(static_cast<std::size_t>(bins) + 1);
  for (int b = 0; b <= bins; ++b) h.bin_edges[b] = w_max * b / bins;
  std::vector<std::size_t> counts(static_cast<std::size_t>(bins), 0);
  for (double w : samples) {
    if (!std::isfinite(w) || w < 0.0) throw std::invalid_argument("histogram: invalid sample");
    if (w > w_max) {
      ++h.overflow_count;
      continue;
    }
    auto b = static_cast<std::size_t>(w / w_max * bins);
    counts[std::min(b, counts.size() - 1)]++;
    ++h.sample_count;
  }
  h.density.assign(counts.size(), 0.0);
  if (h.sample_count > 0) {
    for (std::size_t b = 0; b < counts.size(); ++b) {
      h.density[b] = static_cast<double>(counts[b]) / (h.sample_count * h.bin_width(b));
    }
  }
  return h;
}

IntensityHistogram intensity_histogram(const PhaseDistribution& field, std::size_t samples,
                                       int bins, double w_max) {
  if (samples < 100) throw std::invalid_argument("intensity_histogram: samples must be >= 100");
  if (bins < 10) throw std::invalid_argument("intensity_histogram: bins must be >= 10");
  const std::size_t n = field.values.size();
  const std::size_t count = std::min(samples, n);
  std::vector<double> w;
  w.reserve(count);
  std::size_t excluded = 0;
  for (std::size_t k = 0; k < count; ++k) {
    const std::size_t idx = k * n / count;
    if (field.is_excluded(idx)) {
      ++excluded;
    } else {
      w.push_back(field.values[idx]);
    }
  }
  if (2 * excluded > count) {
    throw std::invalid_argument("intensity_histogram: more than half of the samples are excluded");
  }
  auto h = histogram_from_samples(w, bins, w_max);
  h.excluded_count = excluded;
  return h;
}

double sigma_measure(const IntensityHistogram& hist) {
  double sigma = 0.0;
  for (std::size_t b = 0; b < hist.bins(); ++b) {
    sigma += std::abs(hist.density[b] - std::exp(-hist.bin_center(b))) * hist.bin_width(b);
  }
  return sigma;
}

namespace {

double l1_over_l2(const PhaseDistribution& field) {
  const double l2 = quadrature(field, 2.0);
  if (!(l2 > 0.0)) throw std::invalid_argument("norm_ratio: field is identically zero");
  return quadrature(field, 1.0) / l2;
}

}  // namespace

double reference_norm_ratio(const PhaseGrid& grid, int N, const BoundaryPhases& phases) {
  const auto ref = coherent_state(kReferenceCenter, N, phases);
  return l1_over_l2(husimi(ref.coefficients, Side::Right, grid, phases));
}

double norm_ratio(const PhaseDistribution& field, double reference_ratio) {
  const double r = l1_over_l2(field) / reference_ratio;
  return r * r;
}

double norm_ratio(const PhaseDistribution& field, int N) {
  return norm_ratio(field, reference_norm_ratio(field.grid, N));
}

std::vector<std::string> SweepConfig::violations() const {
  std::vector<std::string> v;
  auto add = [&](const std::string& s) { v.push_back(s); };
  if (N_list.empty()) add("N list is empty");
  for (int N : N_list) {
    if (N < 3 || N % 3 != 0) add("N=" + std::to_string(N) + " is not a positive multiple of 3");
  }
  if (R_list.empty()) add("R list is empty");
  for (double R : R_list) {
    if (!(R >= 0.0 && R <= 1.0)) {
      std::ostringstream os;
      os << "R=" << R << " outside [0,1]";
      add(os.str());
    }
  }
  if (subset < 1) add("subset size must be >= 1");
  if (!N_list.empty()) {
    const int min_N = *std::min_element(N_list.begin(), N_list.end());
    if (subset > min_N) {
      add("subset size " + std::to_string(subset) + " exceeds smallest N=" + std::to_string(min_N));
    }
  }
  if (states.empty()) add("state list is empty");
  for (int i : states) {
    if (i < 1 || i > subset) {
      add("state index " + std::to_string(i) + " outside [1, subset=" + std::to_string(subset) + "]");
    }
  }
  if (grid_q < 1 || grid_p < 1) add("grid dimensions must be >= 1");
  if (kinds.empty()) add("representation list is empty");
  for (auto k : kinds) {
    if (k != DistributionKind::ScaledHusimi && k != DistributionKind::ScaledLR) {
      add("representation '" + std::string(to_string(k)) + "' is not a scaled distribution");
    }
  }
  if (samples < 100) add("samples must be >= 100");
  if (bins < 10) add("bins must be >= 10");
  if (!(w_max > 0.0)) add("w_max must be positive");
  if (workers < 1) add("workers must be >= 1");
  return v;
}

void SweepConfig::validate() const {
  auto v = violations();
  if (!v.empty()) throw ConfigError(std::move(v));
}

namespace {

struct CellResult {
  std::vector<MeasureReport> reports;
  std::vector<AverageReport> averages;
};

CellResult run_cell(const SweepConfig& cfg, int N, double R) {
  CellResult out;
  const PhaseGrid grid(cfg.grid_q, cfg.grid_p);
  auto base_report = [&](DistributionKind kind, int i) {
    MeasureReport r;
    r.N = N;
    r.R = R;
    r.kind = kind;
    r.i = i;
    r.j = cfg.subset;
    r.grid_q = cfg.grid_q;
    r.grid_p = cfg.grid_p;
    r.samples = cfg.samples;
    return r;
  };
  const DistributionKind average_kinds[] = {DistributionKind::HusimiAverage,
                                            DistributionKind::Repeller};
  auto fail_all = [&](const std::string& message) {
    constexpr double nan = std::numeric_limits<double>::quiet_NaN();
    for (auto kind : cfg.kinds) {
      for (int i : cfg.states) {
        auto r = base_report(kind, i);
        r.sigma = r.mu = r.mu_over_N = r.excluded_fraction = nan;
        r.error = message;
        out.reports.push_back(r);
      }
    }
    for (auto kind : average_kinds) {
      out.averages.push_back({N, R, kind, cfg.subset, nan, nan, message});
    }
  };

  try {
    const ResonanceSet res = decompose(open_map(N, R, cfg.ordering));
    const RepellerFields fields(res, cfg.subset, grid);
    const double reference = reference_norm_ratio(grid, N);

    for (const auto& avg : {fields.husimi_average(), fields.repeller()}) {
      const double mu = norm_ratio(avg, reference);
      out.averages.push_back({N, R, avg.kind, cfg.subset, mu, mu / N, {}});
    }
    for (auto kind : cfg.kinds) {
      for (int i : cfg.states) {
        auto r = base_report(kind, i);
        try {
          const auto field = kind == DistributionKind::ScaledLR ? fields.scaled_lr(i)
                                                                : fields.scaled_husimi(i);
          r.sigma = sigma_measure(intensity_histogram(field, cfg.samples, cfg.bins, cfg.w_max));
          r.mu = norm_ratio(field, reference);
          r.mu_over_N = r.mu / N;
          r.excluded_fraction =
              static_cast<double>(field.excluded_count()) / static_cast<double>(field.values.size());
        } catch (const std::exception& e) {
          constexpr double nan = std::numeric_limits<double>::quiet_NaN();
          r.sigma = r.mu = r.mu_over_N = r.excluded_fraction = nan;
          r.error = e.what();
        }
        out.reports.push_back(r);
      }
    }
  } catch (const std::exception& e) {
    out = {};
    fail_all(e.what());
  }
  return out;
}

}  // namespace

SweepResult measure_sweep(const SweepConfig& config) {
  config.validate();
  std::vector<std::pair<int, double>> cells;
  for (int N : config.N_list) {
    for (double R : config.R_list) cells.emplace_back(N, R);
  }
  std::vector<CellResult> results(cells.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t c = next++; c < cells.size(); c = next++) {
      results[c] = run_cell(config, cells[c].first, cells[c].second);
    }
  };
  const auto n_workers =
      std::min<std::size_t>(static_cast<std::size_t>(config.workers), cells.size());
  if (n_workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < n_workers; ++w) pool.emplace_back(worker);
  }

  SweepResult out;
  for (auto& r : results) {
    out.reports.insert(out.reports.end(), r.reports.begin(), r.reports.end());
    out.averages.insert(out.averages.end(), r.averages.begin(), r.averages.end());
  }
  return out;
}

}  // namespace tribaker
