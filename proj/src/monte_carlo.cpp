// Copyright 2026 The NIDe Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "nide/monte_carlo.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <string>

#include "nide/bench.hpp"
#include "nide/gaussian_stats.hpp"
#include "nide/noise_model.hpp"
#include "nide/signals.hpp"
#include "nide/signature.hpp"
#include "nide/wavelet.hpp"

namespace nide {
namespace {

// Running mean/variance in run order (Welford).
struct Accumulator {
  std::size_t count = 0;
  double mean = 0.0;
  double m2 = 0.0;

  void add(double x) {
    ++count;
    const double delta = x - mean;
    mean += delta / static_cast<double>(count);
    m2 += delta * (x - mean);
  }
  double variance() const { return count > 1 ? m2 / static_cast<double>(count - 1) : 0.0; }
  double standard_error() const { return std::sqrt(variance() / static_cast<double>(count)); }
};

double signature_value(SignatureKind kind, double z, double v) {
  if (kind == SignatureKind::kIndicator) return std::abs(v) <= z ? 1.0 : 0.0;
  return std::exp(-v * v / (2.0 * z * z));
}

// G_E(z) and G_var(z) of one N(0, sigma^2) sample.
std::pair<double, double> signature_moments(SignatureKind kind, double z, double sigma) {
  if (kind == SignatureKind::kIndicator) {
    const double f = abs_noise_cdf(z, sigma);
    return {f, f * abs_noise_sf(z, sigma)};
  }
  // E exp(-V^2 / (2 s^2)) = s / sqrt(s^2 + sigma^2); the square uses s = z/sqrt2.
  const double mean = z / std::sqrt(z * z + sigma * sigma);
  const double second = z / std::sqrt(z * z + 2.0 * sigma * sigma);
  return {mean, second - mean * mean};
}

// Fraction of |samples| (sorted ascending) that are <= z.
double sorted_fraction(const std::vector<double>& sorted_abs, double z) {
  const auto it = std::upper_bound(sorted_abs.begin(), sorted_abs.end(), z);
  return static_cast<double>(it - sorted_abs.begin()) / static_cast<double>(sorted_abs.size());
}

std::vector<double> sorted_abs(std::vector<double> v) {
  for (double& x : v) x = std::abs(x);
  std::sort(v.begin(), v.end());
  return v;
}

McPoint finish_point(double z, const Accumulator& acc, double mean, double variance,
                     const McParams& p) {
  McPoint pt;
  pt.z = z;
  pt.mc_mean = acc.mean;
  pt.analytic_mean = mean;
  const double se = acc.standard_error();
  pt.mean_zscore = se > 0.0 ? (acc.mean - mean) / se : (acc.mean == mean ? 0.0 : INFINITY);
  pt.mc_variance = acc.variance();
  pt.analytic_variance = variance;
  const bool mean_ok = std::abs(pt.mean_zscore) <= p.mean_zscore_limit;
  const bool var_ok = variance > 0.0
                          ? std::abs(pt.mc_variance - variance) <= p.variance_rel_tol * variance
                          : pt.mc_variance == 0.0;
  pt.passed = mean_ok && var_ok;
  return pt;
}

McReport single_z_signature(SignatureKind kind, const McParams& p, std::size_t runs,
                            std::uint64_t seed) {
  const NoiseSpec white{WhiteNoise{}, p.sigma};
  Accumulator acc;
  for (std::size_t r = 0; r < runs; ++r) {
    const std::vector<double> v = gen_noise(white, p.n, trial_seed(seed, r));
    double sum = 0.0;
    for (double x : v) sum += signature_value(kind, p.z, x);
    acc.add(sum / static_cast<double>(p.n));
  }
  const auto [g_mean, g_var] = signature_moments(kind, p.z, p.sigma);
  McReport rep;
  rep.points.push_back(finish_point(p.z, acc, g_mean, g_var / static_cast<double>(p.n), p));
  return rep;
}

McReport noisy_data(const McParams& p, std::size_t runs, std::uint64_t seed) {
  const TestSignal blocks = gen_signal(SignalName::kBlocks, p.n);
  const std::vector<double> theta_bar = dwt_forward(blocks.samples, 5).flatten();
  const NoiseSpec white{WhiteNoise{}, p.sigma};
  Accumulator acc;
  for (std::size_t r = 0; r < runs; ++r) {
    const std::vector<double> v = gen_noise(white, p.n, trial_seed(seed, r));
    std::size_t inside = 0;
    for (std::size_t i = 0; i < p.n; ++i) inside += std::abs(theta_bar[i] + v[i]) <= p.z;
    acc.add(static_cast<double>(inside) / static_cast<double>(p.n));
  }
  const double grid[] = {p.z};
  const NoisyCurveStats stats = expected_noisy_curve(grid, theta_bar, p.sigma);
  McReport rep;
  rep.points.push_back(finish_point(p.z, acc, stats.mean[0], stats.variance[0], p));
  return rep;
}

McReport colored_bound(const McParams& p, std::size_t runs, std::uint64_t seed) {
  const NoiseSpec spec{Ar1Noise{p.ar1}, p.sigma};
  const CorrelationProfile profile = theoretical_profile(spec, p.n - 1);
  std::vector<double> grid(p.grid_points);
  for (std::size_t k = 0; k < grid.size(); ++k) {
    grid[k] = p.grid_max_sigmas * p.sigma * static_cast<double>(k + 1) / static_cast<double>(grid.size());
  }
  std::vector<Accumulator> acc(grid.size());
  for (std::size_t r = 0; r < runs; ++r) {
    const auto s = sorted_abs(gen_noise(spec, p.n, trial_seed(seed, r)));
    for (std::size_t k = 0; k < grid.size(); ++k) acc[k].add(sorted_fraction(s, grid[k]));
  }
  McReport rep;
  for (std::size_t k = 0; k < grid.size(); ++k) {
    McPoint pt = finish_point(grid[k], acc[k], abs_noise_cdf(grid[k], p.sigma),
                              colored_variance_bound(grid[k], p.sigma, profile, p.n), p);
    pt.passed = pt.mc_variance <= pt.analytic_variance;
    rep.points.push_back(pt);
  }
  return rep;
}

McReport coverage(const McParams& p, std::size_t runs, std::uint64_t seed) {
  const NoiseSpec white{WhiteNoise{}, p.sigma};
  std::vector<double> grid(p.grid_points);
  for (std::size_t k = 0; k < grid.size(); ++k) {
    grid[k] = grid.size() == 1 ? 0.0
                               : p.grid_max_sigmas * p.sigma * static_cast<double>(k) /
                                     static_cast<double>(grid.size() - 1);
  }
  const ConfidenceBand band = white_band(grid, p.sigma, p.n, p.lambda);
  std::vector<Accumulator> acc(grid.size());
  std::vector<std::size_t> inside(grid.size(), 0);
  for (std::size_t r = 0; r < runs; ++r) {
    const auto s = sorted_abs(gen_noise(white, p.n, trial_seed(seed, r)));
    for (std::size_t k = 0; k < grid.size(); ++k) {
      const double g = sorted_fraction(s, grid[k]);
      acc[k].add(g);
      inside[k] += band.lower[k] <= g && g <= band.upper[k];
    }
  }
  McReport rep;
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const double f = band.center[k];
    McPoint pt = finish_point(grid[k], acc[k], f,
                              f * abs_noise_sf(grid[k], p.sigma) / static_cast<double>(p.n), p);
    pt.coverage = static_cast<double>(inside[k]) / static_cast<double>(runs);
    pt.passed = pt.coverage >= p.coverage_floor;
    rep.points.push_back(pt);
  }
  return rep;
}

}  // namespace

std::string_view to_string(McFormula f) {
  switch (f) {
    case McFormula::kIidSignature: return "appendixA";
    case McFormula::kSortingSignature: return "appendixB";
    case McFormula::kNoisyData: return "appendixC";
    case McFormula::kColoredBound: return "appendixD";
    case McFormula::kCoverage: return "coverage";
  }
  return "unknown";
}

McFormula parse_mc_formula(std::string_view text) {
  for (McFormula f : {McFormula::kIidSignature, McFormula::kSortingSignature,
                      McFormula::kNoisyData, McFormula::kColoredBound, McFormula::kCoverage}) {
    if (text == to_string(f)) return f;
  }
  throw std::invalid_argument("unknown Monte Carlo formula '" + std::string(text) + "'");
}

McReport mc_validate(McFormula formula, const McParams& params, std::size_t runs,
                     std::uint64_t seed) {
  if (runs < 2) throw std::invalid_argument("mc_validate needs at least two runs");
  if (params.n < 1 || !(params.sigma > 0.0) || !(params.z > 0.0)) {
    throw std::invalid_argument("mc_validate: n, sigma and z must be positive");
  }
  if (params.grid_points < 1) throw std::invalid_argument("mc_validate: empty z grid");
  McReport rep;
  switch (formula) {
    case McFormula::kIidSignature: rep = single_z_signature(params.signature, params, runs, seed); break;
    case McFormula::kSortingSignature:
      rep = single_z_signature(SignatureKind::kIndicator, params, runs, seed);
      break;
    case McFormula::kNoisyData: rep = noisy_data(params, runs, seed); break;
    case McFormula::kColoredBound: rep = colored_bound(params, runs, seed); break;
    case McFormula::kCoverage: rep = coverage(params, runs, seed); break;
  }
  rep.formula = formula;
  rep.runs = runs;
  rep.failures = static_cast<std::size_t>(
      std::count_if(rep.points.begin(), rep.points.end(), [](const McPoint& p) { return !p.passed; }));
  rep.passed = formula == McFormula::kColoredBound ? rep.failures <= params.allowed_violations
                                                   : rep.failures == 0;
  return rep;
}

void write_mc_csv(std::ostream& out, const McReport& report) {
  out << "z,mc_mean,analytic_mean,mean_zscore,mc_variance,analytic_variance,coverage,passed\n";
  char line[256];
  for (const auto& p : report.points) {
    std::snprintf(line, sizeof line, "%.6g,%.6g,%.6g,%.6g,%.6g,%.6g,%.6g,%d\n", p.z, p.mc_mean,
                  p.analytic_mean, p.mean_zscore, p.mc_variance, p.analytic_variance, p.coverage,
                  p.passed ? 1 : 0);
    out << line;
  }
}

}  // namespace nide
