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

#include "nide/signature.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "nide/gaussian_stats.hpp"

namespace nide {
namespace {

double clamp01(double x) { return std::clamp(x, 0.0, 1.0); }

void check_band_args(double sigma, std::size_t n, double lambda) {
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    throw std::invalid_argument("band sigma must be positive and finite");
  }
  if (n == 0) throw std::invalid_argument("band length n must be >= 1");
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
    throw std::invalid_argument("lambda must be nonnegative and finite");
  }
}

void check_grid(std::span<const double> z_grid) {
  for (std::size_t i = 0; i < z_grid.size(); ++i) {
    if (!(z_grid[i] >= 0.0)) throw std::invalid_argument("z grid must be nonnegative");
    if (i > 0 && z_grid[i] < z_grid[i - 1]) {
      throw std::invalid_argument("z grid must be ascending");
    }
  }
}

// F(a) F(b) - F(z)^2 with a = sqrt2 z / sqrt(1+rho), b = sqrt2 z / sqrt(1-rho),
// expanded in survival functions so the upper tail does not cancel.
double pair_excess(double z, double rho, double sigma) {
  const double s = abs_noise_sf(z, sigma);
  const double root2z = std::numbers::sqrt2 * z;
  const double sa = (1.0 + rho <= 0.0) ? 0.0 : abs_noise_sf(root2z / std::sqrt(1.0 + rho), sigma);
  const double sb = (1.0 - rho <= 0.0) ? 0.0 : abs_noise_sf(root2z / std::sqrt(1.0 - rho), sigma);
  return 2.0 * s - s * s - sa - sb + sa * sb;
}

ConfidenceBand assemble(std::span<const double> z_grid, double sigma, std::size_t n,
                        double lambda, auto&& variance_at) {
  ConfidenceBand band;
  band.lambda = lambda;
  band.n = n;
  band.confidence = lambda_to_confidence(lambda);
  band.z.assign(z_grid.begin(), z_grid.end());
  band.lower.resize(z_grid.size());
  band.center.resize(z_grid.size());
  band.upper.resize(z_grid.size());
  for (std::size_t i = 0; i < z_grid.size(); ++i) {
    const double f = abs_noise_cdf(z_grid[i], sigma);
    const double half_width = lambda * std::sqrt(std::max(variance_at(z_grid[i]), 0.0));
    band.center[i] = f;
    band.lower[i] = clamp01(f - half_width);
    band.upper[i] = clamp01(f + half_width);
  }
  return band;
}

}  // namespace

CorrelationProfile::CorrelationProfile() : rho_{1.0} {}

CorrelationProfile::CorrelationProfile(std::vector<double> rho) : rho_(std::move(rho)) {
  if (rho_.empty()) throw std::invalid_argument("correlation profile is empty");
  if (rho_[0] != 1.0) throw std::invalid_argument("correlation profile must have rho[0] == 1");
  for (double r : rho_) {
    if (!std::isfinite(r) || std::abs(r) > 1.0) {
      throw std::invalid_argument("correlation profile entries must lie in [-1, 1]");
    }
  }
}

bool CorrelationProfile::is_white() const {
  return std::all_of(rho_.begin() + 1, rho_.end(),
                     [](double r) { return std::abs(r) < kCorrelationCutoff; });
}

double empirical_signature(double z, std::span<const double> samples) {
  if (samples.empty()) throw std::invalid_argument("empirical_signature: no samples");
  const auto m = std::count_if(samples.begin(), samples.end(),
                               [z](double v) { return std::abs(v) <= z; });
  return static_cast<double>(m) / static_cast<double>(samples.size());
}

SortedCurve sorted_curve(std::span<const double> samples) {
  if (samples.empty()) throw std::invalid_argument("sorted_curve: no samples");
  SortedCurve curve;
  curve.z.reserve(samples.size());
  for (double v : samples) curve.z.push_back(std::abs(v));
  std::sort(curve.z.begin(), curve.z.end());
  const double n = static_cast<double>(samples.size());
  curve.g.resize(samples.size());
  for (std::size_t m = 0; m < samples.size(); ++m) {
    curve.g[m] = static_cast<double>(m + 1) / n;
  }
  return curve;
}

ConfidenceBand white_band(std::span<const double> z_grid, double sigma, std::size_t n,
                          double lambda) {
  check_band_args(sigma, n, lambda);
  check_grid(z_grid);
  const double inv_n = 1.0 / static_cast<double>(n);
  return assemble(z_grid, sigma, n, lambda, [&](double z) {
    return abs_noise_cdf(z, sigma) * abs_noise_sf(z, sigma) * inv_n;
  });
}

double lambda_to_confidence(double lambda) {
  if (!(lambda >= 0.0)) throw std::invalid_argument("lambda must be nonnegative");
  return erf_std(lambda / std::numbers::sqrt2);
}

double confidence_to_lambda(double p) {
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("confidence must lie in (0, 1)");
  double lo = 0.0;
  double hi = 40.0;
  while (hi - lo > 1e-15 * std::max(1.0, hi)) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    (lambda_to_confidence(mid) < p ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

NoisyCurveStats expected_noisy_curve(std::span<const double> z_grid,
                                     std::span<const double> theta_bars, double sigma) {
  if (!(sigma > 0.0)) throw std::invalid_argument("sigma must be positive");
  if (theta_bars.empty()) throw std::invalid_argument("expected_noisy_curve: no coefficients");
  check_grid(z_grid);
  const double n = static_cast<double>(theta_bars.size());
  NoisyCurveStats stats;
  stats.mean.resize(z_grid.size());
  stats.variance.resize(z_grid.size());
  for (std::size_t k = 0; k < z_grid.size(); ++k) {
    double sum_h = 0.0;
    double sum_var = 0.0;
    for (double theta : theta_bars) {
      const double h = shifted_abs_cdf(z_grid[k], theta, sigma);
      sum_h += h;
      sum_var += h * (1.0 - h);
    }
    stats.mean[k] = sum_h / n;
    stats.variance[k] = sum_var / (n * n);
  }
  return stats;
}

double colored_variance_bound(double z, double sigma, const CorrelationProfile& profile,
                              std::size_t n) {
  if (n == 0) throw std::invalid_argument("n must be >= 1");
  const double f = abs_noise_cdf(z, sigma);
  const double nd = static_cast<double>(n);
  double pair_sum = 0.0;
  const std::size_t max_lag = std::min(profile.size(), n);
  for (std::size_t k = 1; k < max_lag; ++k) {
    const double rho = profile.at(k);
    if (std::abs(rho) < kCorrelationCutoff) continue;
    // Lag k occurs for 2(n-k) ordered pairs (i, j), i != j.
    pair_sum += 2.0 * (nd - static_cast<double>(k)) * pair_excess(z, rho, sigma);
  }
  return f * abs_noise_sf(z, sigma) / nd + pair_sum / (nd * nd);
}

ConfidenceBand colored_band(std::span<const double> z_grid, double sigma,
                            const CorrelationProfile& profile, std::size_t n, double lambda) {
  check_band_args(sigma, n, lambda);
  check_grid(z_grid);
  return assemble(z_grid, sigma, n, lambda, [&](double z) {
    return colored_variance_bound(z, sigma, profile, n);
  });
}

double colored_noisy_covariance_bound(double z, double theta_i, double theta_j, double rho,
                                      double sigma) {
  if (!(std::abs(rho) < 1.0)) throw std::invalid_argument("|rho| must be < 1");
  const double plus = std::sqrt(1.0 + rho);
  const double minus = std::sqrt(1.0 - rho);
  const double root2z = std::numbers::sqrt2 * z;
  const double joint =
      shifted_abs_cdf(root2z / plus, (theta_i + theta_j) / (std::numbers::sqrt2 * plus), sigma) *
      shifted_abs_cdf(root2z / minus, (theta_i - theta_j) / (std::numbers::sqrt2 * minus), sigma);
  return joint - shifted_abs_cdf(z, theta_i, sigma) * shifted_abs_cdf(z, theta_j, sigma);
}

void write_band_csv(std::ostream& out, const ConfidenceBand& band) {
  out << "z,lower,center,upper\n";
  char line[128];
  for (std::size_t i = 0; i < band.size(); ++i) {
    std::snprintf(line, sizeof line, "%.10g,%.10g,%.10g,%.10g\n", band.z[i], band.lower[i],
                  band.center[i], band.upper[i]);
    out << line;
  }
}

}  // namespace nide
