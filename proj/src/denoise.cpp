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

#include "nide/denoise.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "nide/noise_model.hpp"
#include "nide/wavelet.hpp"

namespace nide {
namespace {

// Below this fraction of the largest coefficient the noise estimate is
// treated as zero and the data passes through unchanged.
constexpr double kSigmaFloor = 1e-12;

double max_abs(std::span<const double> v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

void shrink_in_place(std::vector<double>& band, double t, std::size_t& kept) {
  for (double& c : band) {
    const double mag = std::abs(c) - t;
    if (mag > 0.0) {
      c = std::copysign(mag, c);
      ++kept;
    } else {
      c = 0.0;
    }
  }
}

}  // namespace

void DenoiseConfig::validate() const {
  if (levels < 1) throw std::invalid_argument("levels must be >= 1");
  if (!(lambda >= 0.0 && lambda <= 8.0)) throw std::invalid_argument("lambda must lie in [0, 8]");
  if (known_sigma && !(*known_sigma > 0.0 && std::isfinite(*known_sigma))) {
    throw std::invalid_argument("known sigma must be positive");
  }
}

std::vector<double> soft_threshold(std::span<const double> coeffs, double t) {
  if (!(t >= 0.0)) throw std::invalid_argument("soft_threshold: t must be >= 0");
  std::vector<double> out(coeffs.begin(), coeffs.end());
  std::size_t kept = 0;
  shrink_in_place(out, t, kept);
  return out;
}

ThresholdSelection evaluate_threshold(std::span<const double> coeffs, const BandInputs& inputs) {
  if (coeffs.empty()) throw std::invalid_argument("select_threshold: no coefficients");
  if (!(inputs.sigma > 0.0)) throw std::invalid_argument("select_threshold: sigma must be > 0");
  const SortedCurve curve = sorted_curve(coeffs);
  const std::size_t n = inputs.n == 0 ? coeffs.size() : inputs.n;

  ThresholdSelection sel;
  sel.band = inputs.profile ? colored_band(curve.z, inputs.sigma, *inputs.profile, n, inputs.lambda)
                            : white_band(curve.z, inputs.sigma, n, inputs.lambda);
  // Each sorted value is tested at the midpoint of its jump in the step
  // curve, (m - 1/2)/N. At the top step g reaches 1 exactly where the band
  // collapses onto 1, so the step top would always count as inside.
  const double count = static_cast<double>(curve.z.size());
  for (std::size_t m = 0; m < curve.z.size(); ++m) {
    const double g = (static_cast<double>(m) + 0.5) / count;
    if (sel.band.lower[m] <= g && g <= sel.band.upper[m]) sel.in_band.push_back(m);
  }
  // Last in-band point: beyond it the sorted data never returns to the band.
  sel.threshold = sel.in_band.empty() ? 0.0 : curve.z[sel.in_band.back()];
  return sel;
}

double select_threshold(std::span<const double> coeffs, const BandInputs& inputs) {
  return evaluate_threshold(coeffs, inputs).threshold;
}

DenoiseResult denoise(std::span<const double> observed, const DenoiseConfig& config) {
  config.validate();
  CoefficientSet coeffs = dwt_forward(observed, config.levels);
  const bool with_approx = config.scope == ThresholdScope::kAllCoefficients;

  std::vector<std::vector<double>*> bands;
  for (auto& d : coeffs.detail) bands.push_back(&d);
  if (with_approx) bands.push_back(&coeffs.approx);

  double scope_max = 0.0;
  for (const auto* b : bands) scope_max = std::max(scope_max, max_abs(*b));

  DenoiseResult result;
  const double finest_sigma =
      config.known_sigma ? 0.0 : estimate_sigma_mad(coeffs.detail.front());
  if (!config.known_sigma && finest_sigma <= kSigmaFloor * scope_max) {
    result.denoised = dwt_inverse(coeffs);
    result.sigma_used = finest_sigma;
    for (const auto* b : bands) result.coefficients_kept += b->size();
    result.band_thresholds.assign(bands.size(), 0.0);
    result.band_sigmas.assign(bands.size(), finest_sigma);
    return result;
  }

  if (!config.colored) {
    const double sigma = config.known_sigma.value_or(finest_sigma);
    std::vector<double> pooled;
    for (const auto* b : bands) pooled.insert(pooled.end(), b->begin(), b->end());
    ThresholdSelection sel =
        evaluate_threshold(pooled, BandInputs{sigma, config.lambda, 0, std::nullopt});
    for (auto* b : bands) shrink_in_place(*b, sel.threshold, result.coefficients_kept);
    result.threshold = sel.threshold;
    result.band = std::move(sel.band);
    result.sigma_used = sigma;
    result.band_thresholds.assign(bands.size(), sel.threshold);
    result.band_sigmas.assign(bands.size(), sigma);
    result.denoised = dwt_inverse(coeffs);
    return result;
  }

  // Colored noise: one band over the pooled coefficients, built from the
  // time-domain correlation profile. MAD on the finest band sees the noise
  // through the Haar difference filter, so it is rescaled to the input
  // variance with that filter's variance ratio.
  const CorrelationProfile& input = *config.colored;
  const double finest_ratio =
      haar_detail_noise(input, 1, coeffs.detail.front().size() - 1).variance_ratio;
  const double signal_sigma =
      config.known_sigma ? *config.known_sigma : finest_sigma / std::sqrt(finest_ratio);
  std::vector<double> pooled;
  for (const auto* b : bands) pooled.insert(pooled.end(), b->begin(), b->end());
  ThresholdSelection sel =
      evaluate_threshold(pooled, BandInputs{signal_sigma, config.lambda, 0, input});
  for (auto* b : bands) shrink_in_place(*b, sel.threshold, result.coefficients_kept);
  result.threshold = sel.threshold;
  result.band = std::move(sel.band);
  result.band_thresholds.assign(bands.size(), sel.threshold);
  result.band_sigmas.assign(bands.size(), signal_sigma);
  result.sigma_used = signal_sigma;
  result.denoised = dwt_inverse(coeffs);
  return result;
}

}  // namespace nide
