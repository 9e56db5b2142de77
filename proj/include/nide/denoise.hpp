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

#ifndef NIDE_DENOISE_HPP_
#define NIDE_DENOISE_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "nide/signature.hpp"

namespace nide {

enum class ThresholdScope {
  kDetailsOnly,       // approximation band passes through untouched
  kAllCoefficients,
};

struct DenoiseConfig {
  int levels = 5;
  double lambda = 4.5;
  // Marginal standard deviation of the additive noise. When empty it is
  // estimated by MAD on the finest detail band.
  std::optional<double> known_sigma;
  // Normalized autocorrelation of the additive noise in the signal domain.
  // When set, the pooled coefficients are tested against the colored-noise
  // band built from this profile.
  std::optional<CorrelationProfile> colored;
  ThresholdScope scope = ThresholdScope::kDetailsOnly;

  // Throws std::invalid_argument unless levels >= 1, lambda in [0, 8] and
  // known_sigma (if any) is positive.
  void validate() const;
};

struct DenoiseResult {
  double threshold = 0.0;  // T*
  std::vector<double> denoised;
  std::size_t coefficients_kept = 0;
  ConfidenceBand band;
  double sigma_used = 0.0;  // marginal noise std in the signal domain
  // One entry per thresholded band, finest detail first, approximation last
  // when the scope includes it.
  std::vector<double> band_thresholds;
  std::vector<double> band_sigmas;
};

// theta -> sgn(theta) * max(|theta| - t, 0). Throws for t < 0.
std::vector<double> soft_threshold(std::span<const double> coeffs, double t);

struct BandInputs {
  double sigma = 1.0;
  double lambda = 4.5;
  std::size_t n = 0;  // 0: use the number of coefficients
  std::optional<CorrelationProfile> profile;
};

struct ThresholdSelection {
  double threshold = 0.0;
  // Band evaluated at the sorted absolute coefficients a_(1) <= ... <= a_(N).
  ConfidenceBand band;
  // Ranks (0-based) m whose point (a_(m+1), (m+1)/N) lies inside the band.
  std::vector<std::size_t> in_band;
};

// Sorts |coeffs|, builds the noise band on those values, and returns the
// largest a_(m) with L(a_(m)) <= m/N <= U(a_(m)); 0 when no point is inside.
ThresholdSelection evaluate_threshold(std::span<const double> coeffs, const BandInputs& inputs);
double select_threshold(std::span<const double> coeffs, const BandInputs& inputs);

// Forward Haar transform, noise level, band, T*, soft threshold, inverse.
DenoiseResult denoise(std::span<const double> observed, const DenoiseConfig& config);

}  // namespace nide

#endif  // NIDE_DENOISE_HPP_
