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

#ifndef NIDE_BASELINES_HPP_
#define NIDE_BASELINES_HPP_

#include <cstddef>
#include <span>
#include <string_view>

#include "nide/denoise.hpp"

namespace nide {

enum class Method { kNide, kVisu, kSure, kBayes };

std::string_view to_string(Method method);
// Accepts "nide", "visu", "sure", "bayes".
Method parse_method(std::string_view name);

// Universal threshold sigma * sqrt(2 ln n).
double visu_threshold(std::size_t n, double sigma);

// Unbiased risk estimate of soft thresholding `band` at t, in units of
// sigma^2: n - 2 #{|x_i| <= t} + sum min(x_i^2, t^2) with x = band / sigma.
double sure_risk(std::span<const double> band, double sigma, double t);

// Minimizer of sure_risk over {0} and the sorted |band| values.
double sure_min_threshold(std::span<const double> band, double sigma);

// Hybrid SureShrink: the universal threshold when the band looks sparse
// (mean(x^2 - 1) <= log2(n)^1.5 / sqrt(n)), otherwise the SURE minimizer
// capped at the universal threshold.
double sure_threshold(std::span<const double> band, double sigma);

// sigma^2 / sigma_x with sigma_x = sqrt(max(mean(band^2) - sigma^2, 0));
// max|band| when sigma_x == 0.
double bayes_threshold(std::span<const double> band, double sigma);

// Same pipeline as `denoise` with a method-specific threshold: global for
// visu, per band for sure and bayes. kNide forwards to `denoise`.
DenoiseResult denoise_with(Method method, std::span<const double> observed,
                           const DenoiseConfig& config);

}  // namespace nide

#endif  // NIDE_BASELINES_HPP_
