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

#include "nide/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "nide/noise_model.hpp"
#include "nide/wavelet.hpp"

namespace nide {
namespace {

void check_sigma(double sigma) {
  if (!(sigma >= 0.0) || !std::isfinite(sigma)) throw std::invalid_argument("sigma must be >= 0");
}

double mean_square(std::span<const double> band) {
  double acc = 0.0;
  for (double c : band) acc += c * c;
  return acc / static_cast<double>(band.size());
}

}  // namespace

std::string_view to_string(Method method) {
  switch (method) {
    case Method::kNide: return "nide";
    case Method::kVisu: return "visu";
    case Method::kSure: return "sure";
    case Method::kBayes: return "bayes";
  }
  return "unknown";
}

Method parse_method(std::string_view name) {
  if (name == "nide") return Method::kNide;
  if (name == "visu") return Method::kVisu;
  if (name == "sure") return Method::kSure;
  if (name == "bayes") return Method::kBayes;
  throw std::invalid_argument("unknown method '" + std::string(name) + "'");
}

double visu_threshold(std::size_t n, double sigma) {
  check_sigma(sigma);
  if (n < 1) throw std::invalid_argument("visu_threshold: n must be >= 1");
  return sigma * std::sqrt(2.0 * std::log(static_cast<double>(n)));
}

double sure_risk(std::span<const double> band, double sigma, double t) {
  if (!(sigma > 0.0)) throw std::invalid_argument("sure_risk: sigma must be > 0");
  double risk = static_cast<double>(band.size());
  for (double c : band) {
    const double x = std::abs(c) / sigma;
    if (x <= t) {
      risk += x * x - 2.0;
    } else {
      risk += t * t;
    }
  }
  return risk;
}

double sure_min_threshold(std::span<const double> band, double sigma) {
  if (band.empty()) throw std::invalid_argument("sure: empty band");
  if (!(sigma > 0.0)) throw std::invalid_argument("sure: sigma must be > 0");
  std::vector<double> x(band.size());
  std::transform(band.begin(), band.end(), x.begin(),
                 [sigma](double c) { return (c / sigma) * (c / sigma); });
  std::sort(x.begin(), x.end());
  // With squares sorted, the risk at t = sqrt(x[k]) is
  // n - 2(k+1) + prefix(k) + (n-k-1) x[k]; ties only lower it further, so
  // scanning ranks and breaking ties by the last index is exact.
  const double n = static_cast<double>(x.size());
  double best_risk = n;  // t = 0
  double best_t2 = 0.0;
  double prefix = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    prefix += x[k];
    if (k + 1 < x.size() && x[k + 1] == x[k]) continue;
    const double kk = static_cast<double>(k + 1);
    const double risk = n - 2.0 * kk + prefix + (n - kk) * x[k];
    if (risk < best_risk) {
      best_risk = risk;
      best_t2 = x[k];
    }
  }
  return sigma * std::sqrt(best_t2);
}

double sure_threshold(std::span<const double> band, double sigma) {
  if (band.empty()) throw std::invalid_argument("sure: empty band");
  check_sigma(sigma);
  if (sigma == 0.0) return 0.0;
  const double n = static_cast<double>(band.size());
  const double universal = visu_threshold(band.size(), sigma);
  const double sparsity = mean_square(band) / (sigma * sigma) - 1.0;
  const double critical = std::pow(std::log2(n), 1.5) / std::sqrt(n);
  if (sparsity <= critical) return universal;
  return std::min(sure_min_threshold(band, sigma), universal);
}

double bayes_threshold(std::span<const double> band, double sigma) {
  if (band.empty()) throw std::invalid_argument("bayes: empty band");
  check_sigma(sigma);
  const double signal_var = mean_square(band) - sigma * sigma;
  if (!(signal_var > 0.0)) {
    double m = 0.0;
    for (double c : band) m = std::max(m, std::abs(c));
    return m;
  }
  return sigma * sigma / std::sqrt(signal_var);
}

DenoiseResult denoise_with(Method method, std::span<const double> observed,
                           const DenoiseConfig& config) {
  if (method == Method::kNide) return denoise(observed, config);
  config.validate();
  CoefficientSet coeffs = dwt_forward(observed, config.levels);
  std::vector<std::vector<double>*> bands;
  for (auto& d : coeffs.detail) bands.push_back(&d);
  if (config.scope == ThresholdScope::kAllCoefficients) bands.push_back(&coeffs.approx);

  const double sigma = config.known_sigma ? *config.known_sigma
                                          : estimate_sigma_mad(coeffs.detail.front());
  DenoiseResult result;
  result.sigma_used = sigma;
  const double global = visu_threshold(observed.size(), sigma);
  for (auto* band : bands) {
    double t = global;
    if (method == Method::kSure) t = sure_threshold(*band, sigma);
    if (method == Method::kBayes) t = bayes_threshold(*band, sigma);
    for (double& c : *band) {
      const double mag = std::abs(c) - t;
      if (mag > 0.0) {
        c = std::copysign(mag, c);
        ++result.coefficients_kept;
      } else {
        c = 0.0;
      }
    }
    result.band_thresholds.push_back(t);
    result.band_sigmas.push_back(sigma);
  }
  result.threshold = result.band_thresholds.front();
  result.denoised = dwt_inverse(coeffs);
  return result;
}

}  // namespace nide
