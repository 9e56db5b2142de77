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

#ifndef NIDE_NOISE_MODEL_HPP_
#define NIDE_NOISE_MODEL_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "nide/signature.hpp"

namespace nide {

struct WhiteNoise {};
// x[t] = a x[t-1] + e[t], |a| < 1.
struct Ar1Noise {
  double a = 0.0;
};
// x[t] = sum_k taps[k] e[t-k].
struct MaNoise {
  std::vector<double> taps;
};

// Zero-mean stationary Gaussian noise with marginal standard deviation sigma.
struct NoiseSpec {
  std::variant<WhiteNoise, Ar1Noise, MaNoise> kind;
  double sigma = 1.0;

  bool is_white() const { return std::holds_alternative<WhiteNoise>(kind); }
  // Throws std::invalid_argument on |a| >= 1, empty or all-zero taps, or
  // nonpositive sigma.
  void validate() const;
  // "white", "ar1:<a>" or "ma:<t0>,<t1>,..." (the form `parse` accepts).
  std::string label() const;
  static NoiseSpec parse(std::string_view text, double sigma = 1.0);
};

// Deterministic per seed. AR and MA outputs are scaled so that the
// stationary marginal variance is sigma^2; AR(1) starts in its stationary
// distribution.
std::vector<double> gen_noise(const NoiseSpec& spec, std::size_t n, std::uint64_t seed);

CorrelationProfile theoretical_profile(const NoiseSpec& spec, std::size_t max_lag);

// Returns noise * s with 10 log10(|signal|^2 / |noise * s|^2) == snr_db.
std::vector<double> calibrate_noise_to_snr(std::span<const double> signal,
                                           std::span<const double> noise, double snr_db);

// MAD / 0.6745 over the given (finest-scale detail) coefficients.
double estimate_sigma_mad(std::span<const double> finest_detail);

// Biased sample autocorrelation normalized by lag 0, clamped to [-1, 1].
CorrelationProfile estimate_profile(std::span<const double> noise_like, std::size_t max_lag);

// Median of a copy of the data; even lengths average the two central values.
double median(std::span<const double> values);

}  // namespace nide

#endif  // NIDE_NOISE_MODEL_HPP_
