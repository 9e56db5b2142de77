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

#ifndef NIDE_WAVELET_HPP_
#define NIDE_WAVELET_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "nide/signature.hpp"

namespace nide {

// Multilevel orthonormal Haar coefficients of a dyadic-length signal.
//
// detail[0] is the finest band (length N/2), detail[levels-1] the coarsest
// (length N/2^levels); approx has the same length as the coarsest detail.
// The canonical flat order is finest detail first, approximation last.
struct CoefficientSet {
  std::vector<std::vector<double>> detail;
  std::vector<double> approx;
  std::size_t original_length = 0;

  int levels() const { return static_cast<int>(detail.size()); }

  // Throws std::invalid_argument if band lengths are inconsistent.
  void validate() const;

  std::vector<double> flatten() const;
  // All detail coefficients, finest first.
  std::vector<double> flatten_details() const;
  static CoefficientSet unflatten(std::span<const double> flat, std::size_t original_length,
                                  int levels);

  double energy() const;
};

bool is_dyadic(std::size_t n);

// Throws std::invalid_argument for non-dyadic lengths or levels outside
// [1, log2(N)].
CoefficientSet dwt_forward(std::span<const double> signal, int levels);
std::vector<double> dwt_inverse(const CoefficientSet& coeffs);

// Second-order statistics of the Haar detail band at `level` (1 = finest)
// when the input is stationary noise with unit variance and normalized
// autocorrelation `input`. variance_ratio is var(detail)/var(input);
// profile is the autocorrelation across positions within the band, kept up
// to `max_lag` lags or until it falls below the truncation cutoff.
struct BandNoiseStats {
  double variance_ratio = 1.0;
  CorrelationProfile profile;
};
BandNoiseStats haar_detail_noise(const CorrelationProfile& input, int level,
                                 std::size_t max_lag);
// Same for the approximation band after `level` analysis steps.
BandNoiseStats haar_approx_noise(const CorrelationProfile& input, int level,
                                 std::size_t max_lag);

}  // namespace nide

#endif  // NIDE_WAVELET_HPP_
