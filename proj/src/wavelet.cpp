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

#include "nide/wavelet.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace nide {
namespace {

constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

int log2_exact(std::size_t n) {
  int k = 0;
  while ((std::size_t{1} << k) < n) ++k;
  return k;
}

// Autocovariance at coefficient lag m of a band produced by correlating a
// unit-variance stationary input with `filter` and decimating by its length.
double band_covariance(std::span<const double> filter_autocorr, std::size_t block,
                       const CorrelationProfile& input, std::size_t m) {
  // filter_autocorr[d + block - 1] holds A(d) for d in (-block, block).
  double c = 0.0;
  const auto base = static_cast<long long>(m * block);
  const auto half = static_cast<long long>(block) - 1;
  for (long long d = -half; d <= half; ++d) {
    const auto lag = static_cast<std::size_t>(std::llabs(base + d));
    c += filter_autocorr[static_cast<std::size_t>(d + half)] * input.at(lag);
  }
  return c;
}

BandNoiseStats band_noise(const std::vector<double>& filter, const CorrelationProfile& input,
                          std::size_t max_lag) {
  const std::size_t block = filter.size();
  std::vector<double> autocorr(2 * block - 1, 0.0);
  for (std::size_t s = 0; s < block; ++s) {
    for (std::size_t t = 0; t < block; ++t) {
      autocorr[s - t + block - 1] += filter[s] * filter[t];
    }
  }
  const double c0 = band_covariance(autocorr, block, input, 0);
  BandNoiseStats stats;
  stats.variance_ratio = c0;
  std::vector<double> rho{1.0};
  for (std::size_t m = 1; m <= max_lag; ++m) {
    // Past this lag every input correlation in the sum is zero.
    if (m * block >= input.size() + block) break;
    const double r = std::clamp(band_covariance(autocorr, block, input, m) / c0, -1.0, 1.0);
    rho.push_back(r);
  }
  while (rho.size() > 1 && std::abs(rho.back()) < kCorrelationCutoff) rho.pop_back();
  stats.profile = CorrelationProfile(std::move(rho));
  return stats;
}

}  // namespace

bool is_dyadic(std::size_t n) { return n > 0 && (n & (n - 1)) == 0; }

void CoefficientSet::validate() const {
  if (!is_dyadic(original_length)) {
    throw std::invalid_argument("coefficient set: original length is not a power of two");
  }
  if (detail.empty()) throw std::invalid_argument("coefficient set: no detail bands");
  std::size_t expected = original_length;
  for (const auto& band : detail) {
    expected /= 2;
    if (band.size() != expected || expected == 0) {
      throw std::invalid_argument("coefficient set: inconsistent detail band lengths");
    }
  }
  if (approx.size() != expected) {
    throw std::invalid_argument("coefficient set: approximation band has wrong length");
  }
}

std::vector<double> CoefficientSet::flatten() const {
  std::vector<double> flat = flatten_details();
  flat.insert(flat.end(), approx.begin(), approx.end());
  return flat;
}

std::vector<double> CoefficientSet::flatten_details() const {
  std::vector<double> flat;
  flat.reserve(original_length);
  for (const auto& band : detail) flat.insert(flat.end(), band.begin(), band.end());
  return flat;
}

CoefficientSet CoefficientSet::unflatten(std::span<const double> flat,
                                         std::size_t original_length, int levels) {
  if (flat.size() != original_length) {
    throw std::invalid_argument("unflatten: flat length differs from original length");
  }
  CoefficientSet set;
  set.original_length = original_length;
  std::size_t offset = 0;
  std::size_t len = original_length;
  for (int j = 0; j < levels; ++j) {
    len /= 2;
    set.detail.emplace_back(flat.begin() + offset, flat.begin() + offset + len);
    offset += len;
  }
  set.approx.assign(flat.begin() + offset, flat.end());
  set.validate();
  return set;
}

double CoefficientSet::energy() const {
  double e = 0.0;
  for (const auto& band : detail) {
    for (double c : band) e += c * c;
  }
  for (double c : approx) e += c * c;
  return e;
}

CoefficientSet dwt_forward(std::span<const double> signal, int levels) {
  const std::size_t n = signal.size();
  if (!is_dyadic(n) || n < 2) {
    throw std::invalid_argument("dwt_forward: length " + std::to_string(n) +
                                " is not a power of two >= 2");
  }
  if (levels < 1 || levels > log2_exact(n)) {
    throw std::invalid_argument("dwt_forward: levels must lie in [1, log2(N)]");
  }
  CoefficientSet out;
  out.original_length = n;
  std::vector<double> approx(signal.begin(), signal.end());
  for (int j = 0; j < levels; ++j) {
    const std::size_t half = approx.size() / 2;
    std::vector<double> next(half);
    std::vector<double> detail(half);
    for (std::size_t i = 0; i < half; ++i) {
      const double a = approx[2 * i];
      const double b = approx[2 * i + 1];
      next[i] = (a + b) * kInvSqrt2;
      detail[i] = (a - b) * kInvSqrt2;
    }
    out.detail.push_back(std::move(detail));
    approx = std::move(next);
  }
  out.approx = std::move(approx);
  return out;
}

std::vector<double> dwt_inverse(const CoefficientSet& coeffs) {
  coeffs.validate();
  std::vector<double> approx = coeffs.approx;
  for (int j = coeffs.levels() - 1; j >= 0; --j) {
    const auto& detail = coeffs.detail[static_cast<std::size_t>(j)];
    std::vector<double> up(2 * approx.size());
    for (std::size_t i = 0; i < approx.size(); ++i) {
      up[2 * i] = (approx[i] + detail[i]) * kInvSqrt2;
      up[2 * i + 1] = (approx[i] - detail[i]) * kInvSqrt2;
    }
    approx = std::move(up);
  }
  return approx;
}

BandNoiseStats haar_detail_noise(const CorrelationProfile& input, int level,
                                 std::size_t max_lag) {
  if (level < 1 || level > 30) throw std::invalid_argument("haar_detail_noise: bad level");
  const std::size_t block = std::size_t{1} << level;
  const double amp = std::pow(2.0, -0.5 * level);
  std::vector<double> filter(block, amp);
  for (std::size_t i = block / 2; i < block; ++i) filter[i] = -amp;
  return band_noise(filter, input, max_lag);
}

BandNoiseStats haar_approx_noise(const CorrelationProfile& input, int level,
                                 std::size_t max_lag) {
  if (level < 1 || level > 30) throw std::invalid_argument("haar_approx_noise: bad level");
  const std::size_t block = std::size_t{1} << level;
  return band_noise(std::vector<double>(block, std::pow(2.0, -0.5 * level)), input, max_lag);
}

}  // namespace nide
