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

#include "nide/noise_model.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <random>
#include <stdexcept>

namespace nide {
namespace {

constexpr double kMadToSigma = 0.6745;

double parse_double(std::string_view text) {
  double value = 0.0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw std::invalid_argument("not a number: '" + std::string(text) + "'");
  }
  return value;
}

std::string format_g(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::vector<double> standard_normals(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<double> out(n);
  for (double& x : out) x = normal(rng);
  return out;
}

}  // namespace

void NoiseSpec::validate() const {
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    throw std::invalid_argument("noise sigma must be positive");
  }
  if (const auto* ar = std::get_if<Ar1Noise>(&kind)) {
    if (!(std::abs(ar->a) < 1.0)) throw std::invalid_argument("AR(1) coefficient must satisfy |a| < 1");
  }
  if (const auto* ma = std::get_if<MaNoise>(&kind)) {
    const double energy =
        std::inner_product(ma->taps.begin(), ma->taps.end(), ma->taps.begin(), 0.0);
    if (ma->taps.empty() || !(energy > 0.0) || !std::isfinite(energy)) {
      throw std::invalid_argument("MA taps must be finite and not all zero");
    }
  }
}

std::string NoiseSpec::label() const {
  if (const auto* ar = std::get_if<Ar1Noise>(&kind)) return "ar1:" + format_g(ar->a);
  if (const auto* ma = std::get_if<MaNoise>(&kind)) {
    std::string s = "ma:";
    for (std::size_t i = 0; i < ma->taps.size(); ++i) {
      if (i > 0) s += ',';
      s += format_g(ma->taps[i]);
    }
    return s;
  }
  return "white";
}

NoiseSpec NoiseSpec::parse(std::string_view text, double sigma) {
  NoiseSpec spec;
  spec.sigma = sigma;
  if (text == "white") {
    spec.kind = WhiteNoise{};
  } else if (text.starts_with("ar1:")) {
    spec.kind = Ar1Noise{parse_double(text.substr(4))};
  } else if (text.starts_with("ma:")) {
    MaNoise ma;
    std::string_view rest = text.substr(3);
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      ma.taps.push_back(parse_double(rest.substr(0, comma)));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    spec.kind = std::move(ma);
  } else {
    throw std::invalid_argument("unknown noise kind '" + std::string(text) +
                                "' (expected white, ar1:<a> or ma:<taps>)");
  }
  spec.validate();
  return spec;
}

std::vector<double> gen_noise(const NoiseSpec& spec, std::size_t n, std::uint64_t seed) {
  spec.validate();
  if (n == 0) throw std::invalid_argument("gen_noise: n must be >= 1");
  if (const auto* ar = std::get_if<Ar1Noise>(&spec.kind)) {
    std::vector<double> x = standard_normals(n, seed);
    const double innovation = std::sqrt(1.0 - ar->a * ar->a);
    for (std::size_t t = 1; t < n; ++t) x[t] = ar->a * x[t - 1] + innovation * x[t];
    for (double& v : x) v *= spec.sigma;
    return x;
  }
  if (const auto* ma = std::get_if<MaNoise>(&spec.kind)) {
    const std::size_t q = ma->taps.size();
    const std::vector<double> e = standard_normals(n + q - 1, seed);
    const double norm =
        std::sqrt(std::inner_product(ma->taps.begin(), ma->taps.end(), ma->taps.begin(), 0.0));
    std::vector<double> x(n, 0.0);
    for (std::size_t t = 0; t < n; ++t) {
      double acc = 0.0;
      for (std::size_t k = 0; k < q; ++k) acc += ma->taps[k] * e[t + q - 1 - k];
      x[t] = spec.sigma * acc / norm;
    }
    return x;
  }
  std::vector<double> x = standard_normals(n, seed);
  for (double& v : x) v *= spec.sigma;
  return x;
}

CorrelationProfile theoretical_profile(const NoiseSpec& spec, std::size_t max_lag) {
  spec.validate();
  std::vector<double> rho(max_lag + 1, 0.0);
  rho[0] = 1.0;
  if (const auto* ar = std::get_if<Ar1Noise>(&spec.kind)) {
    for (std::size_t k = 1; k <= max_lag; ++k) rho[k] = rho[k - 1] * ar->a;
  } else if (const auto* ma = std::get_if<MaNoise>(&spec.kind)) {
    const auto& b = ma->taps;
    const double r0 = std::inner_product(b.begin(), b.end(), b.begin(), 0.0);
    for (std::size_t k = 1; k <= max_lag && k < b.size(); ++k) {
      double acc = 0.0;
      for (std::size_t i = 0; i + k < b.size(); ++i) acc += b[i] * b[i + k];
      rho[k] = std::clamp(acc / r0, -1.0, 1.0);
    }
  }
  return CorrelationProfile(std::move(rho));
}

std::vector<double> calibrate_noise_to_snr(std::span<const double> signal,
                                           std::span<const double> noise, double snr_db) {
  const double signal_energy = std::inner_product(signal.begin(), signal.end(), signal.begin(), 0.0);
  const double noise_energy = std::inner_product(noise.begin(), noise.end(), noise.begin(), 0.0);
  if (!(signal_energy > 0.0)) throw std::invalid_argument("calibrate: signal has zero energy");
  if (!(noise_energy > 0.0)) throw std::invalid_argument("calibrate: noise has zero energy");
  if (!std::isfinite(snr_db)) throw std::invalid_argument("calibrate: snr must be finite");
  const double target = signal_energy * std::pow(10.0, -snr_db / 10.0);
  const double scale = std::sqrt(target / noise_energy);
  std::vector<double> out(noise.begin(), noise.end());
  for (double& v : out) v *= scale;
  return out;
}

double median(std::span<const double> values) {
  if (values.empty()) throw std::invalid_argument("median of empty data");
  std::vector<double> v(values.begin(), values.end());
  const std::size_t mid = v.size() / 2;
  std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid), v.end());
  const double upper = v[mid];
  if (v.size() % 2 == 1) return upper;
  const double lower = *std::max_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid));
  return 0.5 * (lower + upper);
}

double estimate_sigma_mad(std::span<const double> finest_detail) {
  if (finest_detail.empty()) throw std::invalid_argument("MAD: empty coefficient band");
  std::vector<double> abs_values(finest_detail.size());
  std::transform(finest_detail.begin(), finest_detail.end(), abs_values.begin(),
                 [](double c) { return std::abs(c); });
  return median(abs_values) / kMadToSigma;
}

CorrelationProfile estimate_profile(std::span<const double> noise_like, std::size_t max_lag) {
  if (noise_like.empty()) throw std::invalid_argument("estimate_profile: empty input");
  const std::size_t n = noise_like.size();
  const double mean = std::accumulate(noise_like.begin(), noise_like.end(), 0.0) / static_cast<double>(n);
  auto autocov = [&](std::size_t k) {
    double acc = 0.0;
    for (std::size_t t = 0; t + k < n; ++t) acc += (noise_like[t] - mean) * (noise_like[t + k] - mean);
    return acc / static_cast<double>(n);
  };
  const double c0 = autocov(0);
  if (!(c0 > 0.0)) throw std::invalid_argument("estimate_profile: input has zero variance");
  std::vector<double> rho{1.0};
  for (std::size_t k = 1; k <= max_lag && k < n; ++k) {
    rho.push_back(std::clamp(autocov(k) / c0, -1.0, 1.0));
  }
  return CorrelationProfile(std::move(rho));
}

}  // namespace nide
