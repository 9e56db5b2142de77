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

#include "nide/gaussian_stats.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace nide {
namespace {

void check_sigma(double sigma) {
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    throw std::invalid_argument("sigma must be positive and finite");
  }
}

void check_z(double z) {
  if (!(z >= 0.0)) throw std::invalid_argument("z must be nonnegative");
}

}  // namespace

double erf_std(double x) { return std::erf(x); }

double erf_half(double x) { return 0.5 * std::erf(x); }

double std_normal_cdf(double x) {
  // erfc keeps full relative precision in the lower tail.
  return 0.5 * std::erfc(-x / std::numbers::sqrt2);
}

double abs_noise_cdf(double z, double sigma) {
  check_z(z);
  check_sigma(sigma);
  return std::erf(z / (sigma * std::numbers::sqrt2));
}

double abs_noise_sf(double z, double sigma) {
  check_z(z);
  check_sigma(sigma);
  return std::erfc(z / (sigma * std::numbers::sqrt2));
}

double shifted_abs_cdf(double z, double theta_bar, double sigma) {
  check_z(z);
  check_sigma(sigma);
  // phi(a) + phi(b) - 1 == 0.5 * (erf(a/sqrt2) + erf(b/sqrt2)); the erf form
  // avoids subtracting 1 from two numbers near 1.
  const double a = (z - theta_bar) / (sigma * std::numbers::sqrt2);
  const double b = (z + theta_bar) / (sigma * std::numbers::sqrt2);
  const double h = 0.5 * (std::erf(a) + std::erf(b));
  return h < 0.0 ? 0.0 : (h > 1.0 ? 1.0 : h);
}

}  // namespace nide
