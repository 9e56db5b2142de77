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

#ifndef NIDE_GAUSSIAN_STATS_HPP_
#define NIDE_GAUSSIAN_STATS_HPP_

// Scalar Gaussian primitives used by the noise-signature machinery.
//
// Two error-function conventions coexist here. `erf_half` is
// (1/sqrt(pi)) * integral_0^x exp(-t^2) dt, which is exactly half of the
// conventional error function `erf_std`. Mixing them up silently halves or
// doubles every confidence level, so both are named explicitly.

namespace nide {

// (1/sqrt(pi)) * integral_0^x exp(-t^2) dt, range (-0.5, 0.5).
double erf_half(double x);

// Conventional erf, range (-1, 1). Equals 2 * erf_half(x).
double erf_std(double x);

// Standard normal CDF phi(x).
double std_normal_cdf(double x);

// F(z) = Pr(|V| <= z) for V ~ N(0, sigma^2), i.e. 2*phi(z/sigma) - 1.
// Throws std::invalid_argument for z < 0 or sigma <= 0.
double abs_noise_cdf(double z, double sigma);

// 1 - F(z), computed without cancellation in the upper tail.
double abs_noise_sf(double z, double sigma);

// H(z, theta_bar) = Pr(|V + theta_bar| <= z)
//                 = phi((z - theta_bar)/sigma) + phi((z + theta_bar)/sigma) - 1.
// Reduces to abs_noise_cdf when theta_bar == 0 and is even in theta_bar.
double shifted_abs_cdf(double z, double theta_bar, double sigma);

}  // namespace nide

#endif  // NIDE_GAUSSIAN_STATS_HPP_
