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

#ifndef NIDE_SIGNATURE_HPP_
#define NIDE_SIGNATURE_HPP_

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

namespace nide {

// Normalized autocorrelation rho(k) = R(k) / R(0) of a stationary noise
// process. rho[0] is always 1; lags past the stored length are zero.
class CorrelationProfile {
 public:
  // The white profile {1}.
  CorrelationProfile();
  // Throws std::invalid_argument if rho is empty, rho[0] != 1 or any
  // |rho[k]| > 1.
  explicit CorrelationProfile(std::vector<double> rho);

  static CorrelationProfile white() { return CorrelationProfile(); }

  double at(std::size_t lag) const { return lag < rho_.size() ? rho_[lag] : 0.0; }
  std::size_t size() const { return rho_.size(); }
  const std::vector<double>& values() const { return rho_; }

  // True when every lag >= 1 is below the pair-sum truncation cutoff.
  bool is_white() const;

 private:
  std::vector<double> rho_;
};

// Lags with |rho| below this are dropped from the colored pair sums.
inline constexpr double kCorrelationCutoff = 1e-6;

// Pointwise confidence band around the noise signature mean F(z).
struct ConfidenceBand {
  std::vector<double> z;       // ascending, nonnegative
  std::vector<double> lower;   // L_N(z), clamped to [0, 1]
  std::vector<double> center;  // F(z)
  std::vector<double> upper;   // U_N(z), clamped to [0, 1]
  double lambda = 0.0;
  std::size_t n = 0;
  double confidence = 0.0;  // per-z probability implied by lambda

  std::size_t size() const { return z.size(); }
};

// g(z, v^N) = #{i : |v_i| <= z} / N.
double empirical_signature(double z, std::span<const double> samples);

// Step-function form of empirical_signature: z holds the sorted absolute
// samples and g[m-1] = m/N.
struct SortedCurve {
  std::vector<double> z;
  std::vector<double> g;
};
SortedCurve sorted_curve(std::span<const double> samples);

// Band F(z) -/+ lambda * sqrt(F(1-F)/n) for IID N(0, sigma^2) noise.
ConfidenceBand white_band(std::span<const double> z_grid, double sigma,
                          std::size_t n, double lambda);

// p = erf(lambda / sqrt(2)) and its inverse.
double lambda_to_confidence(double lambda);
double confidence_to_lambda(double p);

// Exact mean and variance of the sorted-coefficient signature of
// theta_i = theta_bar_i + v_i with IID N(0, sigma^2) noise.
struct NoisyCurveStats {
  std::vector<double> mean;
  std::vector<double> variance;
};
NoisyCurveStats expected_noisy_curve(std::span<const double> z_grid,
                                     std::span<const double> theta_bars,
                                     double sigma);

// Upper bound on var(g(z, V^N)) for stationary colored Gaussian noise with
// marginal N(0, sigma^2) and normalized autocorrelation `profile`. Each
// pair (i, j) contributes F(sqrt2 z / sqrt(1+rho)) F(sqrt2 z / sqrt(1-rho))
// - F(z)^2, obtained by rotating (V_i, V_j) onto independent components.
double colored_variance_bound(double z, double sigma,
                              const CorrelationProfile& profile, std::size_t n);

ConfidenceBand colored_band(std::span<const double> z_grid, double sigma,
                            const CorrelationProfile& profile, std::size_t n,
                            double lambda);

// Upper bound on cov(g(z, Theta_i), g(z, Theta_j)) for noisy coefficients
// with means theta_i, theta_j whose noise correlation is rho (|rho| < 1).
double colored_noisy_covariance_bound(double z, double theta_i, double theta_j,
                                      double rho, double sigma);

// CSV with header "z,lower,center,upper".
void write_band_csv(std::ostream& out, const ConfidenceBand& band);

}  // namespace nide

#endif  // NIDE_SIGNATURE_HPP_
