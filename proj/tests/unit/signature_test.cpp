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


#include "nide/signature.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "nide/gaussian_stats.hpp"

namespace nide {
namespace {

std::vector<double> normal_draws(std::size_t n, std::uint64_t seed, double sigma = 1.0) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> dist(0.0, sigma);
  std::vector<double> v(n);
  for (double& x : v) x = dist(rng);
  return v;
}

std::vector<double> ar1_draws(std::size_t n, double a, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> dist(0.0, 1.0);
  std::vector<double> v(n);
  v[0] = dist(rng);
  const double innov = std::sqrt(1.0 - a * a);
  for (std::size_t i = 1; i < n; ++i) v[i] = a * v[i - 1] + innov * dist(rng);
  return v;
}

CorrelationProfile ar1_profile(double a, std::size_t lags) {
  std::vector<double> rho(lags + 1);
  for (std::size_t k = 0; k <= lags; ++k) rho[k] = std::pow(a, static_cast<double>(k));
  return CorrelationProfile(rho);
}

std::vector<double> linspace(double lo, double hi, std::size_t n) {
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = lo + (hi - lo) * i / static_cast<double>(n - 1);
  return out;
}

TEST(EmpiricalSignatureTest, Counts) {
  const std::vector<double> s{1.0, -2.0, 3.0};
  EXPECT_EQ(empirical_signature(0.5, s), 0.0);
  EXPECT_EQ(empirical_signature(10.0, s), 1.0);
  EXPECT_DOUBLE_EQ(empirical_signature(2.0, s), 2.0 / 3.0);
  EXPECT_THROW(empirical_signature(1.0, std::vector<double>{}), std::invalid_argument);
}

TEST(SortedCurveTest, TwoPoints) {
  const SortedCurve c = sorted_curve(std::vector<double>{3.0, -1.0});
  EXPECT_EQ(c.z, (std::vector<double>{1.0, 3.0}));
  EXPECT_EQ(c.g, (std::vector<double>{0.5, 1.0}));
  EXPECT_THROW(sorted_curve(std::vector<double>{}), std::invalid_argument);
}

TEST(SortedCurveTest, StepMatchesEmpiricalSignature) {
  const auto v = normal_draws(257, 3);
  const SortedCurve c = sorted_curve(v);
  EXPECT_TRUE(std::is_sorted(c.g.begin(), c.g.end()));
  EXPECT_EQ(c.g.back(), 1.0);
  for (std::size_t m = 0; m < c.z.size(); ++m) {
    EXPECT_DOUBLE_EQ(empirical_signature(c.z[m], v), c.g[m]);
  }
}

TEST(SortedCurveTest, NoiseMaximumRarelyBeyondThreePointNineSigma) {
  // P(max |v| > 3.9) for N=2048 is 1 - (1 - 9.6e-5)^2048 ~ 0.18.
  int beyond = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const SortedCurve c = sorted_curve(normal_draws(2048, 1000 + seed));
    if (c.z.back() > 3.9) ++beyond;
  }
  EXPECT_LE(beyond, 32);
}

TEST(CorrelationProfileTest, Validation) {
  EXPECT_TRUE(CorrelationProfile::white().is_white());
  EXPECT_EQ(CorrelationProfile::white().at(5), 0.0);
  EXPECT_THROW(CorrelationProfile(std::vector<double>{}), std::invalid_argument);
  EXPECT_THROW(CorrelationProfile(std::vector<double>{0.9, 0.1}), std::invalid_argument);
  EXPECT_THROW(CorrelationProfile(std::vector<double>{1.0, 1.2}), std::invalid_argument);
  EXPECT_FALSE(ar1_profile(0.8, 10).is_white());
  EXPECT_TRUE(CorrelationProfile(std::vector<double>{1.0, 1e-9}).is_white());
}

TEST(WhiteBandTest, ZeroLambdaCollapses) {
  const auto z = linspace(0.0, 5.0, 40);
  const ConfidenceBand b = white_band(z, 1.3, 100, 0.0);
  for (std::size_t i = 0; i < z.size(); ++i) {
    EXPECT_EQ(b.lower[i], b.center[i]);
    EXPECT_EQ(b.upper[i], b.center[i]);
  }
}

TEST(WhiteBandTest, HalfWidthAtMedian) {
  // F(z) = 1/2 where z is the median of |N(0,1)|.
  const double z = 0.6744897501960817;
  ASSERT_NEAR(abs_noise_cdf(z, 1.0), 0.5, 1e-15);
  const ConfidenceBand b = white_band(std::vector<double>{z}, 1.0, 2048, 4.5);
  const double half = 4.5 * std::sqrt(0.25 / 2048.0);  // 0.0497184
  EXPECT_NEAR(b.upper[0] - b.center[0], half, 1e-12);
  EXPECT_NEAR(b.center[0] - b.lower[0], half, 1e-12);
  EXPECT_NEAR(half, 0.049715, 5e-6);
  EXPECT_EQ(b.n, 2048u);
  EXPECT_EQ(b.lambda, 4.5);
}

TEST(WhiteBandTest, OrderingAndClamping) {
  const auto z = linspace(0.0, 12.0, 200);
  const ConfidenceBand b = white_band(z, 2.5, 64, 4.5);
  for (std::size_t i = 0; i < z.size(); ++i) {
    EXPECT_LE(b.lower[i], b.center[i]);
    EXPECT_LE(b.center[i], b.upper[i]);
    EXPECT_GE(b.lower[i], 0.0);
    EXPECT_LE(b.upper[i], 1.0);
    if (i > 0) EXPECT_GE(b.center[i], b.center[i - 1]);
  }
}

TEST(WhiteBandTest, RejectsBadArguments) {
  const std::vector<double> z{0.0, 1.0};
  EXPECT_THROW(white_band(z, 0.0, 10, 1.0), std::invalid_argument);
  EXPECT_THROW(white_band(z, 1.0, 0, 1.0), std::invalid_argument);
  EXPECT_THROW(white_band(z, 1.0, 10, -1.0), std::invalid_argument);
  EXPECT_THROW(white_band(std::vector<double>{1.0, 0.5}, 1.0, 10, 1.0), std::invalid_argument);
}

TEST(ConfidenceTest, KnownValues) {
  EXPECT_NEAR(lambda_to_confidence(3.0), 0.997300203937, 1e-12);
  EXPECT_NEAR(lambda_to_confidence(4.5), 0.9999932046537505, 1e-13);
  EXPECT_THROW(confidence_to_lambda(1.0), std::invalid_argument);
  EXPECT_THROW(confidence_to_lambda(0.0), std::invalid_argument);
  EXPECT_THROW(lambda_to_confidence(-1.0), std::invalid_argument);
}

TEST(ConfidenceTest, Roundtrip) {
  for (double x = 1.0; x <= 6.0 + 1e-12; x += 0.125) {
    const double p = lambda_to_confidence(x);
    // Near p = 1 one ulp of p spans more than 1e-9 in lambda.
    const double density = std::sqrt(2.0 / std::numbers::pi) * std::exp(-0.5 * x * x);
    const double ulp = std::nextafter(p, 2.0) - p;
    const double tol = std::max(1e-9, 4.0 * ulp / density);
    EXPECT_NEAR(confidence_to_lambda(p), x, tol) << "x=" << x;
    if (x <= 5.0) EXPECT_NEAR(confidence_to_lambda(p), x, 1e-9);
  }
}

TEST(NoisyCurveTest, ZeroShiftReducesToNoise) {
  const auto z = linspace(0.0, 4.0, 25);
  const std::vector<double> theta(500, 0.0);
  const NoisyCurveStats s = expected_noisy_curve(z, theta, 1.5);
  for (std::size_t i = 0; i < z.size(); ++i) {
    const double f = abs_noise_cdf(z[i], 1.5);
    EXPECT_NEAR(s.mean[i], f, 1e-13);
    EXPECT_NEAR(s.variance[i], f * (1.0 - f) / 500.0, 1e-16);
  }
}

TEST(NoisyCurveTest, VarianceBelowQuarterOverN) {
  const auto z = linspace(0.0, 30.0, 120);
  std::vector<double> theta;
  for (int i = 0; i < 300; ++i) theta.push_back(0.1 * (i % 37) * (i % 2 ? 1.0 : -1.0) * i);
  const NoisyCurveStats s = expected_noisy_curve(z, theta, 2.0);
  for (double v : s.variance) EXPECT_LE(v, 0.25 / 300.0 + 1e-18);
  EXPECT_THROW(expected_noisy_curve(z, std::vector<double>{}, 1.0), std::invalid_argument);
  EXPECT_THROW(expected_noisy_curve(z, theta, 0.0), std::invalid_argument);
}

TEST(ColoredBoundTest, WhiteProfileIsBinomialVariance) {
  const CorrelationProfile zeros(std::vector<double>{1.0, 0.0, 0.0, 0.0});
  for (double z : linspace(0.0, 5.0, 30)) {
    const double f = abs_noise_cdf(z, 1.0);
    EXPECT_NEAR(colored_variance_bound(z, 1.0, zeros, 1024), f * (1.0 - f) / 1024.0, 1e-18);
    EXPECT_NEAR(colored_variance_bound(z, 1.0, CorrelationProfile::white(), 1024),
                f * (1.0 - f) / 1024.0, 1e-18);
  }
}

TEST(ColoredBoundTest, PairSumMatchesBruteForce) {
  // Direct double sum over i != j for a short record.
  const std::size_t n = 12;
  const CorrelationProfile p = ar1_profile(-0.6, 20);
  for (double z : {0.3, 1.0, 2.2}) {
    const double f = abs_noise_cdf(z, 1.0);
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        const double rho = p.at(i > j ? i - j : j - i);
        if (std::abs(rho) < kCorrelationCutoff) continue;
        sum += abs_noise_cdf(std::sqrt(2.0) * z / std::sqrt(1.0 + rho), 1.0) *
                   abs_noise_cdf(std::sqrt(2.0) * z / std::sqrt(1.0 - rho), 1.0) -
               f * f;
      }
    }
    const double expect = f * (1.0 - f) / n + sum / (n * n);
    EXPECT_NEAR(colored_variance_bound(z, 1.0, p, n), expect, 1e-14);
  }
}

TEST(ColoredBoundTest, PerfectCorrelationUsesLimit) {
  // rho = 1 at every lag: the pair term is F(z) - F(z)^2 for every pair.
  const std::size_t n = 8;
  const CorrelationProfile p(std::vector<double>(n, 1.0));
  const double z = 0.9;
  const double f = abs_noise_cdf(z, 1.0);
  EXPECT_NEAR(colored_variance_bound(z, 1.0, p, n), f * (1.0 - f), 1e-14);
  const CorrelationProfile alt(std::vector<double>{1.0, -1.0});
  EXPECT_TRUE(std::isfinite(colored_variance_bound(z, 1.0, alt, n)));
}

TEST(ColoredBoundTest, AtLeastWhiteForPositiveCorrelation) {
  const CorrelationProfile p = ar1_profile(0.8, 200);
  for (double z : linspace(0.0, 5.0, 60)) {
    const double f = abs_noise_cdf(z, 1.0);
    EXPECT_GE(colored_variance_bound(z, 1.0, p, 1024), f * (1.0 - f) / 1024.0);
  }
}

TEST(ColoredBoundTest, DominatesMonteCarloVarianceAtSigma) {
  const std::size_t n = 1024;
  const std::size_t runs = 2000;
  double sum = 0.0;
  double sum_sq = 0.0;
  for (std::size_t r = 0; r < runs; ++r) {
    const double g = empirical_signature(1.0, ar1_draws(n, 0.8, 5000 + r));
    sum += g;
    sum_sq += g * g;
  }
  const double mean = sum / runs;
  const double var = (sum_sq - runs * mean * mean) / (runs - 1);
  EXPECT_LE(var, colored_variance_bound(1.0, 1.0, ar1_profile(0.8, 200), n));
}

TEST(ColoredBandTest, WhiteProfileMatchesWhiteBand) {
  const auto z = linspace(0.0, 4.0, 33);
  const ConfidenceBand a = colored_band(z, 1.1, CorrelationProfile::white(), 500, 4.5);
  const ConfidenceBand b = white_band(z, 1.1, 500, 4.5);
  for (std::size_t i = 0; i < z.size(); ++i) {
    EXPECT_DOUBLE_EQ(a.lower[i], b.lower[i]);
    EXPECT_DOUBLE_EQ(a.upper[i], b.upper[i]);
  }
}

TEST(ColoredBandTest, WiderThanWhiteForAr1) {
  const auto z = linspace(0.05, 4.0, 40);
  const ConfidenceBand a = colored_band(z, 1.0, ar1_profile(0.8, 200), 1024, 4.5);
  const ConfidenceBand b = white_band(z, 1.0, 1024, 4.5);
  for (std::size_t i = 0; i < z.size(); ++i) {
    EXPECT_GE(a.upper[i] - a.lower[i], b.upper[i] - b.lower[i]);
    EXPECT_GE(a.upper[i], b.upper[i]);
    EXPECT_LE(a.lower[i], b.lower[i]);
    if (a.upper[i] < 1.0) EXPECT_GT(a.upper[i], b.upper[i]);
  }
}

TEST(ColoredBandTest, ContainsAr1CurvesPointwise) {
  const std::size_t n = 1024;
  const std::size_t runs = 2000;
  const auto z = linspace(0.25, 3.0, 12);
  const ConfidenceBand band = colored_band(z, 1.0, ar1_profile(0.8, 200), n, 4.5);
  std::vector<std::size_t> inside(z.size(), 0);
  for (std::size_t r = 0; r < runs; ++r) {
    const auto v = ar1_draws(n, 0.8, 9000 + r);
    for (std::size_t i = 0; i < z.size(); ++i) {
      const double g = empirical_signature(z[i], v);
      if (band.lower[i] <= g && g <= band.upper[i]) ++inside[i];
    }
  }
  for (std::size_t i = 0; i < z.size(); ++i) {
    EXPECT_GE(static_cast<double>(inside[i]) / runs, 0.999) << "z=" << z[i];
  }
}

TEST(NoisyCovarianceBoundTest, IndependenceAndSpecialization) {
  for (double z : linspace(0.0, 4.0, 17)) {
    // At rho = 0 the rotation bound does not shrink to the true covariance 0.
    EXPECT_GE(colored_noisy_covariance_bound(z, 0.0, 0.0, 0.0, 1.0), 0.0);
    for (double rho : {-0.7, 0.2, 0.9}) {
      const double f = abs_noise_cdf(z, 1.0);
      const double expect = abs_noise_cdf(std::sqrt(2.0) * z / std::sqrt(1.0 + rho), 1.0) *
                                abs_noise_cdf(std::sqrt(2.0) * z / std::sqrt(1.0 - rho), 1.0) -
                            f * f;
      EXPECT_NEAR(colored_noisy_covariance_bound(z, 0.0, 0.0, rho, 1.0), expect, 1e-14);
    }
  }
  EXPECT_THROW(colored_noisy_covariance_bound(1.0, 0.0, 0.0, 1.0, 1.0), std::invalid_argument);
}

TEST(NoisyCovarianceBoundTest, DominatesMonteCarloCovariance) {
  const double rho = 0.5;
  const double z = 1.0;
  const double ti = 2.0;
  const double tj = -2.0;
  std::mt19937_64 rng(77);
  std::normal_distribution<double> dist(0.0, 1.0);
  const int draws = 100000;
  double si = 0.0;
  double sj = 0.0;
  double sij = 0.0;
  for (int k = 0; k < draws; ++k) {
    const double a = dist(rng);
    const double b = rho * a + std::sqrt(1.0 - rho * rho) * dist(rng);
    const double gi = std::abs(ti + a) <= z ? 1.0 : 0.0;
    const double gj = std::abs(tj + b) <= z ? 1.0 : 0.0;
    si += gi;
    sj += gj;
    sij += gi * gj;
  }
  const double cov = sij / draws - (si / draws) * (sj / draws);
  EXPECT_GE(colored_noisy_covariance_bound(z, ti, tj, rho, 1.0), cov);
}

TEST(BandCsvTest, HeaderAndRows) {
  const ConfidenceBand b = white_band(std::vector<double>{0.0, 1.0}, 1.0, 10, 4.5);
  std::ostringstream out;
  write_band_csv(out, b);
  const std::string text = out.str();
  EXPECT_EQ(text.rfind("z,lower,center,upper\n", 0), 0u);
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 3);
}

}  // namespace
}  // namespace nide
