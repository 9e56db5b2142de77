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

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

#include "nide/signals.hpp"

namespace nide {
namespace {

std::vector<double> random_vector(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> dist(0.0, 3.0);
  std::vector<double> v(n);
  for (double& x : v) x = dist(rng);
  return v;
}

double energy(const std::vector<double>& v) {
  return std::inner_product(v.begin(), v.end(), v.begin(), 0.0);
}

TEST(DwtForwardTest, ConstantSignal) {
  const CoefficientSet c = dwt_forward(std::vector<double>{1, 1, 1, 1}, 2);
  ASSERT_EQ(c.levels(), 2);
  ASSERT_EQ(c.approx.size(), 1u);
  EXPECT_NEAR(c.approx[0], 2.0, 1e-15);
  for (const auto& band : c.detail) {
    for (double d : band) EXPECT_NEAR(d, 0.0, 1e-15);
  }
}

TEST(DwtForwardTest, AnalysisPair) {
  const CoefficientSet c = dwt_forward(std::vector<double>{1, -1}, 1);
  EXPECT_NEAR(c.approx[0], 0.0, 1e-15);
  EXPECT_NEAR(c.detail[0][0], std::sqrt(2.0), 1e-15);
}

TEST(DwtForwardTest, BandLayout) {
  const CoefficientSet c = dwt_forward(random_vector(2048, 1), 5);
  EXPECT_EQ(c.original_length, 2048u);
  std::size_t total = c.approx.size();
  for (int j = 0; j < 5; ++j) {
    EXPECT_EQ(c.detail[static_cast<std::size_t>(j)].size(), 2048u >> (j + 1));
    total += c.detail[static_cast<std::size_t>(j)].size();
  }
  EXPECT_EQ(c.approx.size(), 64u);
  EXPECT_EQ(total, 2048u);
}

TEST(DwtForwardTest, RejectsBadShapes) {
  EXPECT_THROW(dwt_forward(std::vector<double>(12, 0.0), 1), std::invalid_argument);
  EXPECT_THROW(dwt_forward(std::vector<double>(16, 0.0), 5), std::invalid_argument);
  EXPECT_THROW(dwt_forward(std::vector<double>(16, 0.0), 0), std::invalid_argument);
  EXPECT_NO_THROW(dwt_forward(std::vector<double>(16, 0.0), 4));
}

TEST(DwtForwardTest, Parseval) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto x = random_vector(2048, seed);
    const CoefficientSet c = dwt_forward(x, 5);
    EXPECT_NEAR(c.energy() / energy(x), 1.0, 1e-9);
    EXPECT_NEAR(energy(c.flatten()) / energy(x), 1.0, 1e-9);
  }
}

TEST(DwtForwardTest, Linearity) {
  const auto x = random_vector(512, 4);
  const auto y = random_vector(512, 5);
  const double a = 1.7;
  const double b = -0.4;
  std::vector<double> mix(512);
  for (std::size_t i = 0; i < 512; ++i) mix[i] = a * x[i] + b * y[i];
  const auto cx = dwt_forward(x, 4).flatten();
  const auto cy = dwt_forward(y, 4).flatten();
  const auto cm = dwt_forward(mix, 4).flatten();
  for (std::size_t i = 0; i < cm.size(); ++i) EXPECT_NEAR(cm[i], a * cx[i] + b * cy[i], 1e-12);
}

TEST(DwtInverseTest, Roundtrip) {
  for (int levels = 1; levels <= 5; ++levels) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const auto x = random_vector(1024, 100 * levels + seed);
      const auto back = dwt_inverse(dwt_forward(x, levels));
      ASSERT_EQ(back.size(), x.size());
      double err = 0.0;
      for (std::size_t i = 0; i < x.size(); ++i) err += (back[i] - x[i]) * (back[i] - x[i]);
      EXPECT_LE(std::sqrt(err / energy(x)), 1e-9);
    }
  }
}

TEST(DwtInverseTest, ZeroAndImpulse) {
  CoefficientSet c = dwt_forward(std::vector<double>(64, 0.0), 3);
  for (double v : dwt_inverse(c)) EXPECT_EQ(v, 0.0);
  c.detail[1][5] = 1.0;
  const auto x = dwt_inverse(c);
  EXPECT_NEAR(energy(x), 1.0, 1e-14);
  c.detail[1][5] = 0.0;
  c.approx[2] = 1.0;
  EXPECT_NEAR(energy(dwt_inverse(c)), 1.0, 1e-14);
}

TEST(DwtInverseTest, RejectsInconsistentBands) {
  CoefficientSet c = dwt_forward(std::vector<double>(64, 1.0), 3);
  c.detail[1].pop_back();
  EXPECT_THROW(dwt_inverse(c), std::invalid_argument);
}

TEST(FlattenTest, FinestFirstApproxLast) {
  const auto x = random_vector(64, 9);
  const CoefficientSet c = dwt_forward(x, 3);
  const auto flat = c.flatten();
  ASSERT_EQ(flat.size(), 64u);
  EXPECT_EQ(flat.front(), c.detail[0].front());
  EXPECT_EQ(flat[32], c.detail[1].front());
  EXPECT_EQ(flat.back(), c.approx.back());
  EXPECT_EQ(c.flatten_details().size(), 56u);
  const CoefficientSet back = CoefficientSet::unflatten(flat, 64, 3);
  EXPECT_EQ(back.flatten(), flat);
}

TEST(WhiteNoiseTest, CoefficientsKeepVariance) {
  const auto x = random_vector(2048, 31);  // sigma 3
  const CoefficientSet c = dwt_forward(x, 5);
  for (const auto& band : c.detail) {
    if (band.size() < 256) continue;
    const double var = energy(band) / static_cast<double>(band.size());
    EXPECT_NEAR(var / 9.0, 1.0, 0.05 + 3.0 * std::sqrt(2.0 / band.size()));
  }
  const auto flat = c.flatten();
  EXPECT_NEAR(energy(flat) / flat.size() / 9.0, 1.0, 0.05);
}

TEST(BlocksTest, DetailsVanishAwayFromBreakpoints) {
  const auto s = gen_signal(SignalName::kBlocks, 2048).samples;
  std::vector<std::size_t> jumps;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (std::abs(s[i] - s[i - 1]) > 1e-9) jumps.push_back(i);
  }
  const CoefficientSet c = dwt_forward(s, 5);
  for (int j = 0; j < 5; ++j) {
    const std::size_t width = std::size_t{2} << j;
    const auto& band = c.detail[static_cast<std::size_t>(j)];
    for (std::size_t k = 0; k < band.size(); ++k) {
      bool near_jump = false;
      for (std::size_t p : jumps) {
        // Support of coefficient k is [k w, (k+1) w); allow one slot either side.
        if (p + width >= k * width && p <= (k + 2) * width) near_jump = true;
      }
      if (!near_jump) EXPECT_NEAR(band[k], 0.0, 1e-9) << "level " << j << " k " << k;
    }
  }
}

// Exact variance ratio and lag-1 band correlation from explicit filter taps.
void filter_oracle(const std::vector<double>& taps, double a, double& ratio, double& lag1) {
  const std::size_t w = taps.size();
  auto rho = [a](long d) { return std::pow(a, static_cast<double>(std::abs(d))); };
  ratio = 0.0;
  double cov1 = 0.0;
  for (std::size_t p = 0; p < w; ++p) {
    for (std::size_t q = 0; q < w; ++q) {
      ratio += taps[p] * taps[q] * rho(static_cast<long>(p) - static_cast<long>(q));
      cov1 += taps[p] * taps[q] * rho(static_cast<long>(p + w) - static_cast<long>(q));
    }
  }
  lag1 = cov1 / ratio;
}

TEST(HaarNoiseTest, MatchesFilterOracle) {
  std::vector<double> rho(400);
  for (std::size_t k = 0; k < rho.size(); ++k) rho[k] = std::pow(0.8, static_cast<double>(k));
  const CorrelationProfile prof(rho);
  for (int level = 1; level <= 5; ++level) {
    const std::size_t w = std::size_t{1} << level;
    std::vector<double> taps(w, std::pow(2.0, -0.5 * level));
    for (std::size_t i = w / 2; i < w; ++i) taps[i] = -taps[i];
    double ratio = 0.0;
    double lag1 = 0.0;
    filter_oracle(taps, 0.8, ratio, lag1);
    const BandNoiseStats d = haar_detail_noise(prof, level, 50);
    EXPECT_NEAR(d.variance_ratio, ratio, 1e-10);
    EXPECT_NEAR(d.profile.at(1), lag1, 1e-10);

    std::vector<double> flat(w, std::pow(2.0, -0.5 * level));
    filter_oracle(flat, 0.8, ratio, lag1);
    const BandNoiseStats s = haar_approx_noise(prof, level, 50);
    EXPECT_NEAR(s.variance_ratio, ratio, 1e-10);
    EXPECT_NEAR(s.profile.at(1), lag1, 1e-10);
  }
  EXPECT_NEAR(haar_detail_noise(prof, 1, 10).variance_ratio, 0.2, 1e-12);
}

TEST(HaarNoiseTest, WhiteStaysWhite) {
  const BandNoiseStats d = haar_detail_noise(CorrelationProfile::white(), 3, 20);
  EXPECT_NEAR(d.variance_ratio, 1.0, 1e-14);
  EXPECT_TRUE(d.profile.is_white());
}

}  // namespace
}  // namespace nide
