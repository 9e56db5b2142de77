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

#ifndef NIDE_MONTE_CARLO_HPP_
#define NIDE_MONTE_CARLO_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace nide {

// Which analytic result a Monte Carlo run checks.
enum class McFormula {
  kIidSignature,     // mean G_E(z), variance G_var(z)/N for any bounded signature
  kSortingSignature, // mean F(z), variance F(1-F)/N
  kNoisyData,        // mean (1/N) sum H, variance (1/N^2) sum H(1-H)
  kColoredBound,     // colored variance never above the pair-rotation bound
  kCoverage,         // per-z coverage of the white band
};

std::string_view to_string(McFormula f);
// Accepts appendixA..appendixD and coverage.
McFormula parse_mc_formula(std::string_view text);

enum class SignatureKind {
  kIndicator,       // 1{|v| <= z}
  kGaussianKernel,  // exp(-v^2 / (2 z^2))
};

struct McParams {
  std::size_t n = 2048;
  double sigma = 1.0;
  double z = 1.0;  // evaluation point for the single-z checks
  double lambda = 4.5;
  double ar1 = 0.8;
  std::size_t grid_points = 50;
  double grid_max_sigmas = 4.0;
  SignatureKind signature = SignatureKind::kGaussianKernel;
  // Acceptance tolerances.
  double mean_zscore_limit = 5.0;
  double variance_rel_tol = 0.2;
  std::size_t allowed_violations = 1;
  double coverage_floor = 0.999;
};

struct McPoint {
  double z = 0.0;
  double mc_mean = 0.0;
  double analytic_mean = 0.0;
  double mean_zscore = 0.0;
  double mc_variance = 0.0;
  double analytic_variance = 0.0;  // exact value, or the bound for kColoredBound
  double coverage = 0.0;           // kCoverage only
  bool passed = false;
};

struct McReport {
  McFormula formula = McFormula::kSortingSignature;
  std::size_t runs = 0;
  std::vector<McPoint> points;
  std::size_t failures = 0;
  bool passed = false;
};

McReport mc_validate(McFormula formula, const McParams& params, std::size_t runs,
                     std::uint64_t seed);

// CSV: z,mc_mean,analytic_mean,mean_zscore,mc_variance,analytic_variance,coverage,passed
void write_mc_csv(std::ostream& out, const McReport& report);

}  // namespace nide

#endif  // NIDE_MONTE_CARLO_HPP_
