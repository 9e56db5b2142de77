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

#ifndef NIDE_BENCH_HPP_
#define NIDE_BENCH_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nide/baselines.hpp"
#include "nide/noise_model.hpp"
#include "nide/signals.hpp"

namespace nide {

enum class MseDenominator {
  kNormSquared,  // |est - truth|^2 / |truth|^2
  kNorm,         // |est - truth|^2 / |truth|
};

std::string_view to_string(MseDenominator d);
// "norm-squared" or "norm".
MseDenominator parse_mse_denominator(std::string_view text);

double normalized_mse(std::span<const double> estimate, std::span<const double> truth,
                      MseDenominator denominator = MseDenominator::kNormSquared);

// Per-trial seed derived from the experiment seed with a SplitMix64 mix.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial);

struct ExperimentConfig {
  std::vector<SignalName> signals{SignalName::kBlocks};
  std::vector<Method> methods{Method::kNide, Method::kVisu, Method::kSure, Method::kBayes};
  std::vector<double> snr_db{1.0, 4.0, 8.0, 10.0, 14.0};
  NoiseSpec noise;
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  int levels = 5;
  double lambda = 4.5;
  std::size_t length = 2048;
  MseDenominator mse_denominator = MseDenominator::kNormSquared;
  // When false the colored-noise band is not used even for colored noise.
  bool colored_band = true;
  // 0: one worker per hardware thread.
  unsigned threads = 0;

  void validate() const;
  // Denoiser settings for NIDe and the baselines under this experiment.
  DenoiseConfig denoise_config() const;
};

struct ResultRow {
  std::string signal;
  std::string method;
  double snr_db = 0.0;
  std::string noise;
  double mean_mse = 0.0;
  double std_mse = 0.0;
  std::size_t trials = 0;
};

struct ExperimentResult {
  std::vector<ResultRow> rows;

  const ResultRow* find(std::string_view signal, std::string_view method, double snr_db) const;
};

// Runs every (signal, snr, trial) cell; all methods see the same noise
// realization within a trial. Deterministic for a fixed config.
ExperimentResult run_experiment(const ExperimentConfig& config);

// Single-trial pipeline run: the building block of run_experiment.
double run_single_trial(const TestSignal& signal, Method method, double snr_db,
                        const ExperimentConfig& config, std::size_t trial);

// Columns signal,method,snr_db,noise,mean_mse,std_mse,trials; floats with
// six significant digits.
void write_csv(std::ostream& out, const ExperimentResult& result);
void write_json(std::ostream& out, const ExperimentResult& result);

// Sorted absolute detail coefficients of one noisy realization against the
// noise band: CSV columns z,g,lower,upper. Returns the selected threshold.
double emit_band_trace(SignalName signal, double snr_db, const NoiseSpec& noise, double lambda,
                       std::uint64_t seed, std::ostream& out, int levels = 5,
                       std::size_t length = 2048);

struct LambdaSweepRow {
  double lambda = 0.0;
  double mean_mse = 0.0;
  double std_mse = 0.0;
};
std::vector<LambdaSweepRow> lambda_sweep(SignalName signal, double snr_db,
                                         std::span<const double> lambdas,
                                         const ExperimentConfig& base);

// Six significant digits, as used in every tabular output.
std::string format_float(double v);

}  // namespace nide

#endif  // NIDE_BENCH_HPP_
