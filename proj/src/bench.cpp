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

#include "nide/bench.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <string>
#include <thread>

#include "json.hpp"
#include "nide/wavelet.hpp"

namespace nide {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

struct Moments {
  double mean = 0.0;
  double stddev = 0.0;
};

// Values are accumulated in trial order so the result does not depend on
// which worker produced them.
Moments moments(std::span<const double> values) {
  Moments m;
  const double n = static_cast<double>(values.size());
  for (double v : values) m.mean += v;
  m.mean /= n;
  if (values.size() > 1) {
    double ss = 0.0;
    for (double v : values) ss += (v - m.mean) * (v - m.mean);
    m.stddev = std::sqrt(ss / (n - 1.0));
  }
  return m;
}

unsigned worker_count(unsigned requested, std::size_t jobs) {
  unsigned w = requested == 0 ? std::max(1u, std::thread::hardware_concurrency()) : requested;
  return static_cast<unsigned>(std::min<std::size_t>(w, std::max<std::size_t>(jobs, 1)));
}

// Runs body(i) for i in [0, jobs) on `workers` threads.
template <typename Body>
void parallel_for(std::size_t jobs, unsigned workers, Body body) {
  if (workers <= 1) {
    for (std::size_t i = 0; i < jobs; ++i) body(i);
    return;
  }
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t i = w; i < jobs; i += workers) body(i);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace

std::string_view to_string(MseDenominator d) {
  return d == MseDenominator::kNorm ? "norm" : "norm-squared";
}

MseDenominator parse_mse_denominator(std::string_view text) {
  if (text == "norm-squared") return MseDenominator::kNormSquared;
  if (text == "norm") return MseDenominator::kNorm;
  throw std::invalid_argument("unknown MSE denominator '" + std::string(text) + "'");
}

double normalized_mse(std::span<const double> estimate, std::span<const double> truth,
                      MseDenominator denominator) {
  if (estimate.size() != truth.size()) throw std::invalid_argument("normalized_mse: length mismatch");
  double err = 0.0;
  double energy = 0.0;
  for (std::size_t i = 0; i < truth.size(); ++i) {
    const double d = estimate[i] - truth[i];
    err += d * d;
    energy += truth[i] * truth[i];
  }
  if (!(energy > 0.0)) throw std::invalid_argument("normalized_mse: truth has zero energy");
  return denominator == MseDenominator::kNorm ? err / std::sqrt(energy) : err / energy;
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) {
  return splitmix64(seed ^ splitmix64(trial));
}

std::string format_float(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

void ExperimentConfig::validate() const {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  if (signals.empty()) throw std::invalid_argument("no signals selected");
  if (methods.empty()) throw std::invalid_argument("no methods selected");
  if (snr_db.empty()) throw std::invalid_argument("no SNR values selected");
  if (!is_dyadic(length) || length < 64) throw std::invalid_argument("length must be a power of two >= 64");
  noise.validate();
  denoise_config().validate();
}

DenoiseConfig ExperimentConfig::denoise_config() const {
  DenoiseConfig dc;
  dc.levels = levels;
  dc.lambda = lambda;
  if (colored_band && !noise.is_white()) dc.colored = theoretical_profile(noise, length - 1);
  return dc;
}

const ResultRow* ExperimentResult::find(std::string_view signal, std::string_view method,
                                        double snr_db) const {
  for (const auto& row : rows) {
    if (row.signal == signal && row.method == method && row.snr_db == snr_db) return &row;
  }
  return nullptr;
}

double run_single_trial(const TestSignal& signal, Method method, double snr_db,
                        const ExperimentConfig& config, std::size_t trial) {
  const std::vector<double> raw = gen_noise(config.noise, signal.samples.size(),
                                            trial_seed(config.seed, trial));
  const std::vector<double> noise = calibrate_noise_to_snr(signal.samples, raw, snr_db);
  std::vector<double> observed(signal.samples.size());
  for (std::size_t i = 0; i < observed.size(); ++i) observed[i] = signal.samples[i] + noise[i];
  const DenoiseResult r = denoise_with(method, observed, config.denoise_config());
  return normalized_mse(r.denoised, signal.samples, config.mse_denominator);
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
  config.validate();
  std::vector<TestSignal> signals;
  for (SignalName s : config.signals) signals.push_back(gen_signal(s, config.length));
  const DenoiseConfig dc = config.denoise_config();

  const std::size_t n_sig = signals.size();
  const std::size_t n_snr = config.snr_db.size();
  const std::size_t n_met = config.methods.size();
  auto cell = [&](std::size_t s, std::size_t q, std::size_t m) { return (s * n_snr + q) * n_met + m; };
  // mse[cell][trial]
  std::vector<std::vector<double>> mse(n_sig * n_snr * n_met, std::vector<double>(config.trials));

  parallel_for(config.trials, worker_count(config.threads, config.trials), [&](std::size_t t) {
    const std::vector<double> raw =
        gen_noise(config.noise, config.length, trial_seed(config.seed, t));
    std::vector<double> observed(config.length);
    for (std::size_t s = 0; s < n_sig; ++s) {
      const auto& truth = signals[s].samples;
      for (std::size_t q = 0; q < n_snr; ++q) {
        const std::vector<double> noise = calibrate_noise_to_snr(truth, raw, config.snr_db[q]);
        for (std::size_t i = 0; i < truth.size(); ++i) observed[i] = truth[i] + noise[i];
        for (std::size_t m = 0; m < n_met; ++m) {
          const DenoiseResult r = denoise_with(config.methods[m], observed, dc);
          mse[cell(s, q, m)][t] = normalized_mse(r.denoised, truth, config.mse_denominator);
        }
      }
    }
  });

  ExperimentResult result;
  const std::string noise_label = config.noise.label();
  for (std::size_t s = 0; s < n_sig; ++s) {
    for (std::size_t q = 0; q < n_snr; ++q) {
      for (std::size_t m = 0; m < n_met; ++m) {
        const Moments mo = moments(mse[cell(s, q, m)]);
        result.rows.push_back(ResultRow{std::string(to_string(config.signals[s])),
                                        std::string(to_string(config.methods[m])),
                                        config.snr_db[q], noise_label, mo.mean, mo.stddev,
                                        config.trials});
      }
    }
  }
  return result;
}

void write_csv(std::ostream& out, const ExperimentResult& result) {
  out << "signal,method,snr_db,noise,mean_mse,std_mse,trials\n";
  for (const auto& r : result.rows) {
    out << r.signal << ',' << r.method << ',' << format_float(r.snr_db) << ','
        << r.noise << ',' << format_float(r.mean_mse) << ',' << format_float(r.std_mse)
        << ',' << r.trials << '\n';
  }
}

void write_json(std::ostream& out, const ExperimentResult& result) {
  auto rounded = [](double v) { return std::stod(format_float(v)); };
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& r : result.rows) {
    rows.push_back({{"signal", r.signal},
                    {"method", r.method},
                    {"snr_db", rounded(r.snr_db)},
                    {"noise", r.noise},
                    {"mean_mse", rounded(r.mean_mse)},
                    {"std_mse", rounded(r.std_mse)},
                    {"trials", r.trials}});
  }
  out << rows.dump(2) << '\n';
}

double emit_band_trace(SignalName signal, double snr_db, const NoiseSpec& noise, double lambda,
                       std::uint64_t seed, std::ostream& out, int levels, std::size_t length) {
  const TestSignal sig = gen_signal(signal, length);
  const std::vector<double> raw = gen_noise(noise, length, trial_seed(seed, 0));
  const std::vector<double> scaled = calibrate_noise_to_snr(sig.samples, raw, snr_db);
  std::vector<double> observed(length);
  for (std::size_t i = 0; i < length; ++i) observed[i] = sig.samples[i] + scaled[i];

  DenoiseConfig dc;
  dc.levels = levels;
  dc.lambda = lambda;
  if (!noise.is_white()) dc.colored = theoretical_profile(noise, length - 1);
  const DenoiseResult r = denoise(observed, dc);

  const ConfidenceBand& band = r.band;
  out << "z,g,lower,upper\n";
  char line[128];
  const double n = static_cast<double>(band.size());
  for (std::size_t m = 0; m < band.size(); ++m) {
    std::snprintf(line, sizeof line, "%.10g,%.10g,%.10g,%.10g\n", band.z[m],
                  static_cast<double>(m + 1) / n, band.lower[m], band.upper[m]);
    out << line;
  }
  return r.threshold;
}

std::vector<LambdaSweepRow> lambda_sweep(SignalName signal, double snr_db,
                                         std::span<const double> lambdas,
                                         const ExperimentConfig& base) {
  std::vector<LambdaSweepRow> rows;
  for (double lambda : lambdas) {
    ExperimentConfig cfg = base;
    cfg.signals = {signal};
    cfg.methods = {Method::kNide};
    cfg.snr_db = {snr_db};
    cfg.lambda = lambda;
    const ExperimentResult r = run_experiment(cfg);
    rows.push_back({lambda, r.rows.front().mean_mse, r.rows.front().std_mse});
  }
  return rows;
}

}  // namespace nide
