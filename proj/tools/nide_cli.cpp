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

// Command-line front end: benchmark tables, band traces, Monte Carlo checks,
// lambda sweeps and denoising of user-supplied CSV data.

#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "nide/baselines.hpp"
#include "nide/bench.hpp"
#include "nide/monte_carlo.hpp"
#include "nide/noise_model.hpp"
#include "nide/signals.hpp"
#include "nide/wavelet.hpp"

namespace {

// Writes to the named file, or stdout for "" and "-".
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty() && path != "-") {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw std::runtime_error("cannot open '" + path + "' for writing");
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

struct BenchArgs {
  std::vector<std::string> signals{"Blocks"};
  std::vector<std::string> methods{"nide", "visu", "sure", "bayes"};
  std::vector<double> snr{1, 4, 8, 10, 14};
  std::string noise = "white";
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  int levels = 5;
  double lambda = 4.5;
  std::size_t length = 2048;
  std::string mse_denominator = "norm-squared";
  unsigned threads = 0;
  bool white_band_only = false;
};

void add_common(CLI::App* app, BenchArgs& a) {
  app->add_option("--noise", a.noise, "white | ar1:<a> | ma:<t0>,<t1>,...");
  app->add_option("--trials", a.trials, "Trials per cell")->check(CLI::PositiveNumber);
  app->add_option("--seed", a.seed, "Experiment seed");
  app->add_option("--levels", a.levels, "Haar decomposition levels")->check(CLI::PositiveNumber);
  app->add_option("--length", a.length, "Signal length (power of two)");
  app->add_option("--mse-denominator", a.mse_denominator, "norm-squared | norm")
      ->check(CLI::IsMember({"norm-squared", "norm"}));
  app->add_option("--threads", a.threads, "Worker threads (0 = all cores)");
  app->add_flag("--white-band", a.white_band_only,
                "Use the white-noise band even when the noise is colored");
}

nide::ExperimentConfig to_config(const BenchArgs& a) {
  nide::ExperimentConfig cfg;
  cfg.signals.clear();
  for (const auto& s : a.signals) cfg.signals.push_back(nide::parse_signal_name(s));
  cfg.methods.clear();
  for (const auto& m : a.methods) cfg.methods.push_back(nide::parse_method(m));
  cfg.snr_db = a.snr;
  cfg.noise = nide::NoiseSpec::parse(a.noise);
  cfg.trials = a.trials;
  cfg.seed = a.seed;
  cfg.levels = a.levels;
  cfg.lambda = a.lambda;
  cfg.length = a.length;
  cfg.mse_denominator = nide::parse_mse_denominator(a.mse_denominator);
  cfg.colored_band = !a.white_band_only;
  cfg.threads = a.threads;
  return cfg;
}

std::vector<double> read_column_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::vector<double> values;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const std::string cell = line.substr(first, line.find_first_of(",\r") - first);
    try {
      std::size_t used = 0;
      values.push_back(std::stod(cell, &used));
    } catch (const std::exception&) {
      if (values.empty() && line_no == 1) continue;  // header row
      throw std::runtime_error(path + ":" + std::to_string(line_no) + ": not a number");
    }
  }
  if (values.empty()) throw std::runtime_error("'" + path + "' holds no samples");
  return values;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Noise invalidation denoising: benchmarks, traces and Monte Carlo checks"};
  app.require_subcommand(1);

  BenchArgs bench;
  std::string bench_out;
  std::string bench_format = "csv";
  auto* bench_cmd = app.add_subcommand("bench", "Normalized-MSE table over signals, methods and SNRs");
  bench_cmd->add_option("--signal", bench.signals, "Signals")->delimiter(',');
  bench_cmd->add_option("--method", bench.methods, "nide, visu, sure, bayes")->delimiter(',');
  bench_cmd->add_option("--snr", bench.snr, "SNR values in dB")->delimiter(',');
  bench_cmd->add_option("--lambda", bench.lambda, "Band width multiplier");
  bench_cmd->add_option("--out", bench_out, "Output path (default stdout)");
  bench_cmd->add_option("--format", bench_format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
  add_common(bench_cmd, bench);

  BenchArgs trace;
  std::string trace_signal = "Blocks";
  double trace_snr = 5.0;
  std::string trace_out;
  auto* trace_cmd = app.add_subcommand("trace", "Sorted coefficients against the noise band (z,g,lower,upper)");
  trace_cmd->add_option("--signal", trace_signal, "Signal");
  trace_cmd->add_option("--snr", trace_snr, "SNR in dB");
  trace_cmd->add_option("--lambda", trace.lambda, "Band width multiplier");
  trace_cmd->add_option("--out", trace_out, "Output path (default stdout)");
  add_common(trace_cmd, trace);

  std::string mc_formula = "appendixB";
  std::size_t mc_runs = 2000;
  std::uint64_t mc_seed = 1;
  std::string mc_signature = "gaussian";
  std::string mc_out;
  nide::McParams mc;
  auto* mc_cmd = app.add_subcommand("mc", "Monte Carlo check of the signature statistics");
  mc_cmd->add_option("--formula", mc_formula, "appendixA | appendixB | appendixC | appendixD | coverage");
  mc_cmd->add_option("--runs", mc_runs, "Monte Carlo runs");
  mc_cmd->add_option("--seed", mc_seed, "Seed");
  mc_cmd->add_option("--n", mc.n, "Samples per run");
  mc_cmd->add_option("--z", mc.z, "Evaluation point for single-z checks");
  mc_cmd->add_option("--sigma", mc.sigma, "Noise standard deviation");
  mc_cmd->add_option("--lambda", mc.lambda, "Band width multiplier (coverage)");
  mc_cmd->add_option("--ar1", mc.ar1, "AR(1) coefficient (appendixD)");
  mc_cmd->add_option("--grid", mc.grid_points, "z-grid points (appendixD, coverage)");
  mc_cmd->add_option("--grid-max", mc.grid_max_sigmas, "Grid upper end in units of sigma");
  mc_cmd->add_option("--signature", mc_signature, "indicator | gaussian (appendixA)")
      ->check(CLI::IsMember({"indicator", "gaussian"}));
  mc_cmd->add_option("--out", mc_out, "Output path (default stdout)");

  BenchArgs sweep;
  std::string sweep_signal = "Blocks";
  double sweep_snr = 8.0;
  std::vector<double> sweep_lambdas{3.0, 3.5, 4.0, 4.5, 5.0};
  std::string sweep_out;
  auto* sweep_cmd = app.add_subcommand("lambda-sweep", "NIDe mean MSE as a function of lambda");
  sweep_cmd->add_option("--signal", sweep_signal, "Signal");
  sweep_cmd->add_option("--snr", sweep_snr, "SNR in dB");
  sweep_cmd->add_option("--lambdas", sweep_lambdas, "Lambda values")->delimiter(',');
  sweep_cmd->add_option("--out", sweep_out, "Output path (default stdout)");
  add_common(sweep_cmd, sweep);

  std::string file_in;
  std::string file_out;
  std::string file_pad = "reject";
  std::string file_method = "nide";
  std::string file_noise = "white";
  double file_lambda = 4.5;
  int file_levels = 5;
  double file_sigma = 0.0;
  auto* file_cmd = app.add_subcommand("denoise-file", "Denoise a single-column CSV of samples");
  file_cmd->add_option("--in", file_in, "Input CSV")->required();
  file_cmd->add_option("--out", file_out, "Output CSV; a JSON sidecar is written to <out>.json")->required();
  file_cmd->add_option("--pad", file_pad, "zero | reject for non-power-of-two lengths")
      ->check(CLI::IsMember({"zero", "reject"}));
  file_cmd->add_option("--method", file_method, "nide | visu | sure | bayes");
  file_cmd->add_option("--noise", file_noise, "Noise correlation model for the band");
  file_cmd->add_option("--lambda", file_lambda, "Band width multiplier");
  file_cmd->add_option("--levels", file_levels, "Haar decomposition levels");
  file_cmd->add_option("--sigma", file_sigma, "Known noise std (default: MAD estimate)");

  std::string sig_name = "Blocks";
  std::size_t sig_n = 2048;
  std::string sig_out;
  auto* sig_cmd = app.add_subcommand("signal", "Write a test signal as CSV (t,value)");
  sig_cmd->add_option("--signal", sig_name, "Signal");
  sig_cmd->add_option("--n", sig_n, "Length (power of two)");
  sig_cmd->add_option("--out", sig_out, "Output path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (bench_cmd->parsed()) {
      const nide::ExperimentResult result = nide::run_experiment(to_config(bench));
      Output out(bench_out);
      if (bench_format == "json") {
        nide::write_json(out.stream(), result);
      } else {
        nide::write_csv(out.stream(), result);
      }
    } else if (trace_cmd->parsed()) {
      Output out(trace_out);
      const double t = nide::emit_band_trace(nide::parse_signal_name(trace_signal), trace_snr,
                                             nide::NoiseSpec::parse(trace.noise), trace.lambda,
                                             trace.seed, out.stream(), trace.levels, trace.length);
      std::cerr << "threshold " << nide::format_float(t) << '\n';
    } else if (mc_cmd->parsed()) {
      mc.signature = mc_signature == "indicator" ? nide::SignatureKind::kIndicator
                                                 : nide::SignatureKind::kGaussianKernel;
      const nide::McReport rep = nide::mc_validate(nide::parse_mc_formula(mc_formula), mc, mc_runs, mc_seed);
      Output out(mc_out);
      nide::write_mc_csv(out.stream(), rep);
      std::cerr << nide::to_string(rep.formula) << ": " << (rep.passed ? "PASS" : "FAIL") << " ("
                << rep.failures << " of " << rep.points.size() << " points failed)\n";
      return rep.passed ? 0 : 2;
    } else if (sweep_cmd->parsed()) {
      const auto rows = nide::lambda_sweep(nide::parse_signal_name(sweep_signal), sweep_snr,
                                           sweep_lambdas, to_config(sweep));
      Output out(sweep_out);
      out.stream() << "lambda,mean_mse,std_mse\n";
      for (const auto& r : rows) {
        out.stream() << nide::format_float(r.lambda) << ',' << nide::format_float(r.mean_mse) << ','
                     << nide::format_float(r.std_mse) << '\n';
      }
    } else if (file_cmd->parsed()) {
      std::vector<double> samples = read_column_csv(file_in);
      const std::size_t original = samples.size();
      if (!nide::is_dyadic(original)) {
        if (file_pad == "reject") {
          throw std::runtime_error("input length " + std::to_string(original) +
                                   " is not a power of two (use --pad zero)");
        }
        std::size_t padded = 1;
        while (padded < original) padded <<= 1;
        std::cerr << "warning: zero-padding " << original << " samples to " << padded << '\n';
        samples.resize(padded, 0.0);
      }
      nide::DenoiseConfig dc;
      dc.levels = file_levels;
      dc.lambda = file_lambda;
      if (file_sigma > 0.0) dc.known_sigma = file_sigma;
      const nide::NoiseSpec noise = nide::NoiseSpec::parse(file_noise);
      if (!noise.is_white()) dc.colored = nide::theoretical_profile(noise, samples.size() - 1);
      const nide::DenoiseResult r =
          nide::denoise_with(nide::parse_method(file_method), samples, dc);
      {
        Output out(file_out);
        char buf[32];
        for (std::size_t i = 0; i < original; ++i) {
          std::snprintf(buf, sizeof buf, "%.17g\n", r.denoised[i]);
          out.stream() << buf;
        }
      }
      nlohmann::ordered_json side = {{"threshold", r.threshold},
                                     {"sigma_used", r.sigma_used},
                                     {"lambda", file_lambda},
                                     {"method", file_method},
                                     {"band_thresholds", r.band_thresholds},
                                     {"samples", original},
                                     {"padded_length", samples.size()}};
      Output sidecar(file_out + ".json");
      sidecar.stream() << side.dump(2) << '\n';
    } else if (sig_cmd->parsed()) {
      const nide::TestSignal s = nide::gen_signal(nide::parse_signal_name(sig_name), sig_n);
      Output out(sig_out);
      out.stream() << "t,value\n";
      char buf[64];
      for (std::size_t i = 0; i < s.samples.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.10g,%.10g\n",
                      static_cast<double>(i + 1) / static_cast<double>(sig_n), s.samples[i]);
        out.stream() << buf;
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
