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

#include "nide/signals.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

#include "nide/wavelet.hpp"

namespace nide {
namespace {

constexpr double kPi = std::numbers::pi;

// Breakpoints shared by Blocks and Bumps.
constexpr std::array<double, 11> kPositions = {0.10, 0.13, 0.15, 0.23, 0.25, 0.40,
                                               0.44, 0.65, 0.76, 0.78, 0.81};
constexpr std::array<double, 11> kBlockHeights = {4.0,  -5.0, 3.0, -4.0, 5.0, -4.2,
                                                  2.1,  4.3,  -3.1, 2.1, -4.2};
constexpr std::array<double, 11> kBumpHeights = {4.0, 5.0, 3.0, 4.0, 5.0, 4.2,
                                                 2.1, 4.3, 3.1, 5.1, 4.2};
constexpr std::array<double, 11> kBumpWidths = {0.005, 0.005, 0.006, 0.01,  0.01, 0.03,
                                                0.01,  0.01,  0.005, 0.008, 0.005};

double sgn(double x) { return (x > 0.0) - (x < 0.0); }

double raw_value(SignalName name, double t, double n) {
  switch (name) {
    case SignalName::kBlocks: {
      double v = 0.0;
      // Step is taken at t >= position so each breakpoint is one jump.
      for (std::size_t j = 0; j < kPositions.size(); ++j) {
        if (t >= kPositions[j]) v += kBlockHeights[j];
      }
      return v;
    }
    case SignalName::kBumps: {
      double v = 0.0;
      for (std::size_t j = 0; j < kPositions.size(); ++j) {
        const double u = std::abs((t - kPositions[j]) / kBumpWidths[j]);
        v += kBumpHeights[j] / std::pow(1.0 + u, 4);
      }
      return v;
    }
    case SignalName::kHeavySine:
      return 4.0 * std::sin(4.0 * kPi * t) - sgn(t - 0.3) - sgn(0.72 - t);
    case SignalName::kDoppler:
      return std::sqrt(t * (1.0 - t)) * std::sin(2.0 * kPi * 1.05 / (t + 0.05));
    case SignalName::kQuadChirp:
      return std::sin(kPi / 3.0 * t * (n * t));
    case SignalName::kMishMash:
      return std::sin(kPi / 3.0 * t * (n * t)) + std::sin(kPi * (n * 0.6902) * t) +
             std::sin(kPi * t * (n * 0.125) * t);
  }
  return 0.0;
}

}  // namespace

std::string_view to_string(SignalName name) {
  switch (name) {
    case SignalName::kBlocks: return "Blocks";
    case SignalName::kBumps: return "Bumps";
    case SignalName::kHeavySine: return "HeavySine";
    case SignalName::kDoppler: return "Doppler";
    case SignalName::kQuadChirp: return "QuadChirp";
    case SignalName::kMishMash: return "MishMash";
  }
  return "Unknown";
}

SignalName parse_signal_name(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "heavysin") return SignalName::kHeavySine;
  for (SignalName name : kAllSignals) {
    std::string candidate(to_string(name));
    std::transform(candidate.begin(), candidate.end(), candidate.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (candidate == lower) return name;
  }
  throw std::invalid_argument("unknown signal '" + std::string(text) + "'");
}

TestSignal gen_signal(SignalName name, std::size_t n) {
  if (!is_dyadic(n) || n < 64) {
    throw std::invalid_argument("gen_signal: n must be a power of two >= 64");
  }
  TestSignal sig{name, std::vector<double>(n), kNominalStd};
  const double nd = static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) {
    sig.samples[i] = raw_value(name, static_cast<double>(i + 1) / nd, nd);
  }
  const double mean = std::accumulate(sig.samples.begin(), sig.samples.end(), 0.0) / nd;
  double ss = 0.0;
  for (double v : sig.samples) ss += (v - mean) * (v - mean);
  const double sd = std::sqrt(ss / (nd - 1.0));
  for (double& v : sig.samples) v *= kNominalStd / sd;
  return sig;
}

Histogram coefficient_histogram(std::span<const double> signal, int levels, std::size_t bins) {
  if (bins == 0) throw std::invalid_argument("histogram needs at least one bin");
  const std::vector<double> details = dwt_forward(signal, levels).flatten_details();
  Histogram h;
  const auto [lo, hi] = std::minmax_element(details.begin(), details.end());
  h.lo = *lo;
  h.hi = *hi;
  h.counts.assign(bins, 0);
  const double width = h.hi > h.lo ? (h.hi - h.lo) / static_cast<double>(bins) : 1.0;
  for (double c : details) {
    auto k = static_cast<std::size_t>((c - h.lo) / width);
    h.counts[std::min(k, bins - 1)] += 1;
  }
  return h;
}

}  // namespace nide
