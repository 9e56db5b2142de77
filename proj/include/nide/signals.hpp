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

#ifndef NIDE_SIGNALS_HPP_
#define NIDE_SIGNALS_HPP_

#include <array>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace nide {

enum class SignalName { kBlocks, kBumps, kHeavySine, kDoppler, kQuadChirp, kMishMash };

inline constexpr std::array<SignalName, 6> kAllSignals = {
    SignalName::kBlocks,  SignalName::kBumps,     SignalName::kHeavySine,
    SignalName::kDoppler, SignalName::kQuadChirp, SignalName::kMishMash};

std::string_view to_string(SignalName name);
// Case-insensitive; accepts "heavysin" as an alias of "heavysine".
SignalName parse_signal_name(std::string_view text);

// Standard deviation every generated signal is scaled to.
inline constexpr double kNominalStd = 7.0;

struct TestSignal {
  SignalName name;
  std::vector<double> samples;
  double nominal_norm = kNominalStd;
};

// Samples on t = (1..n)/n, rescaled to sample standard deviation 7.
// Blocks, Bumps, HeavySine and Doppler are functions of t alone; QuadChirp
// and MishMash follow the usual n-dependent chirp rates.
// Throws std::invalid_argument unless n is a power of two >= 64.
TestSignal gen_signal(SignalName name, std::size_t n);

struct Histogram {
  double lo = 0.0;
  double hi = 0.0;
  std::vector<std::size_t> counts;

  double bin_width() const { return counts.empty() ? 0.0 : (hi - lo) / static_cast<double>(counts.size()); }
};

// Histogram of all Haar detail coefficients over [min, max].
Histogram coefficient_histogram(std::span<const double> signal, int levels, std::size_t bins);

}  // namespace nide

#endif  // NIDE_SIGNALS_HPP_
