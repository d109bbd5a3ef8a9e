// SPDX-License-Identifier: Apache-2.0
//
// Copyright 2026 eese contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef EESE_RNG_HPP
#define EESE_RNG_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>

namespace eese {

// Golden-ratio increment used by the SplitMix64 generator (Steele, Lea &
// Flood, "Fast splittable pseudorandom number generators", OOPSLA 2014).
inline constexpr std::uint64_t kSplitMix64Gamma = 0x9e3779b97f4a7c15ULL;

// SplitMix64 output (finalization) function: a bijective avalanche mix of a
// 64-bit word.  Statistically weak inputs (0, 1, 2, ...) map to well-spread
// outputs, which is exactly what seeding from a counter needs.
constexpr std::uint64_t splitmix64(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Seed for one Monte Carlo trial, derived only from (master_seed, trial
// index).  This is the (index+1)-th output of a SplitMix64 stream whose state
// starts at master_seed, so any trial's seed can be computed independently of
// every other trial.  That makes trial results order- and thread-invariant.
constexpr std::uint64_t trial_seed(std::uint64_t master_seed,
                                   std::uint64_t trial_index) noexcept {
    return splitmix64(master_seed + (trial_index + 1) * kSplitMix64Gamma);
}

// Random stream for channel generation.  Wraps std::mt19937_64, whose output
// sequence for a given seed is fixed by the standard, and converts to uniform
// and circularly-symmetric complex Gaussian variates without going through
// std::*_distribution (whose algorithms are implementation-defined).  The
// same seed therefore reproduces the same channel on every platform, up to
// libm rounding in log/cos/sin.
class ChannelRng {
  public:
    explicit ChannelRng(std::uint64_t seed) : engine_(seed) {}

    // Uniform on [0, 1) with 53-bit resolution.
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    // One CN(0, 1) draw: squared radius ~ Exp(1), phase uniform on [0, 2*pi).
    // E[Re^2] = E[Im^2] = 1/2 and E[|.|^2] = 1.
    std::complex<double> complex_gaussian() {
        const double u = 1.0 - uniform();  // (0, 1]: keeps log() finite
        const double radius = std::sqrt(-std::log(u));
        const double phase = 2.0 * std::numbers::pi * uniform();
        return {radius * std::cos(phase), radius * std::sin(phase)};
    }

  private:
    std::mt19937_64 engine_;
};

}  // namespace eese

#endif  // EESE_RNG_HPP
