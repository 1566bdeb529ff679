// Copyright 2026 The cdfge Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <cstdint>

namespace cdfge {

/**
 * @brief Counter-based generator.
 *
 * Every value is a pure function of (seed, stream, counter), so draws can be
 * evaluated in any order or in parallel and still reproduce bit for bit.
 */
class CounterRng {
  public:
    CounterRng(std::uint64_t seed, std::uint64_t stream,
               std::uint64_t counter = 0)
        : key_{mix(mix(seed) ^ (stream * 0xD1B54A32D192ED03ULL))},
          counter_{counter} {}

    std::uint64_t next_u64();
    /// Uniform on [0, 1).
    double uniform();
    /// Standard normal via Box-Muller (consumes two uniforms).
    double normal();

    [[nodiscard]] std::uint64_t counter() const { return counter_; }

    static std::uint64_t mix(std::uint64_t z);

  private:
    std::uint64_t key_;
    std::uint64_t counter_;
};

/// Child seed for repetition / sub-experiment `index` of a root seed.
std::uint64_t derive_seed(std::uint64_t root, std::uint64_t index);

// Stream identifiers shared across modules.
inline constexpr std::uint64_t kStreamCouplings = 1;
inline constexpr std::uint64_t kStreamState = 2;
inline constexpr std::uint64_t kStreamIndex = 3;
/// Hadamard shots for moment j use stream kStreamShotBase + j.
inline constexpr std::uint64_t kStreamShotBase = 1000;

} // namespace cdfge
