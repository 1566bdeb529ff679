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
#include <iosfwd>
#include <vector>

#include "cdfge/rng.hpp"

namespace cdfge {

/// Truncated Fourier series of the smoothed periodic Heaviside function.
struct FourierSeries {
    double beta = 1.0;
    int d = 0;
    int D = 1;
    std::vector<double> coeff_mags; ///< |F_{2k+1}|, k = 0..d
    double f0 = 0.5;
    double norm_F = 0.0;
};

/// beta = max[1, W0(2 / (pi eps^2)) / (4 sin^2 delta)].
double select_beta(double delta, double epsilon);

FourierSeries coefficients(double beta, int d);

/// beta from select_beta and d from the maximal-runtime bound.
FourierSeries design_filter(double epsilon, double delta);

/// F(x) = 1/2 + 2 sum_k |F_{2k+1}| sin((2k+1) x).
double evaluate_series(const FourierSeries &fs, double x);

/// Walker alias table over coeff_mags / norm_F.
class AliasTable {
  public:
    explicit AliasTable(const std::vector<double> &weights);

    /// Consumes two uniforms from rng.
    [[nodiscard]] int sample(CounterRng &rng) const;
    [[nodiscard]] std::size_t size() const { return prob_.size(); }
    [[nodiscard]] double probability(std::size_t k) const { return p_[k]; }

  private:
    std::vector<double> prob_;
    std::vector<int> alias_;
    std::vector<double> p_;
};

/// k ~ |F_{2k+1}| / norm_F.
int sample_index(const AliasTable &table, CounterRng &rng);

/// Reference sampler: cumulative linear scan (one uniform).
int sample_index_linear(const FourierSeries &fs, CounterRng &rng);

void write_series_csv(std::ostream &os, const FourierSeries &fs);

} // namespace cdfge
