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
#include <functional>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "cdfge/evolution.hpp"
#include "cdfge/fourier.hpp"

namespace cdfge {

enum class SampleMode { Exact, SingleShot };

struct AcdfSampleBatch {
    std::vector<int> k;
    std::vector<double> re_obs;
    std::vector<double> im_obs;
    SampleMode mode = SampleMode::Exact;
    std::uint64_t seed = 0;

    [[nodiscard]] std::size_t size() const { return k.size(); }
};

struct AcdfCurve {
    std::vector<double> grid;
    std::vector<double> g_values;
    std::vector<double> grad_values;
    double norm_F = 0.0;
    std::int64_t m_samples = 0;
};

/// Uniform grid over [-pi, pi) with spacing at most min(delta/4, 2 pi/4096).
std::vector<double> make_grid(double delta);

/**
 * @brief Draw m (index, observation) pairs.
 *
 * Index i uses stream kStreamIndex at counter 2i; the shot pair for index i
 * uses stream kStreamShotBase + j at counter 2i.
 */
AcdfSampleBatch draw_batch(const FourierSeries &fs, const AliasTable &table,
                           const MomentSet &moments, std::int64_t m,
                           SampleMode mode, std::uint64_t seed);

AcdfCurve evaluate_acdf(const AcdfSampleBatch &batch, const FourierSeries &fs,
                        const std::vector<double> &grid);

/// M -> infinity limit: the deterministic series with exact weights.
AcdfCurve deterministic_acdf(const FourierSeries &fs, const MomentSet &moments,
                             const std::vector<double> &grid);

/// Deterministic value at one point.
double acdf_value(const FourierSeries &fs, const MomentSet &moments, double x);

struct EstimatorStats {
    std::vector<double> mean;
    std::vector<double> variance;
};

EstimatorStats estimator_stats(const std::vector<AcdfCurve> &curves);

/// Lower median of the supplied values.
double median_of_means(std::vector<double> values);

enum class JumpDecision { BelowEta, AboveZero };

JumpDecision decide_jump(double g_value, double eta, double epsilon);

void write_curve_csv(std::ostream &os, const AcdfCurve &c);

std::string mode_name(SampleMode mode);

} // namespace cdfge
