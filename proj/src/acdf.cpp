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
#include "cdfge/acdf.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>

#include "cdfge/error.hpp"
#include "cdfge/hamiltonian.hpp"

namespace cdfge {

namespace {

// g(x) = 1/2 + scale sum_k [A_k sin(j x) + B_k cos(j x)], grad likewise.
AcdfCurve evaluate_grouped(const std::vector<double> &A, const std::vector<double> &B,
                           double scale, const std::vector<double> &grid) {
    AcdfCurve c;
    c.grid = grid;
    c.g_values.resize(grid.size());
    c.grad_values.resize(grid.size());
    std::vector<std::size_t> active;
    for (std::size_t k = 0; k < A.size(); ++k) {
        if (A[k] != 0.0 || B[k] != 0.0) {
            active.push_back(k);
        }
    }
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double x = grid[i];
        double g = 0.0;
        double gr = 0.0;
        for (std::size_t k : active) {
            const double j = 2.0 * static_cast<double>(k) + 1.0;
            const double s = std::sin(j * x);
            const double co = std::cos(j * x);
            g += A[k] * s + B[k] * co;
            gr += j * (A[k] * co - B[k] * s);
        }
        c.g_values[i] = 0.5 + scale * g;
        c.grad_values[i] = scale * gr;
    }
    return c;
}

} // namespace

std::string mode_name(SampleMode mode) {
    return mode == SampleMode::Exact ? "exact" : "single-shot";
}

std::vector<double> make_grid(double delta) {
    if (!(delta > 0.0)) {
        throw DomainError("make_grid: delta must be positive");
    }
    const double two_pi = 2.0 * std::numbers::pi;
    const double h = std::min(delta / 4.0, two_pi / 4096.0);
    const auto n = static_cast<std::size_t>(std::ceil(two_pi / h - 1e-9));
    std::vector<double> grid(n);
    for (std::size_t i = 0; i < n; ++i) {
        grid[i] = -std::numbers::pi + two_pi * static_cast<double>(i) / static_cast<double>(n);
    }
    return grid;
}

AcdfSampleBatch draw_batch(const FourierSeries &fs, const AliasTable &table,
                           const MomentSet &moments, std::int64_t m,
                           SampleMode mode, std::uint64_t seed) {
    if (m < 1) {
        throw DomainError("draw_batch: m must be >= 1");
    }
    if (moments.d() < fs.d) {
        throw DomainError("draw_batch: moment set shorter than the series");
    }
    AcdfSampleBatch b;
    b.mode = mode;
    b.seed = seed;
    const auto um = static_cast<std::size_t>(m);
    b.k.resize(um);
    b.re_obs.resize(um);
    b.im_obs.resize(um);
    for (std::size_t i = 0; i < um; ++i) {
        CounterRng idx(seed, kStreamIndex, 2 * i);
        const int k = sample_index(table, idx);
        const int j = 2 * k + 1;
        const auto g = moments.odd[static_cast<std::size_t>(k)];
        b.k[i] = k;
        if (mode == SampleMode::Exact) {
            b.re_obs[i] = g.real();
            b.im_obs[i] = g.imag();
        } else {
            CounterRng shot(seed, kStreamShotBase + static_cast<std::uint64_t>(j), 2 * i);
            const auto rec = hadamard_shot(j, g, shot);
            b.re_obs[i] = rec.x_outcome;
            b.im_obs[i] = rec.y_outcome;
        }
    }
    return b;
}

AcdfCurve evaluate_acdf(const AcdfSampleBatch &batch, const FourierSeries &fs,
                        const std::vector<double> &grid) {
    if (batch.size() == 0) {
        throw DomainError("evaluate_acdf: empty batch");
    }
    std::vector<double> A(fs.coeff_mags.size(), 0.0);
    std::vector<double> B(fs.coeff_mags.size(), 0.0);
    for (std::size_t i = 0; i < batch.size(); ++i) {
        const auto k = static_cast<std::size_t>(batch.k[i]);
        if (k >= A.size()) {
            throw DomainError("evaluate_acdf: index beyond series length");
        }
        A[k] += batch.re_obs[i];
        B[k] += batch.im_obs[i];
    }
    const auto M = static_cast<double>(batch.size());
    auto c = evaluate_grouped(A, B, 2.0 * fs.norm_F / M, grid);
    c.norm_F = fs.norm_F;
    c.m_samples = static_cast<std::int64_t>(batch.size());
    return c;
}

AcdfCurve deterministic_acdf(const FourierSeries &fs, const MomentSet &moments,
                             const std::vector<double> &grid) {
    if (moments.d() < fs.d) {
        throw DomainError("deterministic_acdf: moment set shorter than the series");
    }
    std::vector<double> A(fs.coeff_mags.size());
    std::vector<double> B(fs.coeff_mags.size());
    for (std::size_t k = 0; k < A.size(); ++k) {
        A[k] = fs.coeff_mags[k] * moments.odd[k].real();
        B[k] = fs.coeff_mags[k] * moments.odd[k].imag();
    }
    auto c = evaluate_grouped(A, B, 2.0, grid);
    c.norm_F = fs.norm_F;
    c.m_samples = 0;
    return c;
}

double acdf_value(const FourierSeries &fs, const MomentSet &moments, double x) {
    double s = 0.0;
    for (std::size_t k = 0; k < fs.coeff_mags.size(); ++k) {
        const double j = 2.0 * static_cast<double>(k) + 1.0;
        const auto g = moments.odd[k];
        s += fs.coeff_mags[k] * (g.real() * std::sin(j * x) + g.imag() * std::cos(j * x));
    }
    return 0.5 + 2.0 * s;
}

EstimatorStats estimator_stats(const std::vector<AcdfCurve> &curves) {
    if (curves.size() < 2) {
        throw DomainError("estimator_stats: need at least two curves");
    }
    const std::size_t n = curves.front().g_values.size();
    EstimatorStats st;
    st.mean.assign(n, 0.0);
    st.variance.assign(n, 0.0);
    for (const auto &c : curves) {
        if (c.g_values.size() != n) {
            throw DomainError("estimator_stats: curves on different grids");
        }
        for (std::size_t i = 0; i < n; ++i) {
            st.mean[i] += c.g_values[i];
        }
    }
    const auto R = static_cast<double>(curves.size());
    for (auto &v : st.mean) {
        v /= R;
    }
    for (const auto &c : curves) {
        for (std::size_t i = 0; i < n; ++i) {
            const double d = c.g_values[i] - st.mean[i];
            st.variance[i] += d * d;
        }
    }
    for (auto &v : st.variance) {
        v /= (R - 1.0);
    }
    return st;
}

double median_of_means(std::vector<double> values) {
    if (values.empty()) {
        throw DomainError("median_of_means: empty input");
    }
    const auto mid = (values.size() - 1) / 2;
    std::nth_element(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(mid),
                     values.end());
    return values[mid];
}

JumpDecision decide_jump(double g_value, double eta, double epsilon) {
    if (!(eta > 2.0 * epsilon)) {
        throw DomainError("decide_jump: requires eta > 2 epsilon");
    }
    return g_value < 0.5 * eta ? JumpDecision::BelowEta : JumpDecision::AboveZero;
}

void write_curve_csv(std::ostream &os, const AcdfCurve &c) {
    os << "x,g,grad\n";
    for (std::size_t i = 0; i < c.grid.size(); ++i) {
        os << format_double(c.grid[i]) << ',' << format_double(c.g_values[i]) << ','
           << format_double(c.grad_values[i]) << '\n';
    }
}

} // namespace cdfge
