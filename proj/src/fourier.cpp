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
#include "cdfge/fourier.hpp"

#include <cmath>
#include <numbers>
#include <ostream>

#include "cdfge/error.hpp"
#include "cdfge/hamiltonian.hpp"
#include "cdfge/resources.hpp"
#include "cdfge/specfun.hpp"

namespace cdfge {

double select_beta(double delta, double epsilon) {
    if (!(delta > 0.0 && delta < std::numbers::pi / 6.0)) {
        throw DomainError("select_beta: delta must lie in (0, pi/6)");
    }
    if (!(epsilon > 0.0 && epsilon < 1.0)) {
        throw DomainError("select_beta: epsilon must lie in (0, 1)");
    }
    const double w = specfun::lambert_w0(2.0 / (std::numbers::pi * epsilon * epsilon));
    const double s = std::sin(delta);
    return std::max(1.0, w / (4.0 * s * s));
}

FourierSeries coefficients(double beta, int d) {
    if (d < 0) {
        throw DomainError("coefficients: d must be non-negative");
    }
    if (!(beta > 0.0)) {
        throw DomainError("coefficients: beta must be positive");
    }
    FourierSeries fs;
    fs.beta = beta;
    fs.d = d;
    fs.D = 2 * d + 1;
    const auto I = specfun::bessel_i_scaled_seq(d + 1, beta);
    const double pref = std::sqrt(beta / (2.0 * std::numbers::pi));
    fs.coeff_mags.resize(static_cast<std::size_t>(d) + 1);
    for (int j = 0; j <= d; ++j) {
        const auto uj = static_cast<std::size_t>(j);
        const double num = (j < d) ? I[uj] + I[uj + 1] : I[uj];
        fs.coeff_mags[uj] = pref * num / (2.0 * j + 1.0);
    }
    double s = 0.0;
    for (double c : fs.coeff_mags) {
        s += c;
    }
    fs.norm_F = s;
    return fs;
}

FourierSeries design_filter(double epsilon, double delta) {
    const double beta = select_beta(delta, epsilon);
    const int D = theorem1_D(epsilon, delta);
    return coefficients(beta, (D - 1) / 2);
}

double evaluate_series(const FourierSeries &fs, double x) {
    double s = 0.0;
    for (std::size_t k = 0; k < fs.coeff_mags.size(); ++k) {
        s += fs.coeff_mags[k] * std::sin((2.0 * static_cast<double>(k) + 1.0) * x);
    }
    return fs.f0 + 2.0 * s;
}

AliasTable::AliasTable(const std::vector<double> &weights) {
    const std::size_t n = weights.size();
    if (n == 0) {
        throw DomainError("alias table: empty weight vector");
    }
    double total = 0.0;
    for (double w : weights) {
        if (!(w >= 0.0)) {
            throw DomainError("alias table: negative weight");
        }
        total += w;
    }
    if (!(total > 0.0)) {
        throw DomainError("alias table: weights sum to zero");
    }
    p_.resize(n);
    prob_.assign(n, 1.0);
    alias_.resize(n);
    std::vector<double> scaled(n);
    std::vector<int> small;
    std::vector<int> large;
    for (std::size_t i = 0; i < n; ++i) {
        p_[i] = weights[i] / total;
        alias_[i] = static_cast<int>(i);
        scaled[i] = p_[i] * static_cast<double>(n);
        (scaled[i] < 1.0 ? small : large).push_back(static_cast<int>(i));
    }
    while (!small.empty() && !large.empty()) {
        const int s = small.back();
        small.pop_back();
        const int l = large.back();
        prob_[static_cast<std::size_t>(s)] = scaled[static_cast<std::size_t>(s)];
        alias_[static_cast<std::size_t>(s)] = l;
        scaled[static_cast<std::size_t>(l)] =
            (scaled[static_cast<std::size_t>(l)] + scaled[static_cast<std::size_t>(s)]) - 1.0;
        if (scaled[static_cast<std::size_t>(l)] < 1.0) {
            large.pop_back();
            small.push_back(l);
        }
    }
    // leftovers are 1 up to rounding
    for (int i : small) {
        prob_[static_cast<std::size_t>(i)] = 1.0;
    }
    for (int i : large) {
        prob_[static_cast<std::size_t>(i)] = 1.0;
    }
}

int AliasTable::sample(CounterRng &rng) const {
    const double u = rng.uniform() * static_cast<double>(prob_.size());
    auto col = static_cast<std::size_t>(u);
    if (col >= prob_.size()) {
        col = prob_.size() - 1;
    }
    const double v = rng.uniform();
    return v < prob_[col] ? static_cast<int>(col) : alias_[col];
}

int sample_index(const AliasTable &table, CounterRng &rng) {
    return table.sample(rng);
}

int sample_index_linear(const FourierSeries &fs, CounterRng &rng) {
    if (!(fs.norm_F > 0.0)) {
        throw DomainError("sample_index: norm_F must be positive");
    }
    const double u = rng.uniform() * fs.norm_F;
    double c = 0.0;
    for (std::size_t k = 0; k < fs.coeff_mags.size(); ++k) {
        c += fs.coeff_mags[k];
        if (u < c) {
            return static_cast<int>(k);
        }
    }
    return fs.d;
}

void write_series_csv(std::ostream &os, const FourierSeries &fs) {
    os << "# beta=" << format_double(fs.beta) << " d=" << fs.d << " D=" << fs.D
       << " norm_F=" << format_double(fs.norm_F) << '\n';
    os << "k,j,coeff_mag\n";
    for (std::size_t k = 0; k < fs.coeff_mags.size(); ++k) {
        os << k << ',' << 2 * k + 1 << ',' << format_double(fs.coeff_mags[k]) << '\n';
    }
}

} // namespace cdfge
