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

/// Real-valued sqrt(f(beta, min[1, 4 e^{-w/2}]) w) before the ceiling.
double theorem1_half_width(double epsilon, double delta);

/// Maximal runtime D = 2 ceil(...) + 1.
int theorem1_D(double epsilon, double delta);

/// Real-valued sample bound before the ceiling.
double theorem2_M_real(int D, double eta, double epsilon, double tau,
                       double vartheta);

std::int64_t theorem2_M(int D, double eta, double epsilon, double tau,
                        double vartheta);

/// Smallest resolvable jump for a sample budget M.
double resolvable_eta(double M, int D, double epsilon, double tau,
                      double vartheta);

/// r = ceil(C^{1/p} (tau D)^{1 + 1/p} eps^{-1/p}).
std::int64_t trotter_steps(double C, int p, double tau, int D, double epsilon);

std::int64_t circuit_depth(int n_sites, std::int64_t r, std::int64_t D);

struct ResourceEstimate {
    int D = 1;
    std::int64_t M = 1;
    std::int64_t r = 1;
    std::int64_t depth = 0;
    double t_max = 0.0;
    double beta = 1.0;
    double norm_F = 0.0;
    // inputs
    double epsilon = 0.0;
    double delta = 0.0;
    double eta = 0.0;
    double vartheta = 0.0;
    double tau = 0.0;
    double C = 0.0;
    int p = 2;
    int n_sites = 0;
    bool r_from_formula = false;
};

struct ResourceInputs {
    double epsilon = 0.1;
    double eta = 0.3;
    double vartheta = 0.05;
    double tau = 1.0;
    int n_sites = 1;
    /// Fixed r when C <= 0, otherwise the product-formula bound.
    int r_fixed = 8;
    double C = 0.0;
    int p = 2;
};

ResourceEstimate estimate_resources(const ResourceInputs &in);

} // namespace cdfge
