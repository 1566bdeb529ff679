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
#include "cdfge/resources.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "cdfge/error.hpp"
#include "cdfge/fourier.hpp"
#include "cdfge/specfun.hpp"

namespace cdfge {

namespace {

// f(beta, e) = -(ln e + beta) / W0(-(1 + ln(e) / beta) / e)
double f_bound(double beta, double e) {
    const double le = std::log(e);
    const double arg = -(1.0 + le / beta) / std::numbers::e;
    const double w = specfun::lambert_w0(arg);
    if (w == 0.0) {
        throw DomainError("theorem1: degenerate Lambert-W argument");
    }
    return -(le + beta) / w;
}

void check_sample_inputs(int D, double eta, double epsilon, double tau,
                         double vartheta) {
    if (D < 1) {
        throw DomainError("theorem2: D must be >= 1");
    }
    if (!(epsilon > 0.0) || !(eta > 2.0 * epsilon)) {
        throw DomainError("theorem2: requires eta > 2 epsilon");
    }
    if (!(vartheta > 0.0 && vartheta < 1.0)) {
        throw DomainError("theorem2: vartheta must lie in (0, 1)");
    }
    if (!(tau > 0.0) || !(tau * epsilon < 1.0 / std::numbers::e)) {
        throw DomainError("theorem2: requires tau epsilon < 1/e");
    }
}

double log_factor(double epsilon, double tau, double vartheta) {
    return std::log(std::log(1.0 / (tau * epsilon))) + std::log(1.0 / vartheta);
}

double norm_factor(int D) {
    return 2.07 / std::numbers::pi * (std::log(4.0 * D) + specfun::kGamma) + 1.0;
}

std::int64_t ceil_int(double v) {
    // absorb representation error of results that are integers in exact arithmetic
    const double c = std::ceil(v * (1.0 - 1e-12));
    if (!(c < 9.0e18)) {
        throw DomainError("integer resource estimate overflows");
    }
    return static_cast<std::int64_t>(c);
}

} // namespace

double theorem1_half_width(double epsilon, double delta) {
    const double beta = select_beta(delta, epsilon);
    const double w = specfun::lambert_w0(18.0 / (std::numbers::pi * epsilon * epsilon));
    const double e = std::min(1.0, 4.0 * std::exp(-0.5 * w));
    return std::sqrt(f_bound(beta, e) * w);
}

int theorem1_D(double epsilon, double delta) {
    const double h = theorem1_half_width(epsilon, delta);
    const double c = std::ceil(h);
    if (!(c < 1.0e9)) {
        throw DomainError("theorem1: D overflows");
    }
    return 2 * static_cast<int>(c) + 1;
}

double theorem2_M_real(int D, double eta, double epsilon, double tau,
                       double vartheta) {
    check_sample_inputs(D, eta, epsilon, tau, vartheta);
    const double q = norm_factor(D) / (eta - 2.0 * epsilon);
    return 2.0 * q * q * log_factor(epsilon, tau, vartheta);
}

std::int64_t theorem2_M(int D, double eta, double epsilon, double tau,
                        double vartheta) {
    const double m = theorem2_M_real(D, eta, epsilon, tau, vartheta);
    const double c = std::ceil(m);
    if (!(c < 9.0e18)) {
        throw DomainError("theorem2: M overflows");
    }
    return std::max<std::int64_t>(1, static_cast<std::int64_t>(c));
}

double resolvable_eta(double M, int D, double epsilon, double tau,
                      double vartheta) {
    if (!(M >= 1.0)) {
        throw DomainError("resolvable_eta: M must be >= 1");
    }
    // any eta > 2 eps passes the shared checks
    check_sample_inputs(D, 3.0 * epsilon, epsilon, tau, vartheta);
    return 2.0 * epsilon +
           norm_factor(D) * std::sqrt(2.0 * log_factor(epsilon, tau, vartheta) / M);
}

std::int64_t trotter_steps(double C, int p, double tau, int D, double epsilon) {
    if (!(C > 0.0) || p < 1 || !(tau > 0.0) || D < 1 || !(epsilon > 0.0)) {
        throw DomainError("trotter_steps: invalid arguments");
    }
    const double ip = 1.0 / p;
    const double r = std::pow(C, ip) * std::pow(tau * D, 1.0 + ip) *
                     std::pow(epsilon, -ip);
    return std::max<std::int64_t>(1, ceil_int(r));
}

std::int64_t circuit_depth(int n_sites, std::int64_t r, std::int64_t D) {
    if (n_sites < 1 || r < 1 || D < 1) {
        throw DomainError("circuit_depth: arguments must be >= 1");
    }
    return 2 * static_cast<std::int64_t>(n_sites) * r * D;
}

ResourceEstimate estimate_resources(const ResourceInputs &in) {
    ResourceEstimate e;
    e.epsilon = in.epsilon;
    e.delta = in.tau * in.epsilon;
    e.eta = in.eta;
    e.vartheta = in.vartheta;
    e.tau = in.tau;
    e.C = in.C;
    e.p = in.p;
    e.n_sites = in.n_sites;
    e.beta = select_beta(e.delta, e.epsilon);
    e.D = theorem1_D(e.epsilon, e.delta);
    e.norm_F = coefficients(e.beta, (e.D - 1) / 2).norm_F;
    e.M = theorem2_M(e.D, in.eta, in.epsilon, in.tau, in.vartheta);
    e.r_from_formula = in.C > 0.0;
    e.r = e.r_from_formula ? trotter_steps(in.C, in.p, in.tau, e.D, in.epsilon)
                           : in.r_fixed;
    e.depth = circuit_depth(in.n_sites, e.r, e.D);
    e.t_max = in.tau * e.D;
    return e;
}

} // namespace cdfge
