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
#include <vector>

namespace cdfge::specfun {

/// Euler-Mascheroni constant at the precision used by the sample bound.
inline constexpr double kGamma = 0.57721567;

/// Principal branch W0 of the Lambert-W function, x >= -1/e.
double lambert_w0(double x);

/// e^{-beta} I_n(beta), the exponentially scaled modified Bessel function.
double bessel_i_scaled(std::int64_t n, double beta);

/// e^{-beta} I_k(beta) for k = 0..nmax from a single backward recurrence.
std::vector<double> bessel_i_scaled_seq(std::int64_t nmax, double beta);

/// Error function with erf(-x) == -erf(x) bit for bit.
double erf(double x);

/// Regularized incomplete beta I_x(a, b).
double incomplete_beta(double a, double b, double x);

/// CDF of the F(d1, d2) distribution.
double f_distribution_cdf(double f, int d1, int d2);

enum class HarmonicMode { Exact, Asymptotic };

double harmonic(std::int64_t n, HarmonicMode mode = HarmonicMode::Exact);

} // namespace cdfge::specfun
