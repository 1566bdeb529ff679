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
#include <cmath>
#include <numbers>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "catch_amalgamated.hpp"

#include "cdfge/error.hpp"
#include "cdfge/fourier.hpp"
#include "cdfge/resources.hpp"

using namespace cdfge;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;
using big = boost::multiprecision::cpp_bin_float_50;

namespace {

big w0(const big &x) {
    big w = x > 1 ? log(x) : big(0);
    if (x < big("-0.3")) {
        w = big("-0.9");
    }
    for (int i = 0; i < 400; ++i) {
        const big ew = exp(w);
        const big step = (w * ew - x) / (ew * (w + 1));
        w -= step;
        if (abs(step) < big("1e-48")) {
            break;
        }
    }
    return w;
}

// Same formulas, 50 digits.
double half_width_oracle(double eps, double delta) {
    const big pi = boost::math::constants::pi<big>();
    const big e = big(eps);
    const big s = sin(big(delta));
    big beta = w0(2 / (pi * e * e)) / (4 * s * s);
    if (beta < 1) {
        beta = 1;
    }
    const big w = w0(18 / (pi * e * e));
    big arg = 4 * exp(-w / 2);
    if (arg > 1) {
        arg = 1;
    }
    const big la = log(arg);
    const big f = -(la + beta) / w0(-(1 + la / beta) / exp(big(1)));
    return static_cast<double>(sqrt(f * w));
}

double m_oracle(int D, double eta, double eps, double tau, double th) {
    const big pi = boost::math::constants::pi<big>();
    const big q = (big("2.07") / pi * (log(big(4) * D) + big("0.57721567")) + 1) /
                  (big(eta) - 2 * big(eps));
    return static_cast<double>(2 * q * q * (log(log(1 / (big(tau) * big(eps)))) + log(1 / big(th))));
}

} // namespace

TEST_CASE("Theorem 1 maximal runtime", "[resources]") {
    for (auto [eps, delta] : {std::pair{0.1, 0.1}, std::pair{0.1, 0.2}, std::pair{0.02, 0.05},
                              std::pair{0.055, 0.0155}, std::pair{0.019, 0.0009}, std::pair{0.9, 0.5}}) {
        INFO("eps=" << eps << " delta=" << delta);
        CHECK_THAT(theorem1_half_width(eps, delta), WithinRel(half_width_oracle(eps, delta), 1e-9));
        const int D = theorem1_D(eps, delta);
        CHECK(D % 2 == 1);
        CHECK(D >= 3);
        CHECK(D == 2 * static_cast<int>(std::ceil(half_width_oracle(eps, delta))) + 1);
    }
    int prev = 1 << 30;
    for (double eps = 0.01; eps < 0.99; eps += 0.01) {
        const int D = theorem1_D(eps, 0.1);
        CHECK(D <= prev);
        prev = D;
    }
}

TEST_CASE("Theorem 1 clamp branch gives f = beta", "[resources]") {
    // min[1, 4 e^{-w/2}] = 1 needs w <= 2 ln 4, i.e. large epsilon
    const double eps = 0.95;
    const double delta = 0.05;
    const double w = std::log(18.0 / (std::numbers::pi * eps * eps));
    REQUIRE(4.0 * std::exp(-0.5 * w) >= 1.0);
    const double beta = select_beta(delta, eps);
    const double wl = [&] {
        double x = 18.0 / (std::numbers::pi * eps * eps);
        double v = std::log(x);
        for (int i = 0; i < 50; ++i) {
            v -= (v * std::exp(v) - x) / (std::exp(v) * (v + 1));
        }
        return v;
    }();
    CHECK_THAT(theorem1_half_width(eps, delta), WithinRel(std::sqrt(beta * wl), 1e-12));
}

TEST_CASE("Theorem 2 sample count", "[resources]") {
    CHECK_THAT(theorem2_M_real(101, 0.3, 0.05, 0.2, 0.05),
               WithinRel(m_oracle(101, 0.3, 0.05, 0.2, 0.05), 1e-9));
    CHECK(theorem2_M(101, 0.3, 0.05, 0.2, 0.05) ==
          static_cast<std::int64_t>(std::ceil(m_oracle(101, 0.3, 0.05, 0.2, 0.05))));
    // divergence near eta = 2 eps
    const auto far = theorem2_M(101, 0.2, 0.05, 0.2, 0.05);
    const auto near = theorem2_M(101, 0.1 + 1e-6, 0.05, 0.2, 0.05);
    CHECK(near > 1000 * far);
    // quadratic in (eta - 2 eps)
    const double m1 = theorem2_M_real(101, 0.2, 0.05, 0.2, 0.05);
    const double m2 = theorem2_M_real(101, 0.3, 0.05, 0.2, 0.05);
    CHECK_THAT(m1 / m2, WithinRel(4.0, 1e-12));
    REQUIRE_THROWS_AS(theorem2_M(101, 0.1, 0.05, 0.2, 0.05), DomainError);
    REQUIRE_THROWS_AS(theorem2_M(101, 0.3, 0.05, 10.0, 0.05), DomainError);
}

TEST_CASE("Resolvable eta inverts the sample count", "[resources]") {
    const int D = 317;
    const double eps = 0.01;
    const double tau = 0.28;
    const double th = 0.05;
    double prev = INFINITY;
    for (double M = 1e2; M <= 1e12; M *= 10) {
        const double eta = resolvable_eta(M, D, eps, tau, th);
        CHECK(eta < prev);
        CHECK(eta > 2 * eps);
        prev = eta;
        const auto back = theorem2_M(D, eta, eps, tau, th);
        CHECK(static_cast<double>(back) >= M * (1 - 1e-9));
        CHECK(static_cast<double>(back) <= M * (1 + 1e-6) + 1);
    }
    CHECK_THAT(resolvable_eta(1e30, D, eps, tau, th), WithinRel(2 * eps, 1e-9));
}

TEST_CASE("Trotter steps and depth", "[resources]") {
    CHECK(trotter_steps(1.0, 2, 0.25, 4, 0.01) == 10);
    CHECK(trotter_steps(2.0, 1, 1.5, 2, 0.1) == 180);
    std::int64_t prev = 0;
    for (double eps = 0.5; eps > 1e-4; eps /= 2) {
        const auto r = trotter_steps(1.0, 2, 0.1, 101, eps);
        CHECK(r >= prev);
        prev = r;
    }
    CHECK(circuit_depth(26, 8, 6600) == 2745600);
    CHECK(circuit_depth(1, 1, 1) == 2);
    CHECK(circuit_depth(6, 8, 700) == 2 * circuit_depth(6, 8, 350));
    REQUIRE_THROWS_AS(circuit_depth(0, 1, 1), DomainError);
}

TEST_CASE("Resource estimate bundle", "[resources]") {
    ResourceInputs in;
    in.epsilon = 0.055;
    in.eta = 0.2;
    in.tau = 0.28;
    in.n_sites = 6;
    const auto e = estimate_resources(in);
    CHECK(e.D == theorem1_D(0.055, 0.28 * 0.055));
    CHECK(e.r == 8);
    CHECK(e.depth == 2 * 6 * 8 * e.D);
    CHECK_THAT(e.t_max, WithinRel(0.28 * e.D, 1e-15));
    in.C = 1.0;
    const auto f = estimate_resources(in);
    CHECK(f.r_from_formula);
    CHECK(f.r == trotter_steps(1.0, 2, 0.28, f.D, 0.055));
}
