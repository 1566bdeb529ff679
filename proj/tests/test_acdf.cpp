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
#include <sstream>

#include "catch_amalgamated.hpp"

#include "cdfge/acdf.hpp"
#include "cdfge/error.hpp"

using namespace cdfge;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

SpectralMeasure three_level() {
    return SpectralMeasure{{{-0.4, 0.2}, {0.1, 0.5}, {0.9, 0.3}}};
}

} // namespace

TEST_CASE("Grid spacing", "[acdf]") {
    for (double delta : {0.5, 0.01, 0.0009}) {
        const auto g = make_grid(delta);
        const double h = g[1] - g[0];
        CHECK(h <= std::min(delta / 4, 2 * std::numbers::pi / 4096) * (1 + 1e-12));
        CHECK(g.front() == -std::numbers::pi);
        CHECK(g.back() < std::numbers::pi);
        CHECK_THAT(g.back() + h, WithinAbs(std::numbers::pi, 1e-12));
    }
    CHECK(make_grid(1.0).size() == 4096);
    REQUIRE_THROWS_AS(make_grid(0.0), DomainError);
}

TEST_CASE("Zero observations give one half", "[acdf]") {
    const auto fs = design_filter(0.1, 0.2);
    AcdfSampleBatch b;
    for (int i = 0; i < 50; ++i) {
        b.k.push_back(i % (fs.d + 1));
        b.re_obs.push_back(0.0);
        b.im_obs.push_back(0.0);
    }
    const auto c = evaluate_acdf(b, fs, make_grid(0.2));
    for (std::size_t i = 0; i < c.grid.size(); ++i) {
        CHECK(c.g_values[i] == 0.5);
        CHECK(c.grad_values[i] == 0.0);
    }
}

TEST_CASE("Deterministic limit matches the pointwise value", "[acdf]") {
    const auto fs = design_filter(0.05, 0.1);
    const auto mom = exact_moments(three_level(), fs.d);
    const auto grid = make_grid(0.1);
    const auto c = deterministic_acdf(fs, mom, grid);
    for (std::size_t i = 0; i < grid.size(); i += 37) {
        CHECK_THAT(c.g_values[i], WithinAbs(acdf_value(fs, mom, grid[i]), 1e-12));
    }
    // exact weights: averaging an exact-mode batch proportionally to p_k
    // reproduces the series once every index appears.
    const AliasTable t(fs.coeff_mags);
    const auto b = draw_batch(fs, t, mom, 200000, SampleMode::Exact, 3);
    const auto e = evaluate_acdf(b, fs, grid);
    for (std::size_t i = 0; i < grid.size(); i += 101) {
        CHECK_THAT(e.g_values[i], WithinAbs(c.g_values[i], 0.03));
    }
}

TEST_CASE("Deterministic curve approximates the smeared CDF", "[acdf]") {
    const double eps = 0.05;
    const double delta = 0.1;
    const auto fs = design_filter(eps, delta);
    const auto m = three_level();
    const auto mom = exact_moments(m, fs.d);
    for (double x = -1.5; x <= 1.5; x += 0.01) {
        const double lo = exact_cdf(m, x - delta);
        const double hi = exact_cdf(m, x + delta);
        const double g = acdf_value(fs, mom, x);
        CHECK(g >= lo - eps - 1e-12);
        CHECK(g <= hi + eps + 1e-12);
    }
}

TEST_CASE("Eigenstate step", "[acdf]") {
    const double eps = 0.02;
    const double delta = 0.05;
    const double l0 = 0.3;
    const auto fs = design_filter(eps, delta);
    const auto mom = exact_moments(SpectralMeasure{{{l0, 1.0}}}, fs.d);
    for (double x = l0 - std::numbers::pi + delta; x <= l0 - delta; x += 0.003) {
        CHECK(std::abs(acdf_value(fs, mom, x)) <= eps);
    }
    for (double x = l0 + delta; x <= l0 + std::numbers::pi - delta; x += 0.003) {
        CHECK(std::abs(acdf_value(fs, mom, x) - 1.0) <= eps);
    }
}

TEST_CASE("Exact mode passes moments through", "[acdf]") {
    const auto fs = design_filter(0.1, 0.2);
    const auto mom = exact_moments(three_level(), fs.d);
    const AliasTable t(fs.coeff_mags);
    const auto b = draw_batch(fs, t, mom, 500, SampleMode::Exact, 11);
    REQUIRE(b.size() == 500);
    for (std::size_t i = 0; i < b.size(); ++i) {
        REQUIRE(b.k[i] >= 0);
        REQUIRE(b.k[i] <= fs.d);
        const auto g = mom.at(2 * b.k[i] + 1);
        CHECK(b.re_obs[i] == g.real());
        CHECK(b.im_obs[i] == g.imag());
    }
    const auto again = draw_batch(fs, t, mom, 500, SampleMode::Exact, 11);
    CHECK(again.k == b.k);
}

TEST_CASE("Single-shot outcomes follow the moments", "[acdf]") {
    const auto fs = design_filter(0.3, 0.3);
    const auto mom = exact_moments(three_level(), fs.d);
    const AliasTable t(fs.coeff_mags);
    const auto b = draw_batch(fs, t, mom, 200000, SampleMode::SingleShot, 5);
    std::vector<double> n(static_cast<std::size_t>(fs.d) + 1, 0.0);
    std::vector<double> sx(n.size(), 0.0);
    std::vector<double> sy(n.size(), 0.0);
    for (std::size_t i = 0; i < b.size(); ++i) {
        CHECK(std::abs(b.re_obs[i]) == 1.0);
        CHECK(std::abs(b.im_obs[i]) == 1.0);
        const auto k = static_cast<std::size_t>(b.k[i]);
        n[k] += 1;
        sx[k] += b.re_obs[i];
        sy[k] += b.im_obs[i];
    }
    for (std::size_t k = 0; k < n.size(); ++k) {
        if (n[k] < 100) {
            continue;
        }
        const auto g = mom.odd[k];
        CHECK(std::abs(sx[k] / n[k] - g.real()) <= 4 * std::sqrt((1 - g.real() * g.real()) / n[k]) + 1e-12);
        CHECK(std::abs(sy[k] / n[k] - g.imag()) <= 4 * std::sqrt((1 - g.imag() * g.imag()) / n[k]) + 1e-12);
    }
}

TEST_CASE("Single-shot estimator is unbiased", "[acdf]") {
    const auto fs = design_filter(0.1, 0.2);
    const auto mom = exact_moments(three_level(), fs.d);
    const AliasTable t(fs.coeff_mags);
    const std::vector<double> pts{-1.0, -0.2, 0.0, 0.5, 1.2};
    std::vector<AcdfCurve> curves;
    for (std::uint64_t s = 1; s <= 200; ++s) {
        curves.push_back(evaluate_acdf(draw_batch(fs, t, mom, 2000, SampleMode::SingleShot, s), fs, pts));
    }
    const auto st = estimator_stats(curves);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const double se = std::sqrt(st.variance[i] / 200.0);
        CHECK(std::abs(st.mean[i] - acdf_value(fs, mom, pts[i])) <= 4 * se);
        // variance of a single shot estimate is at most 4 F^2 / M
        CHECK(st.variance[i] <= 1.3 * 4 * fs.norm_F * fs.norm_F / 2000.0);
    }
}

TEST_CASE("Gradient matches finite differences", "[acdf]") {
    const auto fs = design_filter(0.1, 0.2);
    const auto mom = exact_moments(three_level(), fs.d);
    const AliasTable t(fs.coeff_mags);
    const auto b = draw_batch(fs, t, mom, 3000, SampleMode::SingleShot, 9);
    const double h = 1e-5;
    for (double x : {-2.0, -0.3, 0.05, 0.7, 2.5}) {
        const auto c = evaluate_acdf(b, fs, {x - h, x, x + h});
        const double fd = (c.g_values[2] - c.g_values[0]) / (2 * h);
        CHECK_THAT(c.grad_values[1], WithinAbs(fd, 1e-5 * (1 + std::abs(fd))));
    }
}

TEST_CASE("Estimator statistics", "[acdf]") {
    AcdfCurve c;
    c.grid = {0.0, 1.0};
    c.g_values = {0.25, 0.75};
    c.grad_values = {0.0, 0.0};
    const auto st = estimator_stats({c, c, c});
    CHECK(st.mean == std::vector<double>{0.25, 0.75});
    CHECK(st.variance == std::vector<double>{0.0, 0.0});
    AcdfCurve d = c;
    d.g_values = {0.75, 0.25};
    const auto s2 = estimator_stats({c, d});
    CHECK_THAT(s2.mean[0], WithinAbs(0.5, 1e-15));
    CHECK_THAT(s2.variance[0], WithinAbs(0.125, 1e-15));
}

TEST_CASE("Median of means", "[acdf]") {
    CHECK(median_of_means({3.0, 1.0, 2.0}) == 2.0);
    CHECK(median_of_means({4.0, 1.0, 3.0, 2.0}) == 2.0);
    CHECK(median_of_means({5.0}) == 5.0);
}

TEST_CASE("Jump decision", "[acdf]") {
    CHECK(decide_jump(0.01, 0.2, 0.05) == JumpDecision::BelowEta);
    CHECK(decide_jump(0.1, 0.2, 0.05) == JumpDecision::AboveZero);
    CHECK(decide_jump(0.9, 0.2, 0.05) == JumpDecision::AboveZero);
    REQUIRE_THROWS_AS(decide_jump(0.5, 0.1, 0.05), DomainError);
}

TEST_CASE("Curve CSV", "[acdf]") {
    AcdfCurve c;
    c.grid = {-1.0, 0.5};
    c.g_values = {0.0, 1.0};
    c.grad_values = {0.25, -2.0};
    std::ostringstream os;
    write_curve_csv(os, c);
    CHECK(os.str() == "x,g,grad\n-1,0,0.25\n0.5,1,-2\n");
}
