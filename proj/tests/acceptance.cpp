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
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include <boost/math/quadrature/tanh_sinh.hpp>

#include "cdfge/acdf.hpp"
#include "cdfge/detect.hpp"
#include "cdfge/evolution.hpp"
#include "cdfge/fourier.hpp"
#include "cdfge/hamiltonian.hpp"
#include "cdfge/pipeline.hpp"
#include "cdfge/resources.hpp"
#include "cdfge/rng.hpp"
#include "cdfge/specfun.hpp"
#include "cdfge/states.hpp"

using namespace cdfge;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int id, bool ok, const std::string &detail, Clock::time_point t0) {
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    std::printf("criterion %2d: %s  %s  [%.1fs]\n", id, ok ? "PASS" : "FAIL", detail.c_str(), secs);
    std::fflush(stdout);
    failures += ok ? 0 : 1;
}

std::string fmt(const char *f, double a) {
    char buf[128];
    std::snprintf(buf, sizeof buf, f, a);
    return buf;
}

Hamiltonian heisenberg(int n) { return normalize(build_heisenberg_full(n, 1)); }

void c1() {
    const auto t0 = Clock::now();
    bool ok = true;
    std::string detail;
    for (auto [delta, eps] : {std::pair{0.2, 0.1}, std::pair{0.05, 0.02}}) {
        const auto fs = design_filter(eps, delta);
        double worst = 0.0;
        const int n = 10000;
        for (int i = 0; i < n; ++i) {
            const double x = -std::numbers::pi / 2 + std::numbers::pi * i / (n - 1);
            if (std::abs(x) < delta) {
                continue;
            }
            worst = std::max(worst, std::abs(evaluate_series(fs, x) - (x > 0 ? 1.0 : 0.0)));
        }
        ok = ok && worst <= eps;
        detail += fmt("(d=%g", delta) + fmt(" e=%g", eps) + " D=" + std::to_string(fs.D) +
                  fmt(" err=%.3g) ", worst);
    }
    ok = ok && std::chrono::duration<double>(Clock::now() - t0).count() < 60;
    report(1, ok, detail, t0);
}

void c2() {
    const auto t0 = Clock::now();
    ExperimentConfig cfg;
    cfg.filter.epsilon = 0.1;
    cfg.state.seed = 1;
    const auto s = prepare(cfg);
    const std::int64_t M = 500;
    const int batches = 200;
    std::vector<double> pts;
    for (int i = 0; i < 20; ++i) {
        pts.push_back(-std::numbers::pi / 2 + std::numbers::pi * i / 19);
    }
    const AliasTable table(s.fs.coeff_mags);
    std::vector<AcdfCurve> curves;
    for (int rep = 0; rep < batches; ++rep) {
        const auto b = draw_batch(s.fs, table, s.moments, M, SampleMode::SingleShot, derive_seed(1, rep));
        curves.push_back(evaluate_acdf(b, s.fs, pts));
    }
    const auto st = estimator_stats(curves);
    const double F2 = s.fs.norm_F * s.fs.norm_F;
    const double mean_tol = 4 * std::sqrt(2 * F2 / (M * batches));
    const double var_bound = 2 * F2 / M * (1 + 5 / std::sqrt(batches));
    double worst_mean = 0.0;
    double worst_var = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        worst_mean = std::max(worst_mean, std::abs(st.mean[i] - acdf_value(s.fs, s.moments, pts[i])) / mean_tol);
        worst_var = std::max(worst_var, st.variance[i] / var_bound);
    }
    const bool ok = worst_mean <= 1.0 && worst_var <= 1.0 &&
                    std::chrono::duration<double>(Clock::now() - t0).count() < 120;
    report(2, ok,
           fmt("mean: max |bias|/tol=%.3f (need <=1)", worst_mean) +
               fmt("; variance: max var/bound=%.3f (need <=1)", worst_var) + fmt(" F=%.4f", s.fs.norm_F),
           t0);
}

void c3() {
    const auto t0 = Clock::now();
    int hits = 0;
    std::string detail;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        ExperimentConfig cfg;
        cfg.state.seed = seed;
        cfg.sampling.mode = "infinite";
        const auto r = run_experiment(cfg);
        double best = INFINITY;
        for (const auto &pt : r.setup.measure->points) {
            if (exact_cdf(*r.setup.measure, pt.lambda) >= 2 * cfg.filter.epsilon) {
                best = std::min(best, std::abs(r.lambda_estimate - pt.lambda));
            }
        }
        const bool ok = r.detected && best <= r.setup.delta;
        hits += ok;
        detail += fmt(" %.2f", best / r.setup.delta);
    }
    report(3, hits == 10, std::to_string(hits) + "/10 within delta; |err|/delta:" + detail, t0);
}

void c4() {
    const auto t0 = Clock::now();
    int hits = 0;
    std::string detail;
    for (std::uint64_t root = 1; root <= 10; ++root) {
        ExperimentConfig cfg;
        cfg.hamiltonian.model = "heisenberg";
        cfg.hamiltonian.n = 6;
        cfg.hamiltonian.seed = 1;
        cfg.state.kind = "overlaps";
        cfg.state.seed = 1;
        cfg.state.overlaps = {{0, 0.0014}, {1, 0.015}};
        cfg.filter.epsilon = 0.055;
        cfg.sampling.M = 10000;
        cfg.sampling.mode = "single-shot";
        cfg.sampling.repetitions = 10;
        cfg.sampling.seed = root;
        const auto r = run_experiment(cfg);
        const double e1 = r.setup.ed->lambdas(1);
        const double err = (r.lambda_estimate - e1) / r.setup.delta;
        const bool ok = r.detected && std::abs(err) <= 1.0;
        hits += ok;
        detail += r.detected ? fmt(" %+.1f", err) : std::string(" none");
    }
    report(4, hits >= 8, std::to_string(hits) + "/10 within delta of E1 (need >=8); (est-E1)/delta:" + detail,
           t0);
}

void c5() {
    const auto t0 = Clock::now();
    const auto h6 = heisenberg(6);
    const auto h26 = heisenberg(26);
    const int d6 = theorem1_D(0.055, h6.tau * 0.055);
    const int d26 = theorem1_D(0.019, h26.tau * 0.019);
    const double ratio = static_cast<double>(d26) / d6;
    const bool ok = d6 >= 175 && d6 <= 700 && d26 >= 3300 && d26 <= 13200 &&
                    std::abs(ratio / 18.9 - 1.0) <= 0.35;
    report(5, ok,
           "D(0.055, 6 sites)=" + std::to_string(d6) + " vs 350, D(0.019, 26 sites)=" + std::to_string(d26) +
               " vs 6600" + fmt(", ratio=%.2f vs 18.9 +-35%%", ratio),
           t0);
}

void c6() {
    const auto t0 = Clock::now();
    const double tau = heisenberg(26).tau;
    const double eta = 7e-6;
    const auto M = theorem2_M(6600, eta, eta / 4, tau, 0.05);
    const double orders = std::abs(std::log10(static_cast<double>(M)) - 13.0);
    report(6, orders <= 1.5, fmt("M=%.3e", static_cast<double>(M)) + fmt(" (%.2f orders from 1e13)", orders), t0);
}

void c7() {
    const auto t0 = Clock::now();
    const double eps = 0.019;
    const double tau = heisenberg(26).tau;
    const int D = theorem1_D(eps, tau * eps);
    bool mono = true;
    double prev = INFINITY;
    for (double lg = 2.0; lg <= 12.0 + 1e-9; lg += 0.25) {
        const double e = resolvable_eta(std::pow(10.0, lg), D, eps, tau, 0.05);
        mono = mono && e <= prev;
        prev = e;
    }
    const double lo = resolvable_eta(1e2, D, eps, tau, 0.05) - 2 * eps;
    const double hi = resolvable_eta(1e12, D, eps, tau, 0.05) - 2 * eps;
    report(7, mono && hi < 0.02 * lo,
           std::string("monotone=") + (mono ? "yes" : "no") + fmt(", excess(1e12)/excess(1e2)=%.2e", hi / lo) +
               " D=" + std::to_string(D),
           t0);
}

void c8() {
    const auto t0 = Clock::now();
    const auto h = heisenberg(4);
    const auto psi = random_state(4, 1);
    const auto exact = exact_moments(spectral_measure(diagonalize(h), psi), 10);
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const std::vector<int> rs{4, 8, 16, 32, 64};
    std::string detail;
    for (int r : rs) {
        const double err = std::abs(trotter_moments_at(h, psi, {21}, r)[0] - exact.at(21));
        const double lx = std::log(1.0 / r);
        const double ly = std::log(err);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
        detail += fmt(" %.2e", err);
    }
    const double n = static_cast<double>(rs.size());
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    report(8, std::abs(slope - 2.0) <= 0.2, fmt("slope=%.3f; errors:", slope) + detail, t0);
}

int exhaustive_breakpoint(const std::vector<double> &y, double bw, int min_seg) {
    const int n = static_cast<int>(y.size());
    auto seg = [&](int lo, int hi) {
        double s = 0.0;
        for (int i = lo; i < hi; ++i) {
            for (int j = lo; j < hi; ++j) {
                const double d = y[static_cast<std::size_t>(i)] - y[static_cast<std::size_t>(j)];
                s += std::exp(-d * d / (2 * bw * bw));
            }
        }
        return (hi - lo) - s / (hi - lo);
    };
    std::vector<double> cost;
    for (int b = min_seg; b <= n - min_seg; ++b) {
        cost.push_back(seg(0, b) + seg(b, n));
    }
    const double best = *std::min_element(cost.begin(), cost.end());
    for (std::size_t i = 0; i < cost.size(); ++i) {
        if (cost[i] <= best + 1e-12 * n) {
            return min_seg + static_cast<int>(i);
        }
    }
    return min_seg;
}

void c9() {
    const auto t0 = Clock::now();
    int match = 0;
    for (int sig = 0; sig < 100; ++sig) {
        CounterRng rng(9, static_cast<std::uint64_t>(sig));
        const int n = 4 + static_cast<int>(rng.uniform() * 197);
        const int cut = 1 + static_cast<int>(rng.uniform() * (n - 1));
        const double height = rng.uniform();
        std::vector<double> y(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            y[static_cast<std::size_t>(i)] = (i >= cut ? height : 0.0) + 0.3 * rng.uniform();
        }
        const int got = kernel_breakpoint(y, Bandwidth::Median, 2);
        match += got == exhaustive_breakpoint(y, kernel_bandwidth(y, Bandwidth::Median), 2);
    }
    report(9, match == 100, std::to_string(match) + "/100 exact matches", t0);
}

void c10() {
    const auto t0 = Clock::now();
    double lw = 0.0;
    for (double lg = -10.0; lg <= 10.0; lg += 0.05) {
        const double x = std::pow(10.0, lg);
        const double w = specfun::lambert_w0(x);
        lw = std::max(lw, std::abs(w * std::exp(w) - x) / x);
    }
    for (double x = -0.36; x < 0.0; x += 0.01) {
        const double w = specfun::lambert_w0(x);
        lw = std::max(lw, std::abs(w * std::exp(w) - x) / std::abs(x));
    }
    double bes = 0.0;
    for (double beta : {0.5, 3.0, 40.0, 1e3, 1e5}) {
        const auto seq = specfun::bessel_i_scaled_seq(60, beta);
        for (std::size_t n = 1; n + 1 < seq.size(); ++n) {
            const double lhs = seq[n - 1] - seq[n + 1];
            const double rhs = 2.0 * static_cast<double>(n) / beta * seq[n];
            if (rhs > 1e-280) {
                bes = std::max(bes, std::abs(lhs - rhs) / std::abs(rhs));
            }
        }
    }
    boost::math::quadrature::tanh_sinh<double> q;
    double fc = 0.0;
    for (int i = 0; i < 50; ++i) {
        const int d1 = 1;
        const int d2 = 3 + (i % 10) * 7;
        const double f = 0.05 + 0.4 * i;
        const double lb = std::lgamma(0.5 * (d1 + d2)) - std::lgamma(0.5 * d1) - std::lgamma(0.5 * d2) +
                          0.5 * d1 * std::log(static_cast<double>(d1) / d2);
        auto density = [&](double t) {
            if (t <= 0.0) {
                return 0.0;
            }
            return std::exp(lb + (0.5 * d1 - 1) * std::log(t) - 0.5 * (d1 + d2) * std::log1p(d1 * t / d2));
        };
        const double ref = q.integrate(density, 0.0, f);
        fc = std::max(fc, std::abs(specfun::f_distribution_cdf(f, d1, d2) - ref));
    }
    report(10, lw <= 1e-12 && bes <= 1e-10 && fc <= 1e-8,
           fmt("lambert rel residual=%.2e", lw) + fmt(", bessel recurrence rel=%.2e", bes) +
               fmt(", F-cdf abs diff=%.2e", fc),
           t0);
}

void c11() {
    const auto t0 = Clock::now();
    const auto psi = random_state(10, 1);
    bool ok = true;
    double prev_o = -1.0;
    double prev_l = INFINITY;
    std::string detail;
    for (std::int64_t s = 1; s <= 1024; s *= 2) {
        const auto m = state_metrics(psi, sparsify(psi, s));
        ok = ok && m.overlap >= prev_o && m.l2_distance <= prev_l;
        prev_o = m.overlap;
        prev_l = m.l2_distance;
        if (s == 1 || s == 32 || s == 1024) {
            detail += " S=" + std::to_string(s) + fmt(" overlap=%.4f", m.overlap) + fmt(" l2=%.4f", m.l2_distance);
        }
    }
    report(11, ok, std::string("monotone=") + (ok ? "yes" : "no") + ";" + detail, t0);
}

void c12() {
    const auto t0 = Clock::now();
    int ok = 0;
    int missed = 0;
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        CounterRng rng(seed, 12);
        const int n = 800;
        const int first = 250 + static_cast<int>(rng.uniform() * 150);
        std::vector<int> jumps{first};
        for (int k = 0; k < 2; ++k) {
            jumps.push_back(jumps.back() + 100 + static_cast<int>(rng.uniform() * 50));
        }
        std::vector<double> heights;
        for (int k = 0; k < 3; ++k) {
            heights.push_back(0.1 + 0.3 * rng.uniform());
        }
        std::vector<double> y(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            double level = 0.0;
            for (int k = 0; k < 3; ++k) {
                level += i >= jumps[static_cast<std::size_t>(k)] ? heights[static_cast<std::size_t>(k)] : 0.0;
            }
            y[static_cast<std::size_t>(i)] = level + 0.03 * rng.normal();
        }
        const auto idx = variance_scan(y, 200);
        if (!idx) {
            ++missed;
        } else if (*idx >= first) {
            ++ok;
        }
    }
    report(12, ok >= 95, std::to_string(ok) + "/100 upper-bound the first jump (need >=95), missed=" +
                             std::to_string(missed),
           t0);
}

} // namespace

int main() {
    const std::vector<std::function<void()>> all{c1, c2, c3, c4, c5, c6, c7, c8, c9, c10, c11, c12};
    for (const auto &c : all) {
        c();
    }
    std::printf("%d of %zu criteria failed\n", failures, all.size());
    return failures == 0 ? 0 : 1;
}
