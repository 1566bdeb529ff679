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
#include "cdfge/detect.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "cdfge/error.hpp"
#include "cdfge/specfun.hpp"

namespace cdfge {

namespace {

double mean_of(const std::vector<double> &y, std::size_t lo, std::size_t hi) {
    double s = 0.0;
    for (std::size_t i = lo; i < hi; ++i) {
        s += y[i];
    }
    return s / static_cast<double>(hi - lo);
}

double ss_about(const std::vector<double> &y, std::size_t lo, std::size_t hi,
                double m) {
    double s = 0.0;
    for (std::size_t i = lo; i < hi; ++i) {
        const double d = y[i] - m;
        s += d * d;
    }
    return s;
}

} // namespace

double kernel_bandwidth(const std::vector<double> &y, Bandwidth policy) {
    constexpr double kFloor = 1e-12;
    const std::size_t n = y.size();
    if (n < 2) {
        return 1.0;
    }
    if (policy == Bandwidth::StdDev) {
        const double m = mean_of(y, 0, n);
        return std::max(kFloor, std::sqrt(ss_about(y, 0, n, m) / static_cast<double>(n)));
    }
    std::vector<double> d;
    d.reserve(n * (n - 1) / 2);
    for (std::size_t s = 0; s < n; ++s) {
        for (std::size_t t = s + 1; t < n; ++t) {
            d.push_back(std::abs(y[s] - y[t]));
        }
    }
    const auto mid = (d.size() - 1) / 2;
    std::nth_element(d.begin(), d.begin() + static_cast<std::ptrdiff_t>(mid), d.end());
    return std::max(kFloor, d[mid]);
}

std::vector<double> kernel_costs(const std::vector<double> &y, double bandwidth,
                                 int min_seg) {
    const int n = static_cast<int>(y.size());
    const double inv = 1.0 / (2.0 * bandwidth * bandwidth);
    auto K = [&](int s, int t) {
        const double d = y[static_cast<std::size_t>(s)] - y[static_cast<std::size_t>(t)];
        return std::exp(-d * d * inv);
    };
    // left[b] = sum_{s,t < b} K, right[b] = sum_{s,t >= b} K
    std::vector<double> left(static_cast<std::size_t>(n) + 1, 0.0);
    std::vector<double> right(static_cast<std::size_t>(n) + 1, 0.0);
    for (int b = 0; b < n; ++b) {
        double cross = 0.0;
        for (int s = 0; s < b; ++s) {
            cross += K(s, b);
        }
        left[static_cast<std::size_t>(b) + 1] = left[static_cast<std::size_t>(b)] + 2.0 * cross + 1.0;
    }
    for (int b = n - 1; b >= 0; --b) {
        double cross = 0.0;
        for (int t = b + 1; t < n; ++t) {
            cross += K(b, t);
        }
        right[static_cast<std::size_t>(b)] = right[static_cast<std::size_t>(b) + 1] + 2.0 * cross + 1.0;
    }
    std::vector<double> cost;
    for (int b = min_seg; b <= n - min_seg; ++b) {
        const double lb = b;
        const double rb = n - b;
        cost.push_back((lb - left[static_cast<std::size_t>(b)] / lb) +
                       (rb - right[static_cast<std::size_t>(b)] / rb));
    }
    return cost;
}

int kernel_breakpoint(const std::vector<double> &y, Bandwidth policy, int min_seg) {
    const int n = static_cast<int>(y.size());
    if (min_seg < 1 || n < 2 * min_seg) {
        throw DomainError("kernel_breakpoint: signal too short");
    }
    const auto cost = kernel_costs(y, kernel_bandwidth(y, policy), min_seg);
    const double best = *std::min_element(cost.begin(), cost.end());
    const double tol = 1e-12 * n;
    for (std::size_t i = 0; i < cost.size(); ++i) {
        if (cost[i] <= best + tol) {
            return min_seg + static_cast<int>(i);
        }
    }
    return min_seg;
}

AnovaResult anova_validate(const std::vector<double> &y, int b, double alpha,
                           Orientation orientation) {
    const int n = static_cast<int>(y.size());
    if (b < 1 || b > n - 1) {
        throw DomainError("anova_validate: empty segment");
    }
    if (n < 3) {
        throw DomainError("anova_validate: need at least three points");
    }
    const auto ub = static_cast<std::size_t>(b);
    const auto un = static_cast<std::size_t>(n);
    const double m = mean_of(y, 0, un);
    const double m0 = mean_of(y, 0, ub);
    const double m1 = mean_of(y, ub, un);
    const double ss_w = ss_about(y, 0, un, m);
    const double ss_b = ss_about(y, 0, ub, m0) + ss_about(y, ub, un, m1);
    double f = 0.0;
    if (orientation == Orientation::Standard) {
        const double between = std::max(0.0, ss_w - ss_b);
        if (ss_b > 0.0) {
            f = (n - 2) * between / ss_b;
        } else {
            f = between > 0.0 ? std::numeric_limits<double>::infinity() : 0.0;
        }
    } else {
        f = ss_w > 0.0 ? (n - 2) * ss_b / ss_w : 0.0;
    }
    AnovaResult r;
    r.f = f;
    r.p = specfun::f_distribution_cdf(f, 1, n - 2);
    r.significant = (r.p > 1.0 - alpha) && (m1 > m0);
    return r;
}

double GuardParams::threshold() const {
    return std::max(k * sigma + eps_tilde, min_level);
}

BreakpointSearch find_smallest_breakpoint(const std::vector<double> &y,
                                          const RuptureParams &params) {
    const int n = static_cast<int>(y.size());
    BreakpointSearch out;
    out.breakpoint = n;
    const double thr = params.guard.threshold();
    const int l = std::max(1, params.guard.l);
    int b = n;
    while (b >= 2 * params.min_seg) {
        const std::vector<double> prefix(y.begin(), y.begin() + b);
        const int cand = kernel_breakpoint(prefix, params.bandwidth, params.min_seg);
        if (cand < 2 || cand > n - 2) {
            break;
        }
        const auto an = anova_validate(y, cand, params.alpha, params.orientation);
        TraceEntry e{cand, an.f, an.p, an.significant, ""};
        if (!an.significant) {
            e.reason = "anova";
        } else if (params.guard.mode == Guard::After) {
            const auto lo = static_cast<std::size_t>(cand);
            const auto hi = std::min<std::size_t>(y.size(), lo + static_cast<std::size_t>(l));
            if (!(mean_of(y, lo, hi) > thr)) {
                e.accepted = false;
                e.reason = "guard";
            }
        } else if (params.guard.mode == Guard::AsPrinted) {
            const auto hi = static_cast<std::size_t>(cand);
            const auto lo = hi > static_cast<std::size_t>(l) ? hi - static_cast<std::size_t>(l) : 0;
            if (mean_of(y, lo, hi) > thr) {
                e.accepted = false;
                e.reason = "guard";
            }
        }
        out.trace.push_back(e);
        if (!e.accepted || cand >= b) {
            break;
        }
        b = cand;
        out.breakpoint = cand;
    }
    return out;
}

NoiseFloor noise_floor(const AcdfCurve &curve, double lo, double hi) {
    std::vector<double> v;
    for (std::size_t i = 0; i < curve.grid.size(); ++i) {
        if (curve.grid[i] >= lo && curve.grid[i] < hi) {
            v.push_back(curve.g_values[i]);
        }
    }
    if (v.size() < 2) {
        throw DomainError("noise_floor: region contains fewer than two grid points");
    }
    const double m = mean_of(v, 0, v.size());
    NoiseFloor nf;
    nf.sigma = std::sqrt(ss_about(v, 0, v.size(), m) / static_cast<double>(v.size() - 1));
    double a = 0.0;
    for (double g : v) {
        a += std::abs(g);
    }
    nf.eps_tilde = a / static_cast<double>(v.size());
    return nf;
}

double refine_energy(const AcdfCurve &curve, double x0, double half_window) {
    double best_x = 0.0;
    double best = -std::numeric_limits<double>::infinity();
    bool any = false;
    for (std::size_t i = 0; i < curve.grid.size(); ++i) {
        const double x = curve.grid[i];
        if (x < x0 - half_window || x > x0 + half_window) {
            continue;
        }
        if (!any || curve.grad_values[i] > best) {
            best = curve.grad_values[i];
            best_x = x;
            any = true;
        }
    }
    if (!any) {
        throw DomainError("refine_energy: window contains no grid point");
    }
    return best_x;
}

std::optional<int> variance_scan(const std::vector<double> &y, int lead, double s,
                                 int window_l, double fraction) {
    const int n = static_cast<int>(y.size());
    if (lead < 2 || lead > n) {
        throw DomainError("variance_scan: leading region needs at least two points");
    }
    if (window_l < 1 || !(fraction > 0.0 && fraction <= 1.0)) {
        throw DomainError("variance_scan: invalid window parameters");
    }
    const auto ul = static_cast<std::size_t>(lead);
    const double m = mean_of(y, 0, ul);
    const double sigma = std::sqrt(ss_about(y, 0, ul, m) / static_cast<double>(lead - 1));
    const double thr = s * sigma;
    for (int i = lead; i < n; ++i) {
        if (!(y[static_cast<std::size_t>(i)] > thr)) {
            continue;
        }
        const int hi = std::min(n, i + window_l);
        int above = 0;
        for (int t = i; t < hi; ++t) {
            above += y[static_cast<std::size_t>(t)] > thr;
        }
        if (above >= fraction * (hi - i)) {
            return i;
        }
    }
    return std::nullopt;
}

CertifiedResult certified_search(const std::function<double(double)> &evaluator,
                                 double eta, double epsilon, double x_lo,
                                 double x_hi, double delta) {
    if (!(eta > 2.0 * epsilon)) {
        throw DomainError("certified_search: requires eta > 2 epsilon");
    }
    if (!(x_hi > x_lo) || !(delta > 0.0)) {
        throw DomainError("certified_search: invalid interval");
    }
    CertifiedResult r;
    double lo = x_lo;
    double hi = x_hi;
    while (hi - lo > 2.0 * delta) {
        const double mid = 0.5 * (lo + hi);
        ++r.evaluations;
        if (decide_jump(evaluator(mid), eta, epsilon) == JumpDecision::AboveZero) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    r.x = hi;
    return r;
}

DetectionResult detect_curve(const AcdfCurve &curve, const DetectParams &params) {
    DetectionResult res;
    res.method = params.method;
    const auto nf = noise_floor(curve, params.noise_lo, params.noise_hi);
    res.sigma_empirical = nf.sigma;
    res.noise_floor = nf.eps_tilde;

    std::size_t lo = curve.grid.size();
    std::size_t hi = 0;
    for (std::size_t i = 0; i < curve.grid.size(); ++i) {
        if (curve.grid[i] >= params.window_lo && curve.grid[i] <= params.window_hi) {
            lo = std::min(lo, i);
            hi = std::max(hi, i + 1);
        }
    }
    if (hi <= lo + 4) {
        throw DomainError("detect: detection window holds too few grid points");
    }
    const std::vector<double> y(curve.g_values.begin() + static_cast<std::ptrdiff_t>(lo),
                                curve.g_values.begin() + static_cast<std::ptrdiff_t>(hi));

    int b = static_cast<int>(y.size());
    if (params.method == "variance-scan") {
        int lead = 0;
        while (lead < static_cast<int>(y.size()) &&
               curve.grid[lo + static_cast<std::size_t>(lead)] < params.noise_hi) {
            ++lead;
        }
        const auto idx = variance_scan(y, lead, params.s, params.window_l, params.fraction);
        if (idx) {
            b = *idx;
        }
        res.threshold = params.s * nf.sigma;
    } else {
        RuptureParams rp = params.rupture;
        rp.guard.sigma = nf.sigma;
        rp.guard.eps_tilde = nf.eps_tilde;
        res.threshold = rp.guard.threshold();
        const auto bs = find_smallest_breakpoint(y, rp);
        b = bs.breakpoint;
        res.trace = bs.trace;
        for (auto &e : res.trace) {
            e.candidate += static_cast<int>(lo);
        }
    }
    if (b >= static_cast<int>(y.size())) {
        res.detected = false;
        res.breakpoint_index = static_cast<int>(curve.grid.size());
        return res;
    }
    res.detected = true;
    res.breakpoint_index = b + static_cast<int>(lo);
    res.inflection_x = curve.grid[static_cast<std::size_t>(res.breakpoint_index)];
    res.refined_energy = refine_energy(curve, res.inflection_x, params.half_window);
    return res;
}

} // namespace cdfge
