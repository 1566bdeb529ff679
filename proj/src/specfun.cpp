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
#include "cdfge/specfun.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "cdfge/error.hpp"

namespace cdfge::specfun {

namespace {

constexpr double kInvE = 0.36787944117144232159552377016146;

struct Kahan {
    double sum = 0.0;
    double comp = 0.0;
    void add(double v) {
        const double y = v - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
};

// Power series for small beta: I_n = sum_m (beta/2)^{2m+n} / (m! (m+n)!).
double bessel_series(std::int64_t n, double beta) {
    const double half = 0.5 * beta;
    const double nn = static_cast<double>(n);
    const double log_t0 = nn * std::log(half) - std::lgamma(nn + 1.0) - beta;
    if (log_t0 < -745.0) {
        return 0.0;
    }
    double term = std::exp(log_t0);
    double sum = term;
    const double q = half * half;
    for (int m = 0; m < 200; ++m) {
        term *= q / ((m + 1.0) * (m + 1.0 + nn));
        sum += term;
        if (term < 1e-18 * sum) {
            break;
        }
    }
    return sum;
}

// Miller backward recurrence; stores e^{-beta} I_k for k in [0, keep_hi]
// into out (out.size() == keep_hi + 1) or only k == keep_hi when
// only_last is set.
void miller(double beta, std::int64_t keep_hi, bool only_last,
            std::vector<double> &out) {
    const auto margin =
        static_cast<std::int64_t>(std::ceil(9.5 * std::sqrt(beta))) + 32;
    const std::int64_t start = keep_hi + margin;
    constexpr double kBig = 1e250;
    constexpr double kShrink = 1e-250;

    double next = 0.0; // I_{k+1}
    double cur = 1.0;  // I_k
    Kahan tail;        // sum_{k >= 1} I_k
    double kept_last = 0.0;
    for (std::int64_t k = start; k >= 1; --k) {
        if (k <= keep_hi) {
            if (!only_last) {
                out[static_cast<std::size_t>(k)] = cur;
            } else if (k == keep_hi) {
                kept_last = cur;
            }
        }
        tail.add(cur);
        const double prev = (2.0 * static_cast<double>(k) / beta) * cur + next;
        next = cur;
        cur = prev;
        if (cur > kBig) {
            cur *= kShrink;
            next *= kShrink;
            tail.sum *= kShrink;
            tail.comp *= kShrink;
            kept_last *= kShrink;
            if (!only_last) {
                for (std::int64_t i = k; i <= keep_hi; ++i) {
                    out[static_cast<std::size_t>(i)] *= kShrink;
                }
            }
        }
    }
    // cur now holds I_0 (unnormalized); e^{-beta}(I_0 + 2 sum I_k) = 1.
    const double norm = 1.0 / (cur + 2.0 * tail.sum);
    if (only_last) {
        out[0] = (keep_hi == 0 ? cur : kept_last) * norm;
        return;
    }
    out[0] = cur;
    for (auto &v : out) {
        v *= norm;
    }
}

} // namespace

double lambert_w0(double x) {
    if (std::isnan(x) || x < -kInvE - 4 * std::numeric_limits<double>::epsilon()) {
        throw DomainError("lambert_w0: argument below -1/e");
    }
    if (x == 0.0) {
        return 0.0;
    }
    if (x <= -kInvE) {
        return -1.0;
    }
    if (std::isinf(x)) {
        return x;
    }
    double w;
    if (x < -0.25) {
        const double p = std::sqrt(2.0 * (std::numbers::e * x + 1.0));
        w = -1.0 + p - p * p / 3.0 + 11.0 / 72.0 * p * p * p;
    } else if (x < 3.0) {
        w = std::log1p(x);
    } else {
        const double l1 = std::log(x);
        const double l2 = std::log(l1);
        w = l1 - l2 + l2 / l1;
    }
    // Halley iteration
    for (int it = 0; it < 100; ++it) {
        const double ew = std::exp(w);
        const double f = w * ew - x;
        const double wp1 = w + 1.0;
        if (wp1 == 0.0) {
            break;
        }
        const double dw = f / (ew * wp1 - (w + 2.0) * f / (2.0 * wp1));
        w -= dw;
        if (std::abs(dw) <= 4.0 * std::numeric_limits<double>::epsilon() *
                                 (1.0 + std::abs(w))) {
            break;
        }
    }
    return w;
}

double bessel_i_scaled(std::int64_t n, double beta) {
    if (!(beta > 0.0) || std::isinf(beta)) {
        throw DomainError("bessel_i_scaled: beta must be positive and finite");
    }
    if (n < 0) {
        throw DomainError("bessel_i_scaled: negative order");
    }
    if (beta < 1.0) {
        return bessel_series(n, beta);
    }
    std::vector<double> out(1);
    miller(beta, n, true, out);
    return out[0];
}

std::vector<double> bessel_i_scaled_seq(std::int64_t nmax, double beta) {
    if (!(beta > 0.0) || std::isinf(beta)) {
        throw DomainError("bessel_i_scaled: beta must be positive and finite");
    }
    if (nmax < 0) {
        throw DomainError("bessel_i_scaled: negative order");
    }
    std::vector<double> out(static_cast<std::size_t>(nmax) + 1, 0.0);
    if (beta < 1.0) {
        for (std::int64_t k = 0; k <= nmax; ++k) {
            out[static_cast<std::size_t>(k)] = bessel_series(k, beta);
        }
        return out;
    }
    miller(beta, nmax, false, out);
    return out;
}

double erf(double x) {
    if (std::signbit(x)) {
        return -std::erf(-x);
    }
    return std::erf(x);
}

namespace {

// Lentz continued fraction for the incomplete beta function.
double betacf(double a, double b, double x) {
    constexpr double kTiny = 1e-300;
    constexpr double kEps = 1e-16;
    const double qab = a + b;
    const double qap = a + 1.0;
    const double qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::abs(d) < kTiny) {
        d = kTiny;
    }
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= 100000; ++m) {
        const double m2 = 2.0 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < kTiny) {
            d = kTiny;
        }
        c = 1.0 + aa / c;
        if (std::abs(c) < kTiny) {
            c = kTiny;
        }
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < kTiny) {
            d = kTiny;
        }
        c = 1.0 + aa / c;
        if (std::abs(c) < kTiny) {
            c = kTiny;
        }
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < kEps) {
            break;
        }
    }
    return h;
}

} // namespace

double incomplete_beta(double a, double b, double x) {
    if (!(a > 0.0) || !(b > 0.0)) {
        throw DomainError("incomplete_beta: shape parameters must be positive");
    }
    if (x <= 0.0) {
        return 0.0;
    }
    if (x >= 1.0) {
        return 1.0;
    }
    const double lbt = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                       a * std::log(x) + b * std::log1p(-x);
    const double bt = std::exp(lbt);
    if (x < (a + 1.0) / (a + b + 2.0)) {
        return bt * betacf(a, b, x) / a;
    }
    return 1.0 - bt * betacf(b, a, 1.0 - x) / b;
}

double f_distribution_cdf(double f, int d1, int d2) {
    if (d1 < 1 || d2 < 1) {
        throw DomainError("f_distribution_cdf: degrees of freedom must be >= 1");
    }
    if (std::isnan(f)) {
        throw DomainError("f_distribution_cdf: NaN statistic");
    }
    if (f <= 0.0) {
        return 0.0;
    }
    if (std::isinf(f)) {
        return 1.0;
    }
    const double a = 0.5 * d1;
    const double b = 0.5 * d2;
    const double x = d1 * f / (d1 * f + d2);
    return incomplete_beta(a, b, x);
}

double harmonic(std::int64_t n, HarmonicMode mode) {
    if (n < 1) {
        throw DomainError("harmonic: n must be >= 1");
    }
    const double nn = static_cast<double>(n);
    if (mode == HarmonicMode::Asymptotic) {
        const double n2 = nn * nn;
        return std::log(nn) + std::numbers::egamma + 0.5 / nn - 1.0 / (12.0 * n2) +
               1.0 / (120.0 * n2 * n2);
    }
    Kahan s;
    for (std::int64_t k = n; k >= 1; --k) {
        s.add(1.0 / static_cast<double>(k));
    }
    return s.sum;
}

} // namespace cdfge::specfun
