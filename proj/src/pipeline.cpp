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
#include "cdfge/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <future>
#include <numbers>

#include "cdfge/error.hpp"
#include "cdfge/rng.hpp"

namespace cdfge {

namespace {

template <class F>
auto parallel_map(int count, F &&fn) {
    using T = decltype(fn(0));
    std::vector<std::future<T>> fut;
    fut.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        fut.push_back(std::async(std::launch::async, fn, i));
    }
    std::vector<T> out;
    out.reserve(fut.size());
    for (auto &f : fut) {
        out.push_back(f.get());
    }
    return out;
}

SampleMode sample_mode(const std::string &m) {
    return m == "single-shot" ? SampleMode::SingleShot : SampleMode::Exact;
}

} // namespace

Hamiltonian build_hamiltonian(const ExperimentConfig &cfg) {
    const auto &hs = cfg.hamiltonian;
    Hamiltonian h;
    if (hs.model == "heisenberg") {
        h = build_heisenberg_full(hs.n, hs.seed);
    } else if (hs.model == "xxz") {
        h = build_xxz_chain(hs.n, hs.jx, hs.jz, hs.periodic);
    } else {
        std::ifstream in(hs.path);
        if (!in) {
            throw ConfigError("hamiltonian.path: cannot open '" + hs.path + "'");
        }
        h = read_hamiltonian(in);
    }
    return normalize(h, hs.margin, hs.norm == "exact" ? NormMode::Exact : NormMode::OneNorm);
}

StateVector build_state(const ExperimentConfig &cfg, const Hamiltonian &h,
                        std::optional<EigenDecomposition> &ed) {
    const auto &ss = cfg.state;
    StateVector psi;
    if (ss.kind == "random") {
        psi = random_state(h.n_sites, ss.seed);
    } else if (ss.kind == "file") {
        std::ifstream in(ss.path, std::ios::binary);
        if (!in) {
            throw ConfigError("state.path: cannot open '" + ss.path + "'");
        }
        psi = read_state(in);
        if (psi.n_sites != h.n_sites) {
            throw ConfigError("state.path: site count does not match the Hamiltonian");
        }
    } else {
        if (!ed) {
            ed = diagonalize(h);
        }
        if (ss.kind == "eigen") {
            psi = state_with_overlaps(ed->vectors, {{ss.eigen_index, 1.0}}, ss.seed);
        } else {
            psi = state_with_overlaps(ed->vectors, ss.overlaps, ss.seed);
        }
    }
    if (ss.sparsity > 0) {
        psi = sparsify(psi, ss.sparsity);
    }
    return psi;
}

FourierSeries build_filter(const ExperimentConfig &cfg, double delta) {
    const auto &f = cfg.filter;
    const double beta = f.beta > 0.0 ? f.beta : select_beta(delta, f.epsilon);
    const int D = f.D > 0 ? f.D : theorem1_D(f.epsilon, delta);
    return coefficients(beta, (D - 1) / 2);
}

Setup prepare(const ExperimentConfig &cfg, bool with_moments) {
    Setup s;
    s.h = build_hamiltonian(cfg);
    s.psi = build_state(cfg, s.h, s.ed);
    s.delta = cfg.filter.delta > 0.0 ? cfg.filter.delta : s.h.tau * cfg.filter.epsilon;
    s.fs = build_filter(cfg, s.delta);
    s.grid = make_grid(s.delta);
    const bool exact = cfg.backend.kind == "exact";
    if (exact && !s.ed) {
        s.ed = diagonalize(s.h);
    }
    if (s.ed) {
        s.measure = spectral_measure(*s.ed, s.psi);
    }
    if (!with_moments) {
        return s;
    }
    if (exact) {
        s.moments = exact_moments(*s.measure, s.fs.d);
    } else {
        StepsPolicy pol;
        pol.kind = cfg.backend.r_policy == "formula" ? StepsPolicy::Kind::Formula
                                                     : StepsPolicy::Kind::Fixed;
        pol.r = cfg.backend.r;
        pol.C = cfg.backend.C;
        pol.order = cfg.backend.p;
        pol.epsilon = cfg.filter.epsilon;
        s.moments = trotter_moments(s.h, s.psi, s.fs.d, pol);
    }
    return s;
}

std::vector<AcdfCurve> build_curves(const Setup &s, const ExperimentConfig &cfg) {
    if (cfg.sampling.mode == "infinite") {
        return {deterministic_acdf(s.fs, s.moments, s.grid)};
    }
    const AliasTable table(s.fs.coeff_mags);
    const auto mode = sample_mode(cfg.sampling.mode);
    return parallel_map(cfg.sampling.repetitions, [&](int rep) {
        const auto seed = derive_seed(cfg.sampling.seed, static_cast<std::uint64_t>(rep));
        const auto batch = draw_batch(s.fs, table, s.moments, cfg.sampling.M, mode, seed);
        return evaluate_acdf(batch, s.fs, s.grid);
    });
}

DetectParams detect_params(const ExperimentConfig &cfg, const Setup &s) {
    const auto &d = cfg.detection;
    DetectParams p;
    p.method = d.method;
    p.delta = s.delta;
    p.half_window = d.half_window * s.delta;
    p.rupture.alpha = d.alpha;
    p.rupture.bandwidth = d.bandwidth == "median" ? Bandwidth::Median : Bandwidth::StdDev;
    p.rupture.orientation =
        d.orientation == "as-printed" ? Orientation::AsPrinted : Orientation::Standard;
    p.rupture.guard.mode = d.guard == "after"        ? Guard::After
                           : d.guard == "as-printed" ? Guard::AsPrinted
                                                     : Guard::None;
    p.rupture.guard.k = d.k;
    p.rupture.guard.l = d.l;
    p.rupture.guard.min_level = d.floor * cfg.filter.epsilon;
    p.s = d.s;
    p.window_l = d.window_l;
    p.fraction = d.fraction;
    const double pi = std::numbers::pi;
    if (d.noise_region == "fixed") {
        p.noise_lo = -pi;
        p.noise_hi = -pi / 2;
        p.window_lo = -pi;
        p.window_hi = pi;
    } else {
        const double L = s.h.tau * s.h.norm_bound;
        p.noise_lo = -pi + L + s.delta;
        p.noise_hi = std::min(-pi / 2, -L - s.delta);
        p.window_lo = p.noise_lo;
        p.window_hi = pi - L - s.delta;
    }
    return p;
}

void detect_all(RunResult &r, const ExperimentConfig &cfg) {
    const auto params = detect_params(cfg, r.setup);
    if (cfg.detection.method == "certified") {
        const double eta = cfg.detection.eta > 0.0 ? cfg.detection.eta : 3.0 * cfg.filter.epsilon;
        const auto &s = r.setup;
        const AliasTable table(s.fs.coeff_mags);
        const auto mode = sample_mode(cfg.sampling.mode);
        r.detections = parallel_map(static_cast<int>(r.curves.size()), [&](int rep) {
            const auto seed = derive_seed(cfg.sampling.seed, static_cast<std::uint64_t>(rep));
            std::uint64_t calls = 0;
            auto eval = [&](double x) {
                if (cfg.sampling.mode == "infinite") {
                    return acdf_value(s.fs, s.moments, x);
                }
                const auto b = draw_batch(s.fs, table, s.moments, cfg.sampling.M, mode,
                                          derive_seed(seed, 1000 + calls++));
                return evaluate_acdf(b, s.fs, {x}).g_values[0];
            };
            const double L = s.h.tau * s.h.norm_bound;
            const auto cr = certified_search(eval, eta, cfg.filter.epsilon, -L - s.delta,
                                             L + s.delta, s.delta);
            DetectionResult d;
            d.method = "certified";
            d.detected = true;
            d.inflection_x = cr.x;
            d.refined_energy = cr.x;
            d.threshold = 0.5 * eta;
            return d;
        });
    } else {
        r.detections = parallel_map(static_cast<int>(r.curves.size()), [&](int i) {
            return detect_curve(r.curves[static_cast<std::size_t>(i)], params);
        });
    }
    std::vector<double> lambdas;
    for (const auto &d : r.detections) {
        if (d.detected) {
            lambdas.push_back(d.refined_energy);
        }
    }
    r.detected = !lambdas.empty();
    if (r.detected) {
        r.lambda_estimate = median_of_means(lambdas);
        r.energy_estimate = r.lambda_estimate / r.setup.h.tau;
    }
}

ResourceEstimate resources_for(const ExperimentConfig &cfg, const Setup &s) {
    ResourceInputs in;
    in.epsilon = cfg.filter.epsilon;
    in.eta = cfg.resources.eta > 0.0 ? cfg.resources.eta : 3.0 * cfg.filter.epsilon;
    in.vartheta = cfg.resources.vartheta;
    in.tau = s.h.tau;
    in.n_sites = s.h.n_sites;
    in.r_fixed = cfg.backend.r;
    in.C = cfg.backend.r_policy == "formula" ? cfg.backend.C : 0.0;
    in.p = cfg.backend.p;
    return estimate_resources(in);
}

RunResult run_experiment(const ExperimentConfig &cfg) {
    RunResult r;
    r.setup = prepare(cfg);
    r.curves = build_curves(r.setup, cfg);
    detect_all(r, cfg);
    r.resources = resources_for(cfg, r.setup);
    return r;
}

} // namespace cdfge
