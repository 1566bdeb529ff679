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
#include "cdfge/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "cdfge/error.hpp"

namespace cdfge {

namespace fs = std::filesystem;

namespace {

std::string header_line(const ExperimentConfig &cfg) {
    return "# " + provenance(cfg) + "\n";
}

nlohmann::json meta(const ExperimentConfig &cfg) {
    return {{"config_hash", cfg.hash()}, {"root_seed", cfg.sampling.seed}};
}

} // namespace

std::string provenance(const ExperimentConfig &cfg) {
    return "config_hash=" + cfg.hash() + " root_seed=" + std::to_string(cfg.sampling.seed);
}

void write_text(const fs::path &p, const std::string &content) {
    if (p.has_parent_path()) {
        fs::create_directories(p.parent_path());
    }
    std::ofstream out(p, std::ios::binary);
    if (!out) {
        throw DomainError("cannot write '" + p.string() + "'");
    }
    out << content;
}

nlohmann::json to_json(const DetectionResult &d) {
    nlohmann::json trace = nlohmann::json::array();
    for (const auto &e : d.trace) {
        trace.push_back({{"candidate", e.candidate},
                         {"f", std::isinf(e.f) ? nlohmann::json("inf") : nlohmann::json(e.f)},
                         {"p", e.p},
                         {"accepted", e.accepted},
                         {"reason", e.reason}});
    }
    return {{"method", d.method},
            {"detected", d.detected},
            {"breakpoint_index", d.breakpoint_index},
            {"inflection_x", d.inflection_x},
            {"refined_energy", d.refined_energy},
            {"sigma_empirical", d.sigma_empirical},
            {"noise_floor", d.noise_floor},
            {"threshold", d.threshold},
            {"trace", trace}};
}

nlohmann::json to_json(const ResourceEstimate &e) {
    return {{"D", e.D},
            {"M", e.M},
            {"r", e.r},
            {"r_from_formula", e.r_from_formula},
            {"depth", e.depth},
            {"depth_control_reversal", e.depth / 2},
            {"t_max", e.t_max},
            {"beta", e.beta},
            {"norm_F", e.norm_F},
            {"inputs",
             {{"epsilon", e.epsilon},
              {"delta", e.delta},
              {"eta", e.eta},
              {"vartheta", e.vartheta},
              {"tau", e.tau},
              {"C", e.C},
              {"p", e.p},
              {"n_sites", e.n_sites}}}};
}

nlohmann::json curve_sidecar(const ExperimentConfig &cfg, const Setup &s, int repetition) {
    auto j = meta(cfg);
    j["M"] = cfg.sampling.mode == "infinite" ? 0 : cfg.sampling.M;
    j["norm_F"] = s.fs.norm_F;
    j["D"] = s.fs.D;
    j["beta"] = s.fs.beta;
    j["delta"] = s.delta;
    j["tau"] = s.h.tau;
    j["seed"] = derive_seed(cfg.sampling.seed, static_cast<std::uint64_t>(repetition));
    j["repetition"] = repetition;
    j["mode"] = cfg.sampling.mode;
    j["repetitions"] = cfg.sampling.mode == "infinite" ? 1 : cfg.sampling.repetitions;
    j["batch_reuse"] = true;
    j["backend"] = s.moments.backend;
    j["r"] = s.moments.r;
    return j;
}

void write_hamiltonian_file(const fs::path &p, const ExperimentConfig &cfg,
                            const Hamiltonian &h) {
    std::ostringstream os;
    os << header_line(cfg);
    write_hamiltonian(os, h);
    write_text(p, os.str());
}

void write_state_file(const fs::path &p, const ExperimentConfig &cfg, const StateVector &psi) {
    std::ostringstream os(std::ios::binary);
    write_state(os, psi);
    os << "CDFGMETA" << meta(cfg).dump() << '\n';
    write_text(p, os.str());
}

void write_series_file(const fs::path &p, const ExperimentConfig &cfg, const FourierSeries &f) {
    std::ostringstream os;
    os << header_line(cfg);
    write_series_csv(os, f);
    write_text(p, os.str());
}

void write_moments_file(const fs::path &p, const ExperimentConfig &cfg, const MomentSet &m) {
    std::ostringstream os;
    os << header_line(cfg);
    write_moments_csv(os, m);
    write_text(p, os.str());
}

void write_curve_files(const fs::path &dir, const ExperimentConfig &cfg, const Setup &s,
                       const std::vector<AcdfCurve> &curves) {
    for (std::size_t i = 0; i < curves.size(); ++i) {
        char name[32];
        std::snprintf(name, sizeof(name), "curve_%02zu", i);
        std::ostringstream os;
        os << header_line(cfg);
        write_curve_csv(os, curves[i]);
        write_text(dir / (std::string(name) + ".csv"), os.str());
        write_text(dir / (std::string(name) + ".json"),
                   curve_sidecar(cfg, s, static_cast<int>(i)).dump(2) + "\n");
    }
}

void write_spectrum_file(const fs::path &p, const ExperimentConfig &cfg, const Setup &s) {
    if (!s.measure) {
        throw DomainError("spectrum requires the exact backend");
    }
    std::ostringstream os;
    os << header_line(cfg);
    os << "k,lambda,energy,p\n";
    for (std::size_t k = 0; k < s.measure->points.size(); ++k) {
        const auto &pt = s.measure->points[k];
        os << k << ',' << format_double(pt.lambda) << ',' << format_double(pt.lambda / s.h.tau)
           << ',' << format_double(pt.p) << '\n';
    }
    write_text(p, os.str());
}

void write_exact_cdf_file(const fs::path &p, const ExperimentConfig &cfg, const Setup &s) {
    if (!s.measure) {
        throw DomainError("exact CDF requires the exact backend");
    }
    std::ostringstream os;
    os << header_line(cfg);
    os << "x,cdf\n";
    for (double x : s.grid) {
        os << format_double(x) << ',' << format_double(exact_cdf(*s.measure, x)) << '\n';
    }
    write_text(p, os.str());
}

void write_detection_file(const fs::path &p, const ExperimentConfig &cfg, const RunResult &r) {
    auto j = meta(cfg);
    j["detected"] = r.detected;
    j["aggregation"] = "energies";
    j["lambda_estimate"] = r.lambda_estimate;
    j["energy_estimate"] = r.energy_estimate;
    j["tau"] = r.setup.h.tau;
    j["delta"] = r.setup.delta;
    j["epsilon"] = cfg.filter.epsilon;
    j["guard"] = cfg.detection.guard;
    j["bandwidth"] = cfg.detection.bandwidth;
    j["orientation"] = cfg.detection.orientation;
    j["noise_region"] = cfg.detection.noise_region;
    nlohmann::json reps = nlohmann::json::array();
    for (const auto &d : r.detections) {
        reps.push_back(to_json(d));
    }
    j["repetitions"] = reps;
    write_text(p, j.dump(2) + "\n");
}

void write_resources_file(const fs::path &p, const ExperimentConfig &cfg,
                          const ResourceEstimate &e) {
    auto j = meta(cfg);
    j["estimate"] = to_json(e);
    write_text(p, j.dump(2) + "\n");
}

void write_sweep_file(const fs::path &p, const ExperimentConfig &cfg, const ResourceEstimate &e) {
    std::ostringstream os;
    os << header_line(cfg);
    os << "M,eta_resolvable\n";
    for (int ex = 2; ex <= 12; ++ex) {
        for (int m : {1, 2, 5}) {
            if (ex == 12 && m > 1) {
                break;
            }
            const double M = m * std::pow(10.0, ex);
            os << format_double(M) << ','
               << format_double(resolvable_eta(M, e.D, e.epsilon, e.tau, e.vartheta)) << '\n';
        }
    }
    write_text(p, os.str());
}

AcdfCurve read_curve_csv(const fs::path &p) {
    std::ifstream in(p);
    if (!in) {
        throw ConfigError("cannot open curve file '" + p.string() + "'");
    }
    AcdfCurve c;
    std::string line;
    bool header = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') {
            continue;
        }
        if (!header) {
            header = true;
            continue;
        }
        std::stringstream ss(line);
        std::string a, b, d;
        if (!std::getline(ss, a, ',') || !std::getline(ss, b, ',') || !std::getline(ss, d)) {
            throw DomainError("curve file: malformed row '" + line + "'");
        }
        c.grid.push_back(parse_double(a));
        c.g_values.push_back(parse_double(b));
        c.grad_values.push_back(parse_double(d));
    }
    if (c.grid.empty()) {
        throw DomainError("curve file: no data rows");
    }
    return c;
}

} // namespace cdfge
