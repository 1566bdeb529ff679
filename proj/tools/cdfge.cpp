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
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cdfge/error.hpp"
#include "cdfge/io.hpp"
#include "cdfge/pipeline.hpp"

using namespace cdfge;
namespace fs = std::filesystem;

namespace {

struct Options {
    std::string config;
    std::uint64_t seed = 0;
    bool seed_set = false;
    std::string out;
    std::string backend;
    bool quiet = false;
    std::string curve;
};

ExperimentConfig load(const Options &o) {
    ExperimentConfig cfg = o.config.empty() ? ExperimentConfig{} : load_config(o.config);
    if (o.seed_set) {
        cfg.sampling.seed = o.seed;
    }
    if (!o.out.empty()) {
        cfg.output.dir = o.out;
    }
    if (!o.backend.empty()) {
        cfg.backend.kind = o.backend;
    }
    validate(cfg);
    return cfg;
}

void say(const Options &o, const std::string &msg) {
    if (!o.quiet) {
        std::cout << msg << '\n';
    }
}

int cmd_ham(const Options &o) {
    const auto cfg = load(o);
    const auto h = build_hamiltonian(cfg);
    const fs::path dir = cfg.output.dir;
    write_hamiltonian_file(dir / "hamiltonian.txt", cfg, h);
    say(o, "n_sites=" + std::to_string(h.n_sites) + " terms=" + std::to_string(h.terms.size()) +
               " tau=" + format_double(h.tau) + " norm_bound=" + format_double(h.norm_bound));
    return 0;
}

int cmd_state(const Options &o) {
    const auto cfg = load(o);
    const auto h = build_hamiltonian(cfg);
    std::optional<EigenDecomposition> ed;
    const auto psi = build_state(cfg, h, ed);
    write_state_file(fs::path(cfg.output.dir) / "state.bin", cfg, psi);
    say(o, "wrote " + (fs::path(cfg.output.dir) / "state.bin").string());
    return 0;
}

int cmd_exact_cdf(const Options &o) {
    auto cfg = load(o);
    cfg.backend.kind = "exact";
    const auto s = prepare(cfg, false);
    const fs::path dir = cfg.output.dir;
    write_spectrum_file(dir / "spectrum.csv", cfg, s);
    write_exact_cdf_file(dir / "exact_cdf.csv", cfg, s);
    say(o, "lambda_0=" + format_double(s.measure->points.front().lambda) +
               " E_0=" + format_double(s.measure->points.front().lambda / s.h.tau));
    return 0;
}

int cmd_moments(const Options &o) {
    const auto cfg = load(o);
    const auto s = prepare(cfg);
    const fs::path dir = cfg.output.dir;
    write_series_file(dir / "series.csv", cfg, s.fs);
    write_moments_file(dir / "moments.csv", cfg, s.moments);
    say(o, "D=" + std::to_string(s.fs.D) + " backend=" + s.moments.backend);
    return 0;
}

int cmd_acdf(const Options &o) {
    const auto cfg = load(o);
    const auto s = prepare(cfg);
    const auto curves = build_curves(s, cfg);
    write_curve_files(cfg.output.dir, cfg, s, curves);
    say(o, "curves=" + std::to_string(curves.size()) + " grid=" + std::to_string(s.grid.size()));
    return 0;
}

int finish_detection(const Options &o, const ExperimentConfig &cfg, const RunResult &r) {
    const fs::path dir = cfg.output.dir;
    write_detection_file(dir / "detection.json", cfg, r);
    if (!r.detected) {
        std::cerr << "detection: no jump found\n";
        return 4;
    }
    say(o, "lambda=" + format_double(r.lambda_estimate) +
               " energy=" + format_double(r.energy_estimate));
    return 0;
}

int cmd_detect(const Options &o) {
    const auto cfg = load(o);
    RunResult r;
    if (!o.curve.empty()) {
        r.setup = prepare(cfg, false);
        r.curves.push_back(read_curve_csv(o.curve));
    } else {
        r.setup = prepare(cfg);
        r.curves = build_curves(r.setup, cfg);
    }
    detect_all(r, cfg);
    return finish_detection(o, cfg, r);
}

int cmd_resources(const Options &o) {
    const auto cfg = load(o);
    const auto h = build_hamiltonian(cfg);
    Setup s;
    s.h = h;
    const auto e = resources_for(cfg, s);
    const fs::path dir = cfg.output.dir;
    write_resources_file(dir / "resources.json", cfg, e);
    if (cfg.resources.sweep) {
        write_sweep_file(dir / "sweep.csv", cfg, e);
    }
    say(o, "D=" + std::to_string(e.D) + " M=" + std::to_string(e.M) +
               " r=" + std::to_string(e.r) + " depth=" + std::to_string(e.depth));
    return 0;
}

int cmd_run(const Options &o) {
    const auto cfg = load(o);
    const auto r = run_experiment(cfg);
    const fs::path dir = cfg.output.dir;
    write_hamiltonian_file(dir / "hamiltonian.txt", cfg, r.setup.h);
    write_series_file(dir / "series.csv", cfg, r.setup.fs);
    write_moments_file(dir / "moments.csv", cfg, r.setup.moments);
    write_curve_files(dir, cfg, r.setup, r.curves);
    write_resources_file(dir / "resources.json", cfg, r.resources);
    if (cfg.resources.sweep) {
        write_sweep_file(dir / "sweep.csv", cfg, r.resources);
    }
    if (r.setup.measure) {
        write_spectrum_file(dir / "spectrum.csv", cfg, r.setup);
    }
    return finish_detection(o, cfg, r);
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Spectral-CDF ground-state energy estimation toolkit"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--config", o.config, "Experiment config (INI or JSON)");
    auto *seed = app.add_option("--seed", o.seed, "Override the root sampling seed");
    app.add_option("--out", o.out, "Output directory");
    app.add_option("--backend", o.backend, "exact | trotter")
        ->check(CLI::IsMember({"exact", "trotter"}));
    app.add_flag("--quiet", o.quiet, "Suppress console summary");

    struct Cmd {
        const char *name;
        const char *help;
        int (*fn)(const Options &);
    };
    const Cmd cmds[] = {
        {"run", "Full pipeline: moments, ACDF, detection, resources", cmd_run},
        {"ham", "Build and normalize the Hamiltonian", cmd_ham},
        {"state", "Build the initial state", cmd_state},
        {"exact-cdf", "Spectrum and exact CDF", cmd_exact_cdf},
        {"moments", "Fourier series and moments", cmd_moments},
        {"acdf", "ACDF curves", cmd_acdf},
        {"detect", "Inflection-point detection", cmd_detect},
        {"resources", "Closed-form resource estimate", cmd_resources},
    };
    int (*selected)(const Options &) = nullptr;
    for (const auto &c : cmds) {
        auto *sub = app.add_subcommand(c.name, c.help);
        sub->fallthrough();
        if (std::string(c.name) == "detect") {
            sub->add_option("--curve", o.curve, "Detect on an existing curve CSV");
        }
        sub->callback([&selected, fn = c.fn] { selected = fn; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    o.seed_set = seed->count() > 0;
    try {
        return selected(o);
    } catch (const ConfigError &e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const NotDetected &e) {
        std::cerr << "not detected: " << e.what() << '\n';
        return 4;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
}
