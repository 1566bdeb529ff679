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
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace cdfge {

struct HamiltonianSpec {
    std::string model = "xxz"; ///< heisenberg | xxz | file
    int n = 4;
    std::uint64_t seed = 1;
    double jx = 1.0;
    double jz = -1.0;
    bool periodic = true;
    double margin = 0.1;
    std::string norm = "one"; ///< one | exact
    std::string path;
};

struct StateSpec {
    std::string kind = "random"; ///< random | overlaps | eigen | file
    std::uint64_t seed = 1;
    std::vector<std::pair<int, double>> overlaps;
    int eigen_index = 0;
    std::int64_t sparsity = 0; ///< 0 keeps every amplitude
    std::string path;
};

struct FilterSpec {
    double epsilon = 0.055;
    double delta = 0.0; ///< 0 derives delta = tau epsilon
    int D = 0;          ///< 0 uses the maximal-runtime bound
    double beta = 0.0;  ///< 0 uses select_beta
};

struct SamplingSpec {
    std::int64_t M = 10000;
    std::string mode = "single-shot"; ///< single-shot | exact | infinite
    int repetitions = 10;
    std::uint64_t seed = 1;
};

struct BackendSpec {
    std::string kind = "exact"; ///< exact | trotter
    std::string r_policy = "fixed"; ///< fixed | formula
    int r = 8;
    double C = 1.0;
    int p = 2;
};

struct DetectionSpec {
    std::string method = "rupture"; ///< rupture | variance-scan | certified
    double alpha = 0.01;
    double k = 2.0;
    int l = 20;
    std::string guard = "after"; ///< after | as-printed | none
    double floor = 2.0;          ///< threshold floor in units of epsilon
    std::string bandwidth = "stddev"; ///< stddev | median
    std::string orientation = "standard"; ///< standard | as-printed
    std::string noise_region = "restricted"; ///< restricted | fixed
    double s = 3.0;
    int window_l = 40;
    double fraction = 0.8;
    double half_window = 1.0; ///< in units of delta
    double eta = 0.0;         ///< certified search; 0 uses 3 epsilon
};

struct ResourcesSpec {
    double eta = 0.0; ///< 0 uses 3 epsilon
    double vartheta = 0.05;
    bool sweep = false;
};

struct OutputSpec {
    std::string dir = "out";
};

struct ExperimentConfig {
    HamiltonianSpec hamiltonian;
    StateSpec state;
    FilterSpec filter;
    SamplingSpec sampling;
    BackendSpec backend;
    DetectionSpec detection;
    ResourcesSpec resources;
    OutputSpec output;

    /// Canonical flat key=value form (sorted, output.dir omitted), hashed below.
    [[nodiscard]] std::string canonical() const;
    /// First 16 hex digits of SHA-256 over canonical().
    [[nodiscard]] std::string hash() const;
};

using FlatConfig = std::map<std::string, std::string>;

/// Parses INI text (sections, key = value) or JSON when the text starts with '{'.
ExperimentConfig parse_config(const std::string &text);
ExperimentConfig load_config(const std::string &path);

/// Applies "section.key" -> value pairs on top of cfg.
void apply_flat(ExperimentConfig &cfg, const FlatConfig &flat);

void validate(const ExperimentConfig &cfg);

} // namespace cdfge
