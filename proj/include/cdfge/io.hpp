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

#include <filesystem>
#include <string>

#include <json.hpp>

#include "cdfge/pipeline.hpp"

namespace cdfge {

/// "config_hash=<hex> root_seed=<n>"
std::string provenance(const ExperimentConfig &cfg);

nlohmann::json to_json(const DetectionResult &d);
nlohmann::json to_json(const ResourceEstimate &e);

/// Sidecar metadata for one curve file.
nlohmann::json curve_sidecar(const ExperimentConfig &cfg, const Setup &s, int repetition);

void write_text(const std::filesystem::path &p, const std::string &content);

void write_hamiltonian_file(const std::filesystem::path &p, const ExperimentConfig &cfg,
                            const Hamiltonian &h);
/// Binary state followed by a metadata trailer (ignored by read_state).
void write_state_file(const std::filesystem::path &p, const ExperimentConfig &cfg,
                      const StateVector &psi);
void write_series_file(const std::filesystem::path &p, const ExperimentConfig &cfg,
                       const FourierSeries &fs);
void write_moments_file(const std::filesystem::path &p, const ExperimentConfig &cfg,
                        const MomentSet &m);
void write_curve_files(const std::filesystem::path &dir, const ExperimentConfig &cfg,
                       const Setup &s, const std::vector<AcdfCurve> &curves);
void write_spectrum_file(const std::filesystem::path &p, const ExperimentConfig &cfg,
                         const Setup &s);
void write_exact_cdf_file(const std::filesystem::path &p, const ExperimentConfig &cfg,
                          const Setup &s);
void write_detection_file(const std::filesystem::path &p, const ExperimentConfig &cfg,
                          const RunResult &r);
void write_resources_file(const std::filesystem::path &p, const ExperimentConfig &cfg,
                          const ResourceEstimate &e);
/// Columns M, eta_resolvable over M = 10^2 .. 10^12.
void write_sweep_file(const std::filesystem::path &p, const ExperimentConfig &cfg,
                      const ResourceEstimate &e);

AcdfCurve read_curve_csv(const std::filesystem::path &p);

} // namespace cdfge
