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

#include <optional>
#include <vector>

#include "cdfge/acdf.hpp"
#include "cdfge/config.hpp"
#include "cdfge/detect.hpp"
#include "cdfge/evolution.hpp"
#include "cdfge/fourier.hpp"
#include "cdfge/hamiltonian.hpp"
#include "cdfge/resources.hpp"
#include "cdfge/states.hpp"

namespace cdfge {

/// Everything upstream of sampling: operator, state, filter, moments.
struct Setup {
    Hamiltonian h;
    StateVector psi;
    std::optional<EigenDecomposition> ed;
    std::optional<SpectralMeasure> measure;
    FourierSeries fs;
    double delta = 0.0;
    std::vector<double> grid;
    MomentSet moments;
};

Hamiltonian build_hamiltonian(const ExperimentConfig &cfg);
StateVector build_state(const ExperimentConfig &cfg, const Hamiltonian &h,
                        std::optional<EigenDecomposition> &ed);
FourierSeries build_filter(const ExperimentConfig &cfg, double delta);

/// Steps through build -> normalize -> state -> filter -> moments.
Setup prepare(const ExperimentConfig &cfg, bool with_moments = true);

/// R curves (a single deterministic curve in infinite mode).
std::vector<AcdfCurve> build_curves(const Setup &s, const ExperimentConfig &cfg);

DetectParams detect_params(const ExperimentConfig &cfg, const Setup &s);

struct RunResult {
    Setup setup;
    std::vector<AcdfCurve> curves;
    std::vector<DetectionResult> detections;
    bool detected = false;
    double lambda_estimate = 0.0; ///< scaled units
    double energy_estimate = 0.0; ///< lambda_estimate / tau
    ResourceEstimate resources;
};

/// Detection on every curve plus median-of-means over refined energies.
void detect_all(RunResult &r, const ExperimentConfig &cfg);

RunResult run_experiment(const ExperimentConfig &cfg);

ResourceEstimate resources_for(const ExperimentConfig &cfg, const Setup &s);

} // namespace cdfge
