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
#include <iosfwd>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace cdfge {

/// Normalized amplitudes over 2^n basis states.
struct StateVector {
    int n_sites = 0;
    Eigen::VectorXcd amplitudes;
};

/// i.i.d. complex standard-normal amplitudes, normalized.
StateVector random_state(int n, std::uint64_t seed);

/**
 * @brief State with prescribed squared overlaps on selected eigenvectors.
 *
 * @param eigenvectors Orthonormal columns.
 * @param targets (column index, p_k) pairs.
 */
StateVector state_with_overlaps(const Eigen::MatrixXcd &eigenvectors,
                                const std::vector<std::pair<int, double>> &targets,
                                std::uint64_t seed);

/// Keep the s largest-magnitude amplitudes (ties: lower index) and renormalize.
StateVector sparsify(const StateVector &psi, std::int64_t s);

struct StateMetrics {
    double overlap = 0.0;
    double l2_distance = 0.0;
};

StateMetrics state_metrics(const StateVector &a, const StateVector &b);

/// Rotate the global phase so the largest amplitude is real and >= 0.
void fix_global_phase(StateVector &psi);

void write_state(std::ostream &os, const StateVector &psi);
StateVector read_state(std::istream &is);

} // namespace cdfge
