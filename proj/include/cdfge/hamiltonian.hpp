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

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace cdfge {

/**
 * @brief One weighted Pauli string.
 *
 * `axes[i]` is the operator on site i; site 0 is the most significant bit of
 * the computational-basis index.
 */
struct PauliTerm {
    double coefficient = 0.0;
    std::string axes;

    [[nodiscard]] std::uint64_t x_mask() const;
    [[nodiscard]] std::uint64_t z_mask() const;
    [[nodiscard]] int y_count() const;
};

struct Hamiltonian {
    int n_sites = 0;
    std::vector<PauliTerm> terms;
    double tau = 1.0;
    double norm_bound = 1.0;

    [[nodiscard]] double one_norm() const;
};

/// sum_{i<j, a} (J_a^{ij} / n) sigma_a^i sigma_a^j with J ~ N(0, 1).
Hamiltonian build_heisenberg_full(int n, std::uint64_t seed);

/// Nearest-neighbour jx (XX + YY) + jz ZZ.
Hamiltonian build_xxz_chain(int n, double jx, double jz, bool periodic);

enum class NormMode { OneNorm, Exact };

/// Sets norm_bound and tau = pi / (2 norm_bound (1 + margin)).
Hamiltonian normalize(const Hamiltonian &h, double margin = 0.1,
                      NormMode mode = NormMode::OneNorm);

/// Dense matrix of the unscaled operator (n_sites <= 14).
Eigen::MatrixXcd to_dense(const Hamiltonian &h);

/// Spectral norm from dense diagonalization (n_sites <= 12).
double spectral_norm(const Hamiltonian &h);

/// psi <- P psi for a single Pauli string (coefficient ignored).
void apply_pauli(const PauliTerm &term, const Eigen::VectorXcd &in,
                 Eigen::VectorXcd &out);

void write_hamiltonian(std::ostream &os, const Hamiltonian &h);
Hamiltonian read_hamiltonian(std::istream &is);

/// Shortest decimal string that parses back to the same double.
std::string format_double(double v);
double parse_double(const std::string &s);

} // namespace cdfge
