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

#include "cdfge/hamiltonian.hpp"
#include "cdfge/rng.hpp"
#include "cdfge/states.hpp"

namespace cdfge {

/// Scaled spectrum lambda_k = tau E_k (ascending) with eigenvector columns.
struct EigenDecomposition {
    Eigen::VectorXd lambdas;
    Eigen::MatrixXcd vectors;
    double tau = 1.0;
};

struct SpectralPoint {
    double lambda = 0.0;
    double p = 0.0;
};

/// Ascending (lambda_k, p_k) pairs.
struct SpectralMeasure {
    std::vector<SpectralPoint> points;
};

/**
 * @brief Fourier moments g_j for j = 0 and odd j = 1..2d+1.
 *
 * Negative j follow from g_{-j} = conj(g_j).
 */
struct MomentSet {
    std::vector<std::complex<double>> odd; ///< odd[k] = g_{2k+1}
    std::string backend = "exact";
    int r = 0;

    [[nodiscard]] int d() const { return static_cast<int>(odd.size()) - 1; }
    [[nodiscard]] std::complex<double> at(int j) const;
};

struct ShotRecord {
    int j = 0;
    int x_outcome = 1;
    int y_outcome = 1;
};

EigenDecomposition diagonalize(const Hamiltonian &h);

SpectralMeasure spectral_measure(const EigenDecomposition &ed,
                                 const StateVector &psi);

/// Right-continuous C(x) = sum_{lambda_k <= x} p_k.
double exact_cdf(const SpectralMeasure &m, double x);

MomentSet exact_moments(const SpectralMeasure &m, int d);

/// One symmetric second-order step of length dt.
void trotter_step_2nd(const Hamiltonian &h, double dt, Eigen::VectorXcd &psi);

/// e^{-i theta P} psi in place.
void apply_pauli_rotation(const PauliTerm &term, double theta,
                          Eigen::VectorXcd &psi);

struct StepsPolicy {
    enum class Kind { Fixed, Formula };
    Kind kind = Kind::Fixed;
    int r = 8;          ///< steps per unit time tau (Fixed)
    double C = 1.0;     ///< commutator prefactor (Formula)
    int order = 2;      ///< product-formula order p (Formula)
    double epsilon = 0.1;

    /// Steps per unit tau for a run whose largest moment index is D.
    [[nodiscard]] int steps_per_unit(double tau, int D) const;
};

/// g_j = <psi| U_trotter(j tau) |psi> with dt = tau / r for each requested odd j.
MomentSet trotter_moments(const Hamiltonian &h, const StateVector &psi, int d,
                          const StepsPolicy &policy);

/// Moment list for arbitrary odd j values (ascending), r steps per unit tau.
std::vector<std::complex<double>> trotter_moments_at(const Hamiltonian &h,
                                                     const StateVector &psi,
                                                     const std::vector<int> &j_values,
                                                     int r);

/// One Hadamard-test shot pair with E[X] = Re g, E[Y] = Im g.
ShotRecord hadamard_shot(int j, std::complex<double> g, CounterRng &rng);

void write_moments_csv(std::ostream &os, const MomentSet &m);

} // namespace cdfge
