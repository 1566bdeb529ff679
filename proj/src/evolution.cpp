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
#include "cdfge/evolution.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <ostream>

#include "cdfge/error.hpp"
#include "cdfge/resources.hpp"

namespace cdfge {

std::complex<double> MomentSet::at(int j) const {
    if (j == 0) {
        return {1.0, 0.0};
    }
    const int aj = std::abs(j);
    if (aj % 2 == 0 || (aj - 1) / 2 >= static_cast<int>(odd.size())) {
        throw DomainError("moment index not stored");
    }
    const auto g = odd[static_cast<std::size_t>((aj - 1) / 2)];
    return j > 0 ? g : std::conj(g);
}

EigenDecomposition diagonalize(const Hamiltonian &h) {
    if (h.n_sites > 14) {
        throw DomainError("diagonalize: dense backend limited to n_sites <= 14");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h.tau * to_dense(h));
    if (es.info() != Eigen::Success) {
        throw DomainError("diagonalize: eigensolver failed");
    }
    return {es.eigenvalues(), es.eigenvectors(), h.tau};
}

SpectralMeasure spectral_measure(const EigenDecomposition &ed,
                                 const StateVector &psi) {
    if (ed.vectors.rows() != psi.amplitudes.size()) {
        throw DomainError("spectral_measure: dimension mismatch");
    }
    const Eigen::VectorXcd c = ed.vectors.adjoint() * psi.amplitudes;
    SpectralMeasure m;
    m.points.reserve(static_cast<std::size_t>(c.size()));
    for (Eigen::Index k = 0; k < c.size(); ++k) {
        m.points.push_back({ed.lambdas[k], std::norm(c[k])});
    }
    return m;
}

double exact_cdf(const SpectralMeasure &m, double x) {
    double c = 0.0;
    for (const auto &pt : m.points) {
        if (pt.lambda <= x) {
            c += pt.p;
        }
    }
    return std::min(c, 1.0);
}

MomentSet exact_moments(const SpectralMeasure &m, int d) {
    if (d < 0) {
        throw DomainError("exact_moments: d must be non-negative");
    }
    MomentSet out;
    out.backend = "exact";
    out.odd.assign(static_cast<std::size_t>(d) + 1, {0.0, 0.0});
    for (int k = 0; k <= d; ++k) {
        const double j = 2.0 * k + 1.0;
        std::complex<double> g{0.0, 0.0};
        for (const auto &pt : m.points) {
            g += pt.p * std::polar(1.0, -pt.lambda * j);
        }
        out.odd[static_cast<std::size_t>(k)] = g;
    }
    return out;
}

void apply_pauli_rotation(const PauliTerm &term, double theta,
                          Eigen::VectorXcd &psi) {
    const std::uint64_t xm = term.x_mask();
    const std::uint64_t zm = term.z_mask();
    const auto dim = static_cast<std::uint64_t>(psi.size());
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    if (xm == 0) {
        const std::complex<double> plus{c, -s};  // e^{-i theta}
        const std::complex<double> minus{c, s};  // e^{+i theta}
        for (std::uint64_t b = 0; b < dim; ++b) {
            psi[static_cast<Eigen::Index>(b)] *=
                (std::popcount(b & zm) & 1) ? minus : plus;
        }
        return;
    }
    static const std::complex<double> ipow[4] = {
        {1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    const std::complex<double> iy = ipow[term.y_count() % 4];
    const std::uint64_t top = std::uint64_t{1} << (63 - std::countl_zero(xm));
    const std::complex<double> mis{0.0, -s};
    for (std::uint64_t b = 0; b < dim; ++b) {
        if (b & top) {
            continue;
        }
        const std::uint64_t b2 = b ^ xm;
        // P|b> = ph(b) |b ^ xm>
        const auto ph_b = iy * ((std::popcount(b & zm) & 1) ? -1.0 : 1.0);
        const auto ph_b2 = iy * ((std::popcount(b2 & zm) & 1) ? -1.0 : 1.0);
        const auto a = psi[static_cast<Eigen::Index>(b)];
        const auto a2 = psi[static_cast<Eigen::Index>(b2)];
        psi[static_cast<Eigen::Index>(b)] = c * a + mis * ph_b2 * a2;
        psi[static_cast<Eigen::Index>(b2)] = c * a2 + mis * ph_b * a;
    }
}

void trotter_step_2nd(const Hamiltonian &h, double dt, Eigen::VectorXcd &psi) {
    for (const auto &t : h.terms) {
        apply_pauli_rotation(t, 0.5 * t.coefficient * dt, psi);
    }
    for (auto it = h.terms.rbegin(); it != h.terms.rend(); ++it) {
        apply_pauli_rotation(*it, 0.5 * it->coefficient * dt, psi);
    }
}

int StepsPolicy::steps_per_unit(double tau, int D) const {
    if (kind == Kind::Fixed) {
        if (r < 1) {
            throw DomainError("steps policy: r must be >= 1");
        }
        return r;
    }
    const auto total = trotter_steps(C, order, tau, D, epsilon);
    return static_cast<int>(std::max<std::int64_t>(1, (total + D - 1) / D));
}

std::vector<std::complex<double>> trotter_moments_at(const Hamiltonian &h,
                                                     const StateVector &psi,
                                                     const std::vector<int> &j_values,
                                                     int r) {
    if (r < 1) {
        throw DomainError("trotter_moments: r must be >= 1");
    }
    if (!std::is_sorted(j_values.begin(), j_values.end())) {
        throw DomainError("trotter_moments: j values must be ascending");
    }
    std::vector<std::complex<double>> out;
    out.reserve(j_values.size());
    Eigen::VectorXcd phi = psi.amplitudes;
    const double dt = h.tau / r;
    int t = 0;
    for (int j : j_values) {
        if (j < 1 || j % 2 == 0) {
            throw DomainError("trotter_moments: j must be odd and positive");
        }
        for (; t < j; ++t) {
            for (int s = 0; s < r; ++s) {
                trotter_step_2nd(h, dt, phi);
            }
        }
        out.push_back(psi.amplitudes.dot(phi));
    }
    return out;
}

MomentSet trotter_moments(const Hamiltonian &h, const StateVector &psi, int d,
                          const StepsPolicy &policy) {
    if (d < 0) {
        throw DomainError("trotter_moments: d must be non-negative");
    }
    const int D = 2 * d + 1;
    const int r = policy.steps_per_unit(h.tau, D);
    std::vector<int> js(static_cast<std::size_t>(d) + 1);
    for (int k = 0; k <= d; ++k) {
        js[static_cast<std::size_t>(k)] = 2 * k + 1;
    }
    MomentSet m;
    m.backend = "trotter";
    m.r = r;
    m.odd = trotter_moments_at(h, psi, js, r);
    return m;
}

ShotRecord hadamard_shot(int j, std::complex<double> g, CounterRng &rng) {
    constexpr double kSlack = 1e-12;
    if (std::abs(g.real()) > 1.0 + kSlack || std::abs(g.imag()) > 1.0 + kSlack) {
        throw DomainError("hadamard_shot: |Re g| or |Im g| exceeds 1");
    }
    const double px = 0.5 * (1.0 + g.real());
    const double py = 0.5 * (1.0 + g.imag());
    ShotRecord rec;
    rec.j = j;
    rec.x_outcome = rng.uniform() < px ? 1 : -1;
    rec.y_outcome = rng.uniform() < py ? 1 : -1;
    return rec;
}

void write_moments_csv(std::ostream &os, const MomentSet &m) {
    os << "j,re_g,im_g,backend,r\n";
    os << "0,1,0," << m.backend << ',' << m.r << '\n';
    for (std::size_t k = 0; k < m.odd.size(); ++k) {
        os << 2 * k + 1 << ',' << format_double(m.odd[k].real()) << ','
           << format_double(m.odd[k].imag()) << ',' << m.backend << ',' << m.r
           << '\n';
    }
}

} // namespace cdfge
