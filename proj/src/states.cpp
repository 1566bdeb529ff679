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
#include "cdfge/states.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <istream>
#include <numbers>
#include <numeric>
#include <ostream>

#include "cdfge/error.hpp"
#include "cdfge/rng.hpp"

namespace cdfge {

namespace {

constexpr std::array<char, 8> kMagic = {'C', 'D', 'F', 'G', 'S', 'T', 'V', '1'};

void put_u64(std::ostream &os, std::uint64_t v) {
    std::array<char, 8> b{};
    for (int i = 0; i < 8; ++i) {
        b[static_cast<std::size_t>(i)] = static_cast<char>((v >> (8 * i)) & 0xFF);
    }
    os.write(b.data(), 8);
}

std::uint64_t get_u64(std::istream &is) {
    std::array<unsigned char, 8> b{};
    if (!is.read(reinterpret_cast<char *>(b.data()), 8)) {
        throw DomainError("state file: truncated");
    }
    std::uint64_t v = 0;
    for (int i = 7; i >= 0; --i) {
        v = (v << 8) | b[static_cast<std::size_t>(i)];
    }
    return v;
}

void normalize_in_place(StateVector &psi) {
    const double nrm = psi.amplitudes.norm();
    if (!(nrm > 0.0)) {
        throw DomainError("state has zero norm");
    }
    psi.amplitudes /= nrm;
}

} // namespace

void fix_global_phase(StateVector &psi) {
    Eigen::Index best = 0;
    double best_mag = -1.0;
    for (Eigen::Index i = 0; i < psi.amplitudes.size(); ++i) {
        const double m = std::abs(psi.amplitudes[i]);
        if (m > best_mag) {
            best_mag = m;
            best = i;
        }
    }
    if (best_mag > 0.0) {
        const auto phase = std::conj(psi.amplitudes[best]) / best_mag;
        psi.amplitudes *= phase;
        psi.amplitudes[best] = best_mag;
    }
}

StateVector random_state(int n, std::uint64_t seed) {
    if (n < 1 || n > 26) {
        throw DomainError("random_state: n must lie in [1, 26]");
    }
    StateVector psi;
    psi.n_sites = n;
    const auto dim = Eigen::Index{1} << n;
    psi.amplitudes.resize(dim);
    CounterRng rng(seed, kStreamState);
    for (Eigen::Index i = 0; i < dim; ++i) {
        const double re = rng.normal();
        const double im = rng.normal();
        psi.amplitudes[i] = {re, im};
    }
    normalize_in_place(psi);
    fix_global_phase(psi);
    return psi;
}

StateVector state_with_overlaps(const Eigen::MatrixXcd &eigenvectors,
                                const std::vector<std::pair<int, double>> &targets,
                                std::uint64_t seed) {
    const Eigen::Index dim = eigenvectors.rows();
    if (dim < 2 || !std::has_single_bit(static_cast<std::uint64_t>(dim)) ||
        eigenvectors.cols() != dim) {
        throw DomainError("state_with_overlaps: eigenbasis must be square of size 2^n");
    }
    std::vector<char> fixed(static_cast<std::size_t>(dim), 0);
    double total = 0.0;
    for (const auto &[k, p] : targets) {
        if (k < 0 || k >= dim) {
            throw DomainError("state_with_overlaps: eigenvector index out of range");
        }
        if (!(p >= 0.0) || fixed[static_cast<std::size_t>(k)]) {
            throw DomainError("state_with_overlaps: invalid or repeated target");
        }
        fixed[static_cast<std::size_t>(k)] = 1;
        total += p;
    }
    if (total > 1.0 + 1e-12) {
        throw DomainError("state_with_overlaps: target overlaps sum above 1");
    }
    const double rest = std::max(0.0, 1.0 - total);
    const auto free_count =
        dim - static_cast<Eigen::Index>(std::count(fixed.begin(), fixed.end(), 1));
    if (rest > 1e-12 && free_count == 0) {
        throw DomainError("state_with_overlaps: residual weight with no free eigenvectors");
    }

    CounterRng rng(seed, kStreamState);
    Eigen::VectorXcd c = Eigen::VectorXcd::Zero(dim);
    for (const auto &[k, p] : targets) {
        const double phi = 2.0 * std::numbers::pi * rng.uniform();
        c[k] = std::polar(std::sqrt(p), phi);
    }
    if (rest > 0.0 && free_count > 0) {
        double free_norm2 = 0.0;
        for (Eigen::Index k = 0; k < dim; ++k) {
            if (!fixed[static_cast<std::size_t>(k)]) {
                const double re = rng.normal();
                const double im = rng.normal();
                c[k] = {re, im};
                free_norm2 += std::norm(c[k]);
            }
        }
        const double scale = std::sqrt(rest / free_norm2);
        for (Eigen::Index k = 0; k < dim; ++k) {
            if (!fixed[static_cast<std::size_t>(k)]) {
                c[k] *= scale;
            }
        }
    }
    StateVector psi;
    psi.n_sites = std::countr_zero(static_cast<std::uint64_t>(dim));
    psi.amplitudes = eigenvectors * c;
    fix_global_phase(psi);
    return psi;
}

StateVector sparsify(const StateVector &psi, std::int64_t s) {
    const auto dim = psi.amplitudes.size();
    if (s < 1 || s > dim) {
        throw DomainError("sparsify: s must lie in [1, 2^n]");
    }
    if (psi.amplitudes.squaredNorm() == 0.0) {
        throw DomainError("sparsify: all amplitudes are zero");
    }
    if (s == dim) {
        return psi;
    }
    std::vector<Eigen::Index> order(static_cast<std::size_t>(dim));
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    std::stable_sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
        return std::abs(psi.amplitudes[a]) > std::abs(psi.amplitudes[b]);
    });
    StateVector out;
    out.n_sites = psi.n_sites;
    out.amplitudes = Eigen::VectorXcd::Zero(dim);
    for (std::int64_t i = 0; i < s; ++i) {
        const auto k = order[static_cast<std::size_t>(i)];
        out.amplitudes[k] = psi.amplitudes[k];
    }
    normalize_in_place(out);
    return out;
}

StateMetrics state_metrics(const StateVector &a, const StateVector &b) {
    if (a.amplitudes.size() != b.amplitudes.size()) {
        throw DomainError("state_metrics: dimension mismatch");
    }
    return {std::abs(a.amplitudes.dot(b.amplitudes)),
            (a.amplitudes - b.amplitudes).norm()};
}

void write_state(std::ostream &os, const StateVector &psi) {
    os.write(kMagic.data(), kMagic.size());
    put_u64(os, static_cast<std::uint64_t>(psi.n_sites));
    for (Eigen::Index i = 0; i < psi.amplitudes.size(); ++i) {
        put_u64(os, std::bit_cast<std::uint64_t>(psi.amplitudes[i].real()));
        put_u64(os, std::bit_cast<std::uint64_t>(psi.amplitudes[i].imag()));
    }
}

StateVector read_state(std::istream &is) {
    std::array<char, 8> magic{};
    if (!is.read(magic.data(), magic.size()) || magic != kMagic) {
        throw DomainError("state file: bad magic");
    }
    const auto n = get_u64(is);
    if (n < 1 || n > 26) {
        throw DomainError("state file: n_sites out of range");
    }
    StateVector psi;
    psi.n_sites = static_cast<int>(n);
    const auto dim = Eigen::Index{1} << psi.n_sites;
    psi.amplitudes.resize(dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        const double re = std::bit_cast<double>(get_u64(is));
        const double im = std::bit_cast<double>(get_u64(is));
        psi.amplitudes[i] = {re, im};
    }
    return psi;
}

} // namespace cdfge
