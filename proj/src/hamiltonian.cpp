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
#include "cdfge/hamiltonian.hpp"

#include <bit>
#include <charconv>
#include <cmath>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>

#include "cdfge/error.hpp"
#include "cdfge/rng.hpp"

namespace cdfge {

namespace {

std::uint64_t site_bit(int n_sites, int site) {
    return std::uint64_t{1} << (n_sites - 1 - site);
}

std::string pair_axes(int n, int i, int j, char a) {
    std::string s(static_cast<std::size_t>(n), 'I');
    s[static_cast<std::size_t>(i)] = a;
    s[static_cast<std::size_t>(j)] = a;
    return s;
}

void check_axes(const std::string &axes, int n_sites) {
    if (static_cast<int>(axes.size()) != n_sites) {
        throw DomainError("pauli string length does not match n_sites");
    }
    for (char c : axes) {
        if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z') {
            throw DomainError(std::string("invalid pauli axis '") + c + "'");
        }
    }
}

} // namespace

std::uint64_t PauliTerm::x_mask() const {
    const int n = static_cast<int>(axes.size());
    std::uint64_t m = 0;
    for (int i = 0; i < n; ++i) {
        if (axes[i] == 'X' || axes[i] == 'Y') {
            m |= site_bit(n, i);
        }
    }
    return m;
}

std::uint64_t PauliTerm::z_mask() const {
    const int n = static_cast<int>(axes.size());
    std::uint64_t m = 0;
    for (int i = 0; i < n; ++i) {
        if (axes[i] == 'Z' || axes[i] == 'Y') {
            m |= site_bit(n, i);
        }
    }
    return m;
}

int PauliTerm::y_count() const {
    int c = 0;
    for (char a : axes) {
        c += (a == 'Y');
    }
    return c;
}

double Hamiltonian::one_norm() const {
    double s = 0.0;
    for (const auto &t : terms) {
        s += std::abs(t.coefficient);
    }
    return s;
}

Hamiltonian build_heisenberg_full(int n, std::uint64_t seed) {
    if (n < 2 || n > 26) {
        throw DomainError("build_heisenberg_full: n must lie in [2, 26]");
    }
    Hamiltonian h;
    h.n_sites = n;
    CounterRng rng(seed, kStreamCouplings);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            for (char a : {'X', 'Y', 'Z'}) {
                const double J = rng.normal();
                h.terms.push_back({J / n, pair_axes(n, i, j, a)});
            }
        }
    }
    h.norm_bound = h.one_norm();
    return h;
}

Hamiltonian build_xxz_chain(int n, double jx, double jz, bool periodic) {
    if (n < 2 || n > 26) {
        throw DomainError("build_xxz_chain: n must lie in [2, 26]");
    }
    Hamiltonian h;
    h.n_sites = n;
    const int bonds = (periodic && n > 2) ? n : n - 1;
    for (int b = 0; b < bonds; ++b) {
        const int i = b;
        const int j = (b + 1) % n;
        h.terms.push_back({jx, pair_axes(n, i, j, 'X')});
        h.terms.push_back({jx, pair_axes(n, i, j, 'Y')});
        h.terms.push_back({jz, pair_axes(n, i, j, 'Z')});
    }
    h.norm_bound = h.one_norm();
    return h;
}

Hamiltonian normalize(const Hamiltonian &h, double margin, NormMode mode) {
    if (!(margin >= 0.0)) {
        throw DomainError("normalize: margin must be non-negative");
    }
    Hamiltonian out = h;
    out.norm_bound =
        (mode == NormMode::Exact) ? spectral_norm(h) : h.one_norm();
    if (!(out.norm_bound > 0.0)) {
        throw DomainError("normalize: Hamiltonian has zero norm");
    }
    out.tau = std::numbers::pi / (2.0 * out.norm_bound * (1.0 + margin));
    return out;
}

void apply_pauli(const PauliTerm &term, const Eigen::VectorXcd &in,
                 Eigen::VectorXcd &out) {
    const std::uint64_t xm = term.x_mask();
    const std::uint64_t zm = term.z_mask();
    static const std::complex<double> ipow[4] = {
        {1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    const std::complex<double> iy = ipow[term.y_count() % 4];
    const auto dim = static_cast<std::uint64_t>(in.size());
    out.resize(in.size());
    for (std::uint64_t b = 0; b < dim; ++b) {
        const double sign = (std::popcount(b & zm) & 1) ? -1.0 : 1.0;
        out[static_cast<Eigen::Index>(b ^ xm)] = iy * sign * in[static_cast<Eigen::Index>(b)];
    }
}

Eigen::MatrixXcd to_dense(const Hamiltonian &h) {
    if (h.n_sites < 1 || h.n_sites > 14) {
        throw DomainError("to_dense: n_sites must lie in [1, 14]");
    }
    const auto dim = Eigen::Index{1} << h.n_sites;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    static const std::complex<double> ipow[4] = {
        {1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    for (const auto &t : h.terms) {
        const std::uint64_t xm = t.x_mask();
        const std::uint64_t zm = t.z_mask();
        const std::complex<double> iy = ipow[t.y_count() % 4];
        for (Eigen::Index b = 0; b < dim; ++b) {
            const auto ub = static_cast<std::uint64_t>(b);
            const double sign = (std::popcount(ub & zm) & 1) ? -1.0 : 1.0;
            m(static_cast<Eigen::Index>(ub ^ xm), b) += t.coefficient * sign * iy;
        }
    }
    return m;
}

double spectral_norm(const Hamiltonian &h) {
    if (h.n_sites > 12) {
        throw DomainError("spectral_norm: exact norm limited to n_sites <= 12");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(to_dense(h),
                                                       Eigen::EigenvaluesOnly);
    const auto &ev = es.eigenvalues();
    return std::max(std::abs(ev.minCoeff()), std::abs(ev.maxCoeff()));
}

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return {buf, res.ptr};
}

double parse_double(const std::string &s) {
    double v = 0.0;
    const char *first = s.data();
    const char *last = s.data() + s.size();
    if (first != last && *first == '+') {
        ++first;
    }
    auto res = std::from_chars(first, last, v);
    if (res.ec != std::errc{} || res.ptr != last) {
        throw DomainError("cannot parse number '" + s + "'");
    }
    return v;
}

void write_hamiltonian(std::ostream &os, const Hamiltonian &h) {
    os << h.n_sites << ' ' << format_double(h.tau) << ' '
       << format_double(h.norm_bound) << '\n';
    for (const auto &t : h.terms) {
        os << format_double(t.coefficient) << ' ' << t.axes << '\n';
    }
}

Hamiltonian read_hamiltonian(std::istream &is) {
    Hamiltonian h;
    std::string line;
    bool header = false;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') {
            continue;
        }
        std::istringstream ls(line);
        if (!header) {
            std::string tau, nb;
            if (!(ls >> h.n_sites >> tau >> nb)) {
                throw DomainError("hamiltonian file: bad header");
            }
            h.tau = parse_double(tau);
            h.norm_bound = parse_double(nb);
            header = true;
            continue;
        }
        std::string coef, axes;
        if (!(ls >> coef >> axes)) {
            throw DomainError("hamiltonian file: bad term line '" + line + "'");
        }
        check_axes(axes, h.n_sites);
        h.terms.push_back({parse_double(coef), axes});
    }
    if (!header) {
        throw DomainError("hamiltonian file: missing header");
    }
    return h;
}

} // namespace cdfge
