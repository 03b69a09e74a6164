// Copyright 2026 The qsubctl Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qsubctl/models.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "qsubctl/errors.hpp"

namespace qsubctl {

ComplexMatrix pauli(char axis) {
    ComplexMatrix m = ComplexMatrix::Zero(2, 2);
    switch (axis) {
        case 'I':
            m(0, 0) = m(1, 1) = 1.0;
            break;
        case 'X':
            m(0, 1) = m(1, 0) = 1.0;
            break;
        case 'Y':
            m(0, 1) = -kI;
            m(1, 0) = kI;
            break;
        case 'Z':
            m(0, 0) = 1.0;
            m(1, 1) = -1.0;
            break;
        default:
            throw InvalidArgument(std::string("unknown Pauli axis '") + axis + "'");
    }
    return m;
}

ComplexMatrix pauli_string(const PauliString &spec, int n_qubits) {
    if (n_qubits < 1 || static_cast<int>(spec.axes.size()) != n_qubits) {
        throw LengthMismatch("Pauli string '" + spec.axes + "' does not have " + std::to_string(n_qubits) +
                             " letters");
    }
    ComplexMatrix out = ComplexMatrix::Identity(1, 1);
    for (char axis : spec.axes) out = kron(out, pauli(axis));
    return spec.coefficient * out;
}

ComplexMatrix pauli_sum(const std::vector<PauliString> &terms, int n_qubits) {
    const Index dim = Index{1} << n_qubits;
    ComplexMatrix out = ComplexMatrix::Zero(dim, dim);
    for (const auto &t : terms) out += pauli_string(t, n_qubits);
    return out;
}

std::vector<ComplexMatrix> example1_generators() {
    return {pauli_sum({{"XX", 1}, {"YY", 1}}, 2), pauli_sum({{"XY", 1}, {"YX", -1}}, 2),
            pauli_sum({{"ZI", 1}, {"IZ", -1}}, 2)};
}

std::vector<ComplexMatrix> example1_prime_generators() {
    return {pauli_sum({{"XX", 1}, {"YY", -1}}, 2), pauli_sum({{"XY", 1}, {"YX", 1}}, 2),
            pauli_sum({{"ZI", 1}, {"IZ", 1}}, 2)};
}

ComplexMatrix qubit_swap(int n_qubits, int i, int j) {
    if (n_qubits < 1 || i < 0 || j < 0 || i >= n_qubits || j >= n_qubits) {
        throw InvalidArgument("swap indices out of range");
    }
    const Index dim = Index{1} << n_qubits;
    ComplexMatrix s = ComplexMatrix::Zero(dim, dim);
    const int bi = n_qubits - 1 - i, bj = n_qubits - 1 - j;  // qubit 0 is the most significant bit
    for (Index b = 0; b < dim; ++b) {
        const Index vi = (b >> bi) & 1, vj = (b >> bj) & 1;
        Index c = b & ~((Index{1} << bi) | (Index{1} << bj));
        c |= (vj << bi) | (vi << bj);
        s(c, b) = 1.0;
    }
    return s;
}

std::vector<ComplexMatrix> swap_generators(int n_qubits) {
    if (n_qubits < 2) throw InvalidArgument("swap_generators needs n >= 2");
    if (n_qubits > 9) throw InvalidArgument("swap_generators: 2^n exceeds the 512 dimension cap");
    std::vector<ComplexMatrix> out;
    for (int i = 0; i < n_qubits; ++i)
        for (int j = i + 1; j < n_qubits; ++j) out.push_back(qubit_swap(n_qubits, i, j));
    return out;
}

std::uint64_t sector_dimension(int modes, int particles) {
    if (modes < 1 || particles < 0) throw InvalidArgument("sector_dimension needs L >= 1, N >= 0");
    // binomial(N + L - 1, k) with k = min(N, L - 1), built as exact running products.
    const std::uint64_t top = std::uint64_t(particles) + std::uint64_t(modes) - 1;
    const std::uint64_t k = std::min<std::uint64_t>(std::uint64_t(particles), std::uint64_t(modes) - 1);
    unsigned __int128 acc = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        acc = acc * (top - k + i) / i;  // exact: acc holds binomial(top - k + i, i)
        if (acc > std::numeric_limits<std::uint64_t>::max()) {
            throw ArithmeticError("sector dimension overflows 64 bits");
        }
    }
    return static_cast<std::uint64_t>(acc);
}

Index BosonSector::index_of(const std::vector<int> &occupation) const {
    for (std::size_t k = 0; k < basis.size(); ++k)
        if (basis[k] == occupation) return static_cast<Index>(k);
    return -1;
}

namespace {

void fill_occupations(int mode, int remaining, std::vector<int> &current, std::vector<std::vector<int>> &out) {
    const int modes = static_cast<int>(current.size());
    if (mode == modes - 1) {
        current[static_cast<std::size_t>(mode)] = remaining;
        out.push_back(current);
        return;
    }
    for (int k = remaining; k >= 0; --k) {
        current[static_cast<std::size_t>(mode)] = k;
        fill_occupations(mode + 1, remaining - k, current, out);
    }
}

}  // namespace

BosonModel boson_sector(int modes, int particles, Index dim_cap) {
    const std::uint64_t expected = sector_dimension(modes, particles);
    if (expected > static_cast<std::uint64_t>(dim_cap)) {
        throw BudgetExceeded("boson sector dimension " + std::to_string(expected) + " exceeds cap " +
                             std::to_string(dim_cap));
    }
    BosonModel model;
    model.sector.modes = modes;
    model.sector.particles = particles;
    std::vector<int> current(static_cast<std::size_t>(modes), 0);
    fill_occupations(0, particles, current, model.sector.basis);

    const Index dim = model.sector.dim();
    const auto l = static_cast<std::size_t>(modes);
    model.hoppings.assign(l, std::vector<ComplexMatrix>(l, ComplexMatrix::Zero(dim, dim)));
    for (Index col = 0; col < dim; ++col) {
        const auto &occ = model.sector.basis[static_cast<std::size_t>(col)];
        for (std::size_t i = 0; i < l; ++i) {
            model.hoppings[i][i](col, col) = occ[i];
            for (std::size_t j = 0; j < l; ++j) {
                if (i == j || occ[j] == 0) continue;
                auto target = occ;
                target[i] += 1;
                target[j] -= 1;
                const Index row = model.sector.index_of(target);
                model.hoppings[i][j](row, col) = std::sqrt(double(occ[i] + 1) * double(occ[j]));
            }
        }
    }
    return model;
}

std::vector<ComplexMatrix> boson_hermitian_generators(const BosonModel &model) {
    const auto l = model.hoppings.size();
    std::vector<ComplexMatrix> out;
    for (std::size_t i = 0; i < l; ++i)
        for (std::size_t j = i + 1; j < l; ++j) {
            const auto &eij = model.hoppings[i][j];
            const auto &eji = model.hoppings[j][i];
            out.push_back(eij + eji);
            out.push_back(kI * (eij - eji));
        }
    for (std::size_t i = 0; i < l; ++i) out.push_back(model.hoppings[i][i]);
    return out;
}

std::pair<ComplexMatrix, ComplexMatrix> dihedral_rep() {
    ComplexMatrix r = ComplexMatrix::Zero(3, 3), p = ComplexMatrix::Zero(3, 3);
    // (R z)_1 = z_3, (R z)_2 = z_1, (R z)_3 = z_2
    r(0, 2) = r(1, 0) = r(2, 1) = 1.0;
    // (P z)_1 = z_2, (P z)_2 = z_1, (P z)_3 = z_3
    p(0, 1) = p(1, 0) = p(2, 2) = 1.0;
    return {r, p};
}

std::vector<ComplexMatrix> dihedral_hamiltonians() {
    const auto [r, p] = dihedral_rep();
    const ComplexMatrix r_inv = r.adjoint();
    return {p, r + r_inv, kI * (r - r_inv)};
}

ComplexMatrix dihedral_fourier_frame() {
    const Complex omega = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
    ComplexMatrix v(3, 2);
    for (int k = 1; k <= 2; ++k)
        for (int j = 1; j <= 3; ++j) v(j - 1, k - 1) = std::pow(omega, k * j) / std::sqrt(3.0);
    return v;
}

}  // namespace qsubctl
