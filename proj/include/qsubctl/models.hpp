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

#ifndef QSUBCTL_MODELS_HPP
#define QSUBCTL_MODELS_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qsubctl/operator_core.hpp"

namespace qsubctl {

/// Tensor product of single-qubit Paulis, one letter from "IXYZ" per qubit,
/// qubit 0 leftmost.
struct PauliString {
    std::string axes;
    double coefficient = 1.0;
};

ComplexMatrix pauli(char axis);

/// Throws LengthMismatch if the axis string does not have n_qubits letters
/// and InvalidArgument on letters outside IXYZ.
ComplexMatrix pauli_string(const PauliString &spec, int n_qubits);

/// Sum of Pauli strings on a common register.
ComplexMatrix pauli_sum(const std::vector<PauliString> &terms, int n_qubits);

/// XX + YY, XY - YX, ZI - IZ on two qubits.
std::vector<ComplexMatrix> example1_generators();
/// XX - YY, XY + YX, ZI + IZ: the same structure on span{|00>, |11>}.
std::vector<ComplexMatrix> example1_prime_generators();

/// SWAP_ij on (C^2)^{(x) n} for every i < j, in lexicographic (i, j) order.
std::vector<ComplexMatrix> swap_generators(int n_qubits);
/// The single transposition i <-> j on n qubits.
ComplexMatrix qubit_swap(int n_qubits, int i, int j);

/// Exact binomial(N + L - 1, L - 1). Throws ArithmeticError on overflow.
std::uint64_t sector_dimension(int modes, int particles);

/// Fixed-particle-number sector of L bosonic modes. Occupations are listed
/// lexicographically, descending in n_1.
struct BosonSector {
    int modes = 0;
    int particles = 0;
    std::vector<std::vector<int>> basis;

    Index dim() const noexcept { return static_cast<Index>(basis.size()); }
    /// Position of an occupation tuple, or -1.
    Index index_of(const std::vector<int> &occupation) const;
};

struct BosonModel {
    BosonSector sector;
    /// hoppings[i][j] = b_i^dagger b_j restricted to the sector.
    std::vector<std::vector<ComplexMatrix>> hoppings;
};

BosonModel boson_sector(int modes, int particles, Index dim_cap = 512);

/// E_ij + E_ji and i(E_ij - E_ji) for i < j, then E_ii; these span the
/// same real Lie algebra as the raw bilinears.
std::vector<ComplexMatrix> boson_hermitian_generators(const BosonModel &model);

/// Coordinate representation of D3: R(z1,z2,z3) = (z3,z1,z2),
/// P(z1,z2,z3) = (z2,z1,z3).
std::pair<ComplexMatrix, ComplexMatrix> dihedral_rep();

/// P, R + R^-1 and i(R - R^-1): a real basis of lambda_1 P + lambda_2 R + conj(lambda_2) R^-1.
std::vector<ComplexMatrix> dihedral_hamiltonians();

/// Columns v_k = (1/sqrt 3) sum_j omega^{k j} |j>, k = 1, 2, j = 1..3.
ComplexMatrix dihedral_fourier_frame();

}  // namespace qsubctl

#endif  // QSUBCTL_MODELS_HPP
