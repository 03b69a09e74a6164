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

#include <gtest/gtest.h>

#include <cmath>

#include "qsubctl/errors.hpp"
#include "qsubctl/lie_closure.hpp"

using namespace qsubctl;

namespace {

Eigen::VectorXcd ket(Index n, Index k) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(n);
    v(k) = 1.0;
    return v;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

TEST(pauli_string, construction) {
    EXPECT_EQ(pauli_string({"ZI", 1.0}, 2), kron(pauli('Z'), ComplexMatrix::Identity(2, 2)));
    EXPECT_EQ(pauli_string({"III", 2.5}, 3), 2.5 * ComplexMatrix::Identity(8, 8));
    EXPECT_THROW(pauli_string({"XY", 1.0}, 3), LengthMismatch);
    EXPECT_THROW(pauli('Q'), InvalidArgument);
    const ComplexMatrix xxyy = pauli_sum({{"XX", 1.0}, {"YY", 1.0}}, 2);
    EXPECT_EQ(xxyy, example1_generators()[0]);
}

TEST(example1, generator_action) {
    const auto g = example1_generators();
    ASSERT_EQ(g.size(), 3u);
    for (const auto &h : g) EXPECT_TRUE(is_hermitian(h));
    EXPECT_LT((g[2] * ket(4, 1) - 2.0 * ket(4, 1)).norm(), 1e-15);
    for (const auto &h : g) {
        EXPECT_LT((h * ket(4, 0)).norm(), 1e-15);
        EXPECT_LT((h * ket(4, 3)).norm(), 1e-15);
    }
    const auto gp = example1_prime_generators();
    for (const auto &h : gp) {
        EXPECT_TRUE(is_hermitian(h));
        EXPECT_LT((h * ket(4, 1)).norm(), 1e-15);
        EXPECT_LT((h * ket(4, 2)).norm(), 1e-15);
    }
}

TEST(swap_generators, properties) {
    const auto two = swap_generators(2);
    ASSERT_EQ(two.size(), 1u);
    EXPECT_EQ(two[0] * ket(4, 1), ket(4, 2));
    const auto three = swap_generators(3);
    ASSERT_EQ(three.size(), 3u);
    for (const auto &s : three) {
        EXPECT_TRUE(is_hermitian(s));
        EXPECT_TRUE(is_unitary(s));
        EXPECT_EQ(s * s, ComplexMatrix::Identity(8, 8));
    }
    // Qubit 0 is the most significant bit: SWAP_01 |001> = |001>, SWAP_12 |001> = |010>.
    EXPECT_EQ(qubit_swap(3, 0, 1) * ket(8, 1), ket(8, 1));
    EXPECT_EQ(qubit_swap(3, 1, 2) * ket(8, 1), ket(8, 2));
    EXPECT_THROW(swap_generators(1), InvalidArgument);
}

TEST(sector_dimension, binomials) {
    for (int l = 1; l <= 6; ++l) EXPECT_EQ(sector_dimension(l, 1), static_cast<std::uint64_t>(l));
    EXPECT_EQ(sector_dimension(2, 2), 3u);
    EXPECT_EQ(sector_dimension(1, 17), 1u);
    EXPECT_EQ(sector_dimension(3, 0), 1u);
    for (int l = 1; l <= 8; ++l)
        for (int n = 0; n <= 8; ++n)
            EXPECT_EQ(sector_dimension(l, n), binomial(static_cast<std::uint64_t>(n + l - 1), l - 1));
    EXPECT_EQ(sector_dimension(31, 30), 118264581564861424u);  // C(60, 30)
    EXPECT_THROW(sector_dimension(200, 200), ArithmeticError);
    EXPECT_THROW(sector_dimension(0, 1), InvalidArgument);
}

TEST(boson_sector, structure) {
    const auto m = boson_sector(2, 1);
    EXPECT_EQ(m.sector.dim(), 2);
    EXPECT_EQ(m.sector.basis[0], (std::vector<int>{1, 0}));
    // b_0^dagger b_1 |0,1> = |1,0>.
    EXPECT_EQ(m.hoppings[0][1] * ket(2, 1), ket(2, 0));
    EXPECT_EQ(boson_sector(2, 2).sector.dim(), 3);
    EXPECT_EQ(boson_sector(3, 2).sector.dim(), 6);
    EXPECT_EQ(m.sector.index_of({0, 1}), 1);
    EXPECT_EQ(m.sector.index_of({2, 0}), -1);
    EXPECT_THROW(boson_sector(6, 6, 100), BudgetExceeded);

    const auto m22 = boson_sector(2, 2);
    // b_0^dagger b_1 |1,1> = sqrt(2) |2,0>.
    EXPECT_NEAR(std::abs(m22.hoppings[0][1](0, 1) - std::sqrt(2.0)), 0.0, 1e-15);
}

TEST(boson_sector, gl_commutation_relations) {
    for (int l = 1; l <= 4; ++l)
        for (int n = 0; n <= 4; ++n) {
            const auto m = boson_sector(l, n);
            const Index d = m.sector.dim();
            ComplexMatrix number = ComplexMatrix::Zero(d, d);
            for (int i = 0; i < l; ++i) number += m.hoppings[i][i];
            EXPECT_LT((number - static_cast<double>(n) * ComplexMatrix::Identity(d, d)).norm(), 1e-12);
            for (int i = 0; i < l; ++i)
                for (int j = 0; j < l; ++j)
                    for (int k = 0; k < l; ++k)
                        for (int q = 0; q < l; ++q) {
                            ComplexMatrix expected = ComplexMatrix::Zero(d, d);
                            if (j == k) expected += m.hoppings[i][q];
                            if (q == i) expected -= m.hoppings[k][j];
                            EXPECT_LT((commutator(m.hoppings[i][j], m.hoppings[k][q]) - expected).norm(), 1e-12);
                        }
        }
}

TEST(boson_sector, hermitian_generators_span_u_l) {
    for (int l : {2, 3})
        for (int n : {1, 2, 3}) {
            const auto g = boson_hermitian_generators(boson_sector(l, n));
            EXPECT_EQ(static_cast<int>(g.size()), l * l);
            for (const auto &h : g) EXPECT_TRUE(is_hermitian(h));
            EXPECT_EQ(lie_closure(g).dim(), l * l);
        }
}

TEST(dihedral, representation) {
    const auto [r, p] = dihedral_rep();
    EXPECT_EQ(r * ket(3, 0), ket(3, 1));
    EXPECT_EQ(p * p, ComplexMatrix::Identity(3, 3));
    EXPECT_EQ(r * r * r, ComplexMatrix::Identity(3, 3));
    EXPECT_EQ((r * p) * (r * p), ComplexMatrix::Identity(3, 3));
    const Eigen::VectorXcd s = Eigen::VectorXcd::Ones(3) / std::sqrt(3.0);
    EXPECT_LT((r * s - s).norm(), 1e-15);
    EXPECT_LT((p * s - s).norm(), 1e-15);

    const ComplexMatrix f = dihedral_fourier_frame();
    EXPECT_LT((f.adjoint() * f - ComplexMatrix::Identity(2, 2)).norm(), 1e-14);
    EXPECT_LT((f.adjoint() * s).norm(), 1e-14);
    EXPECT_LT((f.adjoint() * p * f - pauli('X')).norm(), 1e-10);
    const ComplexMatrix rr = f.adjoint() * (r - r.adjoint()) * f;
    const ComplexMatrix target = kI * std::sqrt(3.0) * pauli('Z');
    EXPECT_LT(std::min((rr - target).norm(), (rr + target).norm()), 1e-10);
}
