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

#include "qsubctl/group_algebra.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "qsubctl/errors.hpp"
#include "qsubctl/lie_closure.hpp"
#include "qsubctl/models.hpp"

using namespace qsubctl;

namespace {

FiniteGroupRep dihedral() {
    const auto [r, p] = dihedral_rep();
    const std::vector<ComplexMatrix> gens{r, p};
    return group_closure(gens);
}

void expect_latin_square(const FiniteGroupRep &g) {
    const auto n = static_cast<std::size_t>(g.order());
    for (std::size_t a = 0; a < n; ++a) {
        std::set<int> row(g.mult_table[a].begin(), g.mult_table[a].end());
        EXPECT_EQ(row.size(), n);
        std::set<int> col;
        for (std::size_t b = 0; b < n; ++b) col.insert(g.mult_table[b][a]);
        EXPECT_EQ(col.size(), n);
        EXPECT_EQ(g.mult_table[0][a], static_cast<int>(a));
        EXPECT_EQ(g.mult_table[a][0], static_cast<int>(a));
        EXPECT_EQ(g.mult_table[a][g.inverse[a]], 0);
    }
}

}  // namespace

TEST(group_closure, dihedral_order_six) {
    const auto g = dihedral();
    EXPECT_EQ(g.order(), 6);
    EXPECT_EQ(g.dim(), 3);
    EXPECT_LT((g.elements[0] - ComplexMatrix::Identity(3, 3)).norm(), 1e-15);
    expect_latin_square(g);
    for (std::size_t a = 0; a < g.elements.size(); ++a)
        for (std::size_t b = 0; b < g.elements.size(); ++b)
            EXPECT_LT((g.elements[a] * g.elements[b] - g.elements[g.mult_table[a][b]]).norm(), 1e-12);
}

TEST(group_closure, exchange_and_trivial) {
    const auto s3 = group_closure(swap_generators(3));
    EXPECT_EQ(s3.order(), 6);
    expect_latin_square(s3);
    EXPECT_EQ(group_closure(swap_generators(4)).order(), 24);

    const std::vector<ComplexMatrix> id{ComplexMatrix::Identity(2, 2)};
    EXPECT_EQ(group_closure(id).order(), 1);

    // The image group is what counts: -I and I generate {I, -I}.
    const std::vector<ComplexMatrix> minus{-ComplexMatrix::Identity(2, 2)};
    EXPECT_EQ(group_closure(minus).order(), 2);
}

TEST(group_closure, errors) {
    const auto [r, p] = dihedral_rep();
    const std::vector<ComplexMatrix> gens{r, p};
    EXPECT_THROW(group_closure(gens, -1.0, 5), BudgetExceeded);
    const std::vector<ComplexMatrix> bad{2.0 * r};
    EXPECT_THROW(group_closure(bad), NonUnitary);
    const std::vector<ComplexMatrix> none;
    EXPECT_THROW(group_closure(none), EmptyGenerators);
}

TEST(hermitian_group_sample, hermitian_and_seeded) {
    const auto g = dihedral();
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const ComplexMatrix h = hermitian_group_sample(g, seed);
        EXPECT_LT((h - h.adjoint()).norm(), 1e-12);
    }
    EXPECT_EQ(hermitian_group_sample(g, 3), hermitian_group_sample(g, 3));
    EXPECT_NE(hermitian_group_sample(g, 3), hermitian_group_sample(g, 4));

    const std::vector<ComplexMatrix> id{ComplexMatrix::Identity(2, 2)};
    const ComplexMatrix t = hermitian_group_sample(group_closure(id), 1);
    EXPECT_NEAR(std::abs(t(0, 0).imag()), 0.0, 1e-15);
    EXPECT_LT((t - t(0, 0) * ComplexMatrix::Identity(2, 2)).norm(), 1e-15);
}

TEST(hermitian_group_sample, restricted_support_has_two_parameter_form) {
    const auto g = dihedral();
    const auto [r, p] = dihedral_rep();
    auto find = [&](const ComplexMatrix &m) {
        for (std::size_t k = 0; k < g.elements.size(); ++k)
            if ((g.elements[k] - m).norm() < 1e-12) return static_cast<int>(k);
        return -1;
    };
    const int ip = find(p), ir = find(r), irinv = find(r.adjoint());
    ASSERT_GE(std::min({ip, ir, irinv}), 0);
    const std::vector<int> support{ip, ir, irinv};
    const ComplexMatrix h = hermitian_group_sample(g, 9, support);
    // h = l1 P + l2 R + conj(l2) R^-1 with real l1.
    const ComplexMatrix rinv = r.adjoint();
    Eigen::MatrixXcd a(9, 3);
    a << vec(p), vec(r), vec(rinv);
    const Eigen::VectorXcd l = a.colPivHouseholderQr().solve(vec(h));
    EXPECT_NEAR(l(0).imag(), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(l(2) - std::conj(l(1))), 0.0, 1e-12);
    EXPECT_GT(std::abs(l(1)), 1e-6);
    EXPECT_LT((a * l - vec(h)).norm(), 1e-12);
}

TEST(group_algebra_analyze, dihedral_generic_across_seeds) {
    const auto g = dihedral();
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const auto r = group_algebra_analyze(g, seed);
        EXPECT_TRUE(r.generic);
        EXPECT_EQ(r.group_order, 6);
        ASSERT_EQ(r.report.verdicts.size(), 2u);
        EXPECT_EQ(r.report.verdicts[0].d, 2);
        EXPECT_TRUE(r.report.verdicts[0].universal);
        EXPECT_TRUE(r.report.verdicts[1].trivial_code);
        // Generic samples reach the full anti-Hermitian part of the represented algebra.
        EXPECT_EQ(r.report.closure_dim, 5);
    }
}

TEST(group_algebra_analyze, exchange_group_algebra) {
    const auto g = group_closure(swap_generators(3));
    const auto r = group_algebra_analyze(g, 0);
    EXPECT_TRUE(r.generic);
    EXPECT_EQ(r.report.closure_dim, 5);
    EXPECT_EQ(r.report.closure_dim, oracle::lie_closure_dim(r.hamiltonians));
    ASSERT_EQ(r.report.verdicts.size(), 2u);
    EXPECT_EQ(r.report.verdicts[0].d, 2);
    EXPECT_EQ(r.report.verdicts[0].n, 2);
    EXPECT_TRUE(r.report.verdicts[0].universal);
    EXPECT_EQ(r.report.verdicts[1].d, 1);
    EXPECT_EQ(r.report.verdicts[1].n, 4);
}

TEST(group_algebra_analyze, trivial_group_and_errors) {
    const std::vector<ComplexMatrix> id{ComplexMatrix::Identity(2, 2)};
    const auto g = group_closure(id);
    const auto r = group_algebra_analyze(g, 0);
    for (const auto &v : r.report.verdicts) EXPECT_FALSE(v.universal);
    EXPECT_THROW(group_algebra_analyze(g, 0, 1), InvalidArgument);
}
