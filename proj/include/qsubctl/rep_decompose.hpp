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

#ifndef QSUBCTL_REP_DECOMPOSE_HPP
#define QSUBCTL_REP_DECOMPOSE_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "qsubctl/lie_closure.hpp"
#include "qsubctl/operator_core.hpp"
#include "qsubctl/tolerances.hpp"

namespace qsubctl {

/// Irreducible invariant subspace, carried as an n x d isometry.
struct InvariantSubspace {
    ComplexMatrix frame;
    int isotypic_label = -1;
    double invariance_residual = 0.0;

    Index dim() const noexcept { return frame.cols(); }
    Index ambient_dim() const noexcept { return frame.rows(); }
};

/// n equivalent irreducible copies of a d-dimensional irrep.
struct IsotypicComponent {
    int label = 0;
    Index d = 0;
    Index n = 0;
    std::vector<InvariantSubspace> members;
};

struct Decomposition {
    std::vector<IsotypicComponent> components;
    Index total_dim = 0;
};

/// Kernel of a positive semidefinite Hermitian matrix: eigenvectors whose
/// eigenvalue is at most tol * max(largest eigenvalue, scale).
ComplexMatrix psd_kernel(const ComplexMatrix &m, double tol, double scale);

/// Hermitian basis of {X : [X, H_k] = 0 for all k}, orthonormal under
/// tr(A B). Its size is the complex dimension of the commutant.
std::vector<ComplexMatrix> commutant(std::span<const ComplexMatrix> generators, double tol = 1e-9);

/// Splits C^n into irreducible invariant subspaces from the eigenspaces of a
/// seeded random Hermitian element of the commutant. A second independent
/// draw must reproduce the block-dimension multiset; disagreement or a block
/// that fails the irreducibility test triggers a fresh pair of draws, up to
/// `tol.retry_limit` times.
///
/// Throws GenericityFailure when retries run out and InvarianceViolation when
/// an eigenspace leaks under a generator.
std::vector<InvariantSubspace> invariant_irreducible_subspaces(std::span<const ComplexMatrix> generators,
                                                               std::span<const ComplexMatrix> commutant_basis,
                                                               std::uint64_t seed, const Tolerances &tol = {});

/// V^dagger H_k V for each generator.
std::vector<ComplexMatrix> restricted_action(std::span<const ComplexMatrix> generators, const ComplexMatrix &frame);

/// True when the restricted unital associative algebra is all of M_d.
bool is_irreducible(const InvariantSubspace &s, std::span<const ComplexMatrix> generators, double tol = 1e-9);

/// Dimension of {T : T A_k = B_k T for all k}.
Index intertwiner_dim(std::span<const ComplexMatrix> action_a, std::span<const ComplexMatrix> action_b,
                      double tol = 1e-9);

/// Schur test for two irreducible subspaces. Throws NotIrreducible when
/// either input fails the d^2 associative-dimension check.
bool are_equivalent(const InvariantSubspace &a, const InvariantSubspace &b, std::span<const ComplexMatrix> generators,
                    double tol = 1e-9);

/// Groups irreducible subspaces into isotypic components. Labels run over
/// decreasing d, ties in order of first appearance. Throws
/// IncompleteDecomposition if the frames do not fill C^n.
Decomposition isotypic_grouping(std::vector<InvariantSubspace> subspaces, std::span<const ComplexMatrix> generators,
                                const Tolerances &tol = {});

struct WedderburnDiagnostics {
    Index alg_dim = 0;
    Index sum_d_squared = 0;
    Index comm_dim = 0;
    Index sum_n_squared = 0;
    Index sum_nd = 0;
    Index total_dim = 0;

    bool algebra_ok() const noexcept { return alg_dim == sum_d_squared; }
    bool commutant_ok() const noexcept { return comm_dim == sum_n_squared; }
    bool completeness_ok() const noexcept { return sum_nd == total_dim; }
    bool pass() const noexcept { return algebra_ok() && commutant_ok() && completeness_ok(); }
};

WedderburnDiagnostics wedderburn_check(const Decomposition &dec, const AssociativeAlgebraBasis &alg,
                                       std::span<const ComplexMatrix> comm);

/// Concatenation of every member frame; unitary for a complete decomposition.
ComplexMatrix stacked_frames(const Decomposition &dec);

}  // namespace qsubctl

#endif  // QSUBCTL_REP_DECOMPOSE_HPP
