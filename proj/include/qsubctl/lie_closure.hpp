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

#ifndef QSUBCTL_LIE_CLOSURE_HPP
#define QSUBCTL_LIE_CLOSURE_HPP

#include <span>
#include <vector>

#include "qsubctl/operator_core.hpp"

namespace qsubctl {

/// Real basis of the Lie algebra generated by {i H_k}. Elements are
/// anti-Hermitian and orthonormal under Re tr(A^dagger B).
struct LieAlgebraBasis {
    Index dim_space = 0;
    std::vector<ComplexMatrix> elements;
    bool closed = false;

    Index dim() const noexcept { return static_cast<Index>(elements.size()); }
};

/// Complex basis of the unital associative algebra generated by a set of
/// matrices, orthonormal under tr(A^dagger B).
struct AssociativeAlgebraBasis {
    Index dim_space = 0;
    std::vector<ComplexMatrix> elements;
    bool contains_identity = false;

    Index dim() const noexcept { return static_cast<Index>(elements.size()); }
};

/// Orthonormal basis of the real Lie algebra generated by {i H_k}.
///
/// The span of all nested commutators equals the span of right-nested
/// brackets [g_1, [g_2, ... [g_{m-1}, g_m]]] of generators, so each newly
/// found element only has to be bracketed with the generators. New elements
/// are appended in discovery order; the sweep repeats until nothing is added.
///
/// `max_dim` <= 0 means n^2. Throws EmptyGenerators, DimensionError, ShapeError
/// (non-Hermitian input) or BudgetExceeded.
LieAlgebraBasis lie_closure(std::span<const ComplexMatrix> generators, double tol = 1e-9, Index max_dim = 0);

/// Basis of the unital associative algebra generated by `generators`
/// (identity adjoined). Words are grown by left multiplication with the
/// generators, which spans every product.
AssociativeAlgebraBasis associative_closure(std::span<const ComplexMatrix> generators, double tol = 1e-9);

/// Real-span rank of {A_k - tr(A_k)/n I}, from the eigenvalues of the Gram
/// matrix under Re tr(A^dagger B).
Index traceless_dim(std::span<const ComplexMatrix> elements, double tol = 1e-9);

/// Largest projection residual of a pairwise commutator of basis elements
/// onto the basis span. Zero (to roundoff) for a closed algebra.
double closure_defect(const LieAlgebraBasis &basis);

}  // namespace qsubctl

#endif  // QSUBCTL_LIE_CLOSURE_HPP
