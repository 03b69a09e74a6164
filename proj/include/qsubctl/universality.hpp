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

#ifndef QSUBCTL_UNIVERSALITY_HPP
#define QSUBCTL_UNIVERSALITY_HPP

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qsubctl/lie_closure.hpp"
#include "qsubctl/operator_core.hpp"
#include "qsubctl/rep_decompose.hpp"
#include "qsubctl/tolerances.hpp"

namespace qsubctl {

struct Restriction {
    ComplexMatrix restricted;  // frame^dagger * op * frame
    double residual = 0.0;     // |(I - frame frame^dagger) op frame|_F
};

Restriction restrict_to(const ComplexMatrix &op, const InvariantSubspace &subspace);

/// Dimension criterion on one code. `restricted_dim` is the traceless real
/// dimension of the algebra restricted to the code; the code is universal
/// when that reaches d^2 - 1. One-dimensional codes are never reported
/// universal and carry `trivial_code`.
struct CodeVerdict {
    int isotypic_label = -1;
    Index d = 0;
    Index n = 1;
    Index restricted_dim = 0;
    Index deficiency = 0;
    bool universal = false;
    bool trivial_code = false;
    double invariance_residual = 0.0;
};

/// Throws InvarianceViolation if any closure element leaks out of the
/// subspace by more than tol.invariance * max(1, |L|_F).
CodeVerdict code_universality(const LieAlgebraBasis &closure, const InvariantSubspace &subspace,
                              const Tolerances &tol = {});

struct UniversalityReport {
    std::string input_digest;
    Index dimension = 0;
    Index closure_dim = 0;
    Index closure_traceless_dim = 0;
    Decomposition decomposition;
    std::vector<CodeVerdict> verdicts;  // one per isotypic component, same order
    WedderburnDiagnostics wedderburn;
    bool globally_universal = false;
    std::uint64_t seed = 0;
    Tolerances tolerances;
};

/// Stable 64-bit FNV-1a digest of a generator set, rendered as 16 hex digits.
std::string digest_generators(std::span<const ComplexMatrix> generators);

/// Closure, commutant, irreducible splitting, isotypic grouping, one verdict
/// per component and the Wedderburn counts, in that order. Errors carry the
/// failing stage.
UniversalityReport analyze(std::span<const ComplexMatrix> generators, std::uint64_t seed = 0,
                           const Tolerances &tol = {});

/// Number of singular values of the realigned operator above
/// tol * (largest). Throws ShapeError unless d1 * d2 matches X.
Index schmidt_rank(const ComplexMatrix &x, Index d1, Index d2, double tol = 1e-9);

/// SWAP on C^d (x) C^d.
ComplexMatrix swap_operator(Index d);

/// A bipartite unitary is non-entangling exactly when it is a product of
/// local unitaries, possibly followed by SWAP. Throws NonUnitary.
bool is_entangling(const ComplexMatrix &x, Index d1, Index d2, double tol = 1e-9);

struct CouplingVerdict {
    bool identity_elsewhere = false;  // X = X_ij (x) I on the other clusters
    double locality_residual = 0.0;
    bool code_invariant = false;      // C_i (x) C_j is X_ij-invariant
    double invariance_residual = 0.0;
    bool entangling = false;          // restriction to C_i (x) C_j entangles
    ComplexMatrix pair_operator;      // X_ij on cluster spaces i, j
    ComplexMatrix code_operator;      // X_ij restricted to C_i (x) C_j

    bool condition_i() const noexcept { return identity_elsewhere; }
    bool condition_ii() const noexcept { return code_invariant && entangling; }
    bool passed() const noexcept { return condition_i() && condition_ii(); }
};

/// Checks the two-cluster coupling conditions for X acting on
/// H_1 (x) ... (x) H_K with dims `cluster_dims`. `cluster_codes[k]` is the
/// code inside cluster k. Local universality on each cluster is taken as
/// given.
CouplingVerdict coupling_check(const ComplexMatrix &x, std::span<const InvariantSubspace> cluster_codes,
                         std::pair<std::size_t, std::size_t> pair, std::span<const Index> cluster_dims,
                         double tol = 1e-8);

}  // namespace qsubctl

#endif  // QSUBCTL_UNIVERSALITY_HPP
