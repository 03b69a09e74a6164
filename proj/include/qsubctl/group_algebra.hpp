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

#ifndef QSUBCTL_GROUP_ALGEBRA_HPP
#define QSUBCTL_GROUP_ALGEBRA_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "qsubctl/operator_core.hpp"
#include "qsubctl/tolerances.hpp"
#include "qsubctl/universality.hpp"

namespace qsubctl {

/// Image of a finite group under a unitary representation. Element 0 is
/// the identity; mult_table[a][b] is the index of elements[a] * elements[b].
struct FiniteGroupRep {
    std::vector<ComplexMatrix> elements;
    std::vector<std::vector<int>> mult_table;
    std::vector<int> inverse;

    Index order() const noexcept { return static_cast<Index>(elements.size()); }
    Index dim() const noexcept { return elements.empty() ? 0 : elements.front().rows(); }
};

/// Breadth-first product closure of the generators. Two matrices are the same
/// group element when |A - B|_F <= tol_group; a negative `tol_group` selects
/// 1e-8 * sqrt(dim). Throws NonUnitary and BudgetExceeded.
FiniteGroupRep group_closure(std::span<const ComplexMatrix> generators, double tol_group = -1.0,
                             Index max_order = 4096);

/// Random Hermitian element sum_g c_g U_g of the represented group algebra.
/// Coefficients are complex normal with c_{g^-1} = conj(c_g). When `support`
/// is given, only those elements (and their inverses) receive weight.
ComplexMatrix hermitian_group_sample(const FiniteGroupRep &group, std::uint64_t seed,
                                     std::optional<std::span<const int>> support = std::nullopt);

struct GroupAlgebraReport {
    UniversalityReport report;
    Index group_order = 0;
    Index samples = 0;
    int attempts = 1;
    std::uint64_t sample_seed = 0;
    /// Every component with d >= 2 came out universal.
    bool generic = false;
    std::vector<ComplexMatrix> hamiltonians;
};

/// Draws `samples` Hermitian group-algebra elements and analyzes them. A
/// non-generic outcome is retried once with a fresh seed before it is
/// reported. Throws InvalidArgument if samples < 2.
GroupAlgebraReport group_algebra_analyze(const FiniteGroupRep &group, std::uint64_t seed, Index samples = 2,
                          const Tolerances &tol = {});

}  // namespace qsubctl

#endif  // QSUBCTL_GROUP_ALGEBRA_HPP
