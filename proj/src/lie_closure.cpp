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

#include "qsubctl/lie_closure.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qsubctl/errors.hpp"
#include "qsubctl/tolerances.hpp"

namespace qsubctl {

namespace {

Index common_dim(std::span<const ComplexMatrix> generators) {
    if (generators.empty()) throw EmptyGenerators("at least one generator is required");
    for (const auto &g : generators) {
        require_square(g, "generator");
        require_same_dim(g, generators.front());
    }
    return generators.front().rows();
}

}  // namespace

LieAlgebraBasis lie_closure(std::span<const ComplexMatrix> generators, double tol, Index max_dim) {
    const Index n = common_dim(generators);
    for (std::size_t k = 0; k < generators.size(); ++k) {
        if (!is_hermitian(generators[k], 1e-8)) {
            throw ShapeError("generator " + std::to_string(k) + " is not Hermitian");
        }
    }
    const Index cap = max_dim > 0 ? max_dim : n * n;

    LieAlgebraBasis out;
    out.dim_space = n;
    auto &basis = out.elements;

    auto try_add = [&](const ComplexMatrix &candidate) {
        const ComplexMatrix skew = (candidate - candidate.adjoint()) * 0.5;
        auto e = orthonormal_extend(basis, skew, tol);
        if (!e) return;
        if (static_cast<Index>(basis.size()) >= cap) {
            throw BudgetExceeded("Lie closure exceeds max_dim = " + std::to_string(cap));
        }
        basis.push_back(std::move(*e));
    };

    for (const auto &h : generators) try_add(kI * h);
    const std::vector<ComplexMatrix> seeds = basis;

    for (std::size_t next = 0; next < basis.size(); ++next) {
        const ComplexMatrix current = basis[next];
        for (const auto &g : seeds) try_add(commutator(g, current));
    }
    out.closed = true;
    return out;
}

AssociativeAlgebraBasis associative_closure(std::span<const ComplexMatrix> generators, double tol) {
    const Index n = common_dim(generators);
    AssociativeAlgebraBasis out;
    out.dim_space = n;
    auto &basis = out.elements;

    auto try_add = [&](const ComplexMatrix &candidate) {
        if (auto e = orthonormal_extend_complex(basis, candidate, tol)) {
            if (static_cast<Index>(basis.size()) >= n * n) {
                throw NumericalError("associative closure exceeded n^2 elements; tolerance too tight");
            }
            basis.push_back(std::move(*e));
        }
    };

    try_add(ComplexMatrix::Identity(n, n));
    std::vector<ComplexMatrix> scaled;
    scaled.reserve(generators.size());
    for (const auto &g : generators) {
        const double norm = g.norm();
        scaled.push_back(norm > 0 ? ComplexMatrix(g / norm) : g);
    }
    for (const auto &g : scaled) try_add(g);
    for (std::size_t next = 0; next < basis.size(); ++next) {
        const ComplexMatrix current = basis[next];
        for (const auto &g : scaled) try_add(g * current);
    }
    out.contains_identity = true;
    return out;
}

Index traceless_dim(std::span<const ComplexMatrix> elements, double tol) {
    if (elements.empty()) return 0;
    const Index n = elements.front().rows();
    std::vector<ComplexMatrix> parts;
    parts.reserve(elements.size());
    double mass = 0;
    for (const auto &a : elements) {
        require_square(a, "element");
        require_same_dim(a, elements.front());
        parts.push_back(a - (a.trace() / double(n)) * ComplexMatrix::Identity(n, n));
        mass += a.squaredNorm();
    }
    const auto m = static_cast<Index>(parts.size());
    ComplexMatrix gram(m, m);
    for (Index i = 0; i < m; ++i)
        for (Index j = i; j < m; ++j) {
            const double v = real_inner(parts[i], parts[j]);
            gram(i, j) = gram(j, i) = v;
        }
    const auto eig = hermitian_eig(gram);
    const double top = eig.values.maxCoeff();
    if (top <= kAbsoluteFloor * kAbsoluteFloor * std::max(1.0, mass)) return 0;
    return static_cast<Index>((eig.values.array() > tol * top).count());
}

double closure_defect(const LieAlgebraBasis &basis) {
    double worst = 0;
    const auto &e = basis.elements;
    for (std::size_t a = 0; a < e.size(); ++a) {
        for (std::size_t b = a + 1; b < e.size(); ++b) {
            ComplexMatrix r = commutator(e[a], e[b]);
            const double scale = std::max(1.0, r.norm());
            for (int pass = 0; pass < 2; ++pass)
                for (const auto &x : e) r -= real_inner(x, r) * x;
            worst = std::max(worst, r.norm() / scale);
        }
    }
    return worst;
}

}  // namespace qsubctl
