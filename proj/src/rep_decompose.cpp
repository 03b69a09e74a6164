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

#include "qsubctl/rep_decompose.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "qsubctl/errors.hpp"

namespace qsubctl {

namespace {

Index validated_dim(std::span<const ComplexMatrix> generators) {
    if (generators.empty()) throw EmptyGenerators("at least one generator is required");
    for (const auto &g : generators) {
        require_square(g, "generator");
        require_same_dim(g, generators.front());
    }
    return generators.front().rows();
}

std::vector<Index> sorted_dims(const std::vector<ComplexMatrix> &blocks) {
    std::vector<Index> dims;
    dims.reserve(blocks.size());
    for (const auto &b : blocks) dims.push_back(b.cols());
    std::sort(dims.begin(), dims.end());
    return dims;
}

// Eigenspaces of a seeded random Hermitian combination of the commutant basis.
std::vector<ComplexMatrix> eigenspace_blocks(std::span<const ComplexMatrix> basis, std::mt19937_64 &rng,
                                             double cluster_gap) {
    std::normal_distribution<double> normal(0.0, 1.0);
    const Index n = basis.front().rows();
    ComplexMatrix c = ComplexMatrix::Zero(n, n);
    for (const auto &b : basis) c += normal(rng) * b;
    c = (c + c.adjoint()) * 0.5;

    const auto eig = hermitian_eig(c);
    const double spread = eig.values(n - 1) - eig.values(0);
    const double gap = std::max(cluster_gap, 1e-6 * spread);

    std::vector<ComplexMatrix> blocks;
    Index start = 0;
    for (Index k = 1; k <= n; ++k) {
        if (k == n || eig.values(k) - eig.values(k - 1) > gap) {
            blocks.emplace_back(eig.vectors.middleCols(start, k - start));
            start = k;
        }
    }
    return blocks;
}

double leakage(const ComplexMatrix &op, const ComplexMatrix &frame) {
    const ComplexMatrix image = op * frame;
    return (image - frame * (frame.adjoint() * image)).norm();
}

}  // namespace

ComplexMatrix psd_kernel(const ComplexMatrix &m, double tol, double scale) {
    const auto eig = hermitian_eig(m);
    const Index size = m.rows();
    const double top = std::max({eig.values(size - 1), scale, 0.0});
    const double cut = std::max(tol * top, kAbsoluteFloor * kAbsoluteFloor);
    Index count = 0;
    while (count < size && eig.values(count) <= cut) ++count;
    return eig.vectors.leftCols(count);
}

std::vector<ComplexMatrix> commutant(std::span<const ComplexMatrix> generators, double tol) {
    const Index n = validated_dim(generators);
    const Index n2 = n * n;
    const ComplexMatrix id = ComplexMatrix::Identity(n, n);

    // vec(HX - XH) = (I (x) H - H^T (x) I) vec(X)
    ComplexMatrix gram = ComplexMatrix::Zero(n2, n2);
    double scale = 0;
    for (const auto &h : generators) {
        const ComplexMatrix k = kron(id, h) - kron(h.transpose(), id);
        gram.noalias() += k.adjoint() * k;
        scale += h.squaredNorm() / double(n);
    }
    gram = (gram + gram.adjoint()) * 0.5;
    const ComplexMatrix kernel = psd_kernel(gram, tol, scale);
    const Index kdim = kernel.cols();

    std::vector<ComplexMatrix> basis;
    basis.reserve(static_cast<std::size_t>(kdim));
    for (Index m = 0; m < kdim && static_cast<Index>(basis.size()) < kdim; ++m) {
        const ComplexMatrix x = unvec(kernel.col(m), n, n);
        const ComplexMatrix candidates[2] = {(x + x.adjoint()) * 0.5, (x - x.adjoint()) / Complex(0.0, 2.0)};
        for (const auto &cand : candidates) {
            if (static_cast<Index>(basis.size()) == kdim) break;
            // Loose cut: the second candidate is often a multiple of the first.
            if (auto e = orthonormal_extend(basis, cand, 1e-6)) basis.push_back(std::move(*e));
        }
    }
    if (static_cast<Index>(basis.size()) != kdim) {
        throw NumericalError("commutant is not closed under adjoint: found " + std::to_string(basis.size()) +
                             " Hermitian directions for a kernel of dimension " + std::to_string(kdim));
    }
    return basis;
}

std::vector<ComplexMatrix> restricted_action(std::span<const ComplexMatrix> generators, const ComplexMatrix &frame) {
    std::vector<ComplexMatrix> out;
    out.reserve(generators.size());
    for (const auto &g : generators) {
        if (g.rows() != frame.rows()) throw DimensionError("frame rows do not match generator dimension");
        out.push_back(frame.adjoint() * g * frame);
    }
    return out;
}

bool is_irreducible(const InvariantSubspace &s, std::span<const ComplexMatrix> generators, double tol) {
    const Index d = s.dim();
    if (d <= 1) return d == 1;
    const auto action = restricted_action(generators, s.frame);
    return associative_closure(action, tol).dim() == d * d;
}

Index intertwiner_dim(std::span<const ComplexMatrix> action_a, std::span<const ComplexMatrix> action_b, double tol) {
    if (action_a.size() != action_b.size()) throw DimensionError("actions have different generator counts");
    if (action_a.empty()) return 0;
    const Index d = action_a.front().rows();
    if (action_b.front().rows() != d) return 0;
    const ComplexMatrix id = ComplexMatrix::Identity(d, d);

    // vec(T A - B T) = (A^T (x) I - I (x) B) vec(T)
    ComplexMatrix gram = ComplexMatrix::Zero(d * d, d * d);
    double scale = 0;
    for (std::size_t k = 0; k < action_a.size(); ++k) {
        const ComplexMatrix m = kron(action_a[k].transpose(), id) - kron(id, action_b[k]);
        gram.noalias() += m.adjoint() * m;
        scale += (action_a[k].squaredNorm() + action_b[k].squaredNorm()) / double(d);
    }
    gram = (gram + gram.adjoint()) * 0.5;
    return psd_kernel(gram, tol, scale).cols();
}

bool are_equivalent(const InvariantSubspace &a, const InvariantSubspace &b, std::span<const ComplexMatrix> generators,
                    double tol) {
    validated_dim(generators);
    if (!is_irreducible(a, generators, tol)) throw NotIrreducible("first subspace is not irreducible");
    if (!is_irreducible(b, generators, tol)) throw NotIrreducible("second subspace is not irreducible");
    if (a.dim() != b.dim()) return false;
    const Index k = intertwiner_dim(restricted_action(generators, a.frame), restricted_action(generators, b.frame), tol);
    if (k > 1) throw NumericalError("intertwiner space of irreducibles has dimension " + std::to_string(k));
    return k == 1;
}

std::vector<InvariantSubspace> invariant_irreducible_subspaces(std::span<const ComplexMatrix> generators,
                                                               std::span<const ComplexMatrix> commutant_basis,
                                                               std::uint64_t seed, const Tolerances &tol) {
    const Index n = validated_dim(generators);
    if (commutant_basis.empty()) throw InvalidArgument("commutant basis is empty");
    for (const auto &b : commutant_basis) {
        if (b.rows() != n || b.cols() != n) throw DimensionError("commutant element does not match generator dim");
    }

    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt <= tol.retry_limit; ++attempt) {
        auto first = eigenspace_blocks(commutant_basis, rng, tol.cluster_gap);
        const auto second = eigenspace_blocks(commutant_basis, rng, tol.cluster_gap);
        if (sorted_dims(first) != sorted_dims(second)) continue;

        std::vector<InvariantSubspace> out;
        out.reserve(first.size());
        bool irreducible = true;
        for (auto &frame : first) {
            InvariantSubspace s{std::move(frame), -1, 0.0};
            if (!is_irreducible(s, generators, tol.rank)) {
                irreducible = false;
                break;
            }
            out.push_back(std::move(s));
        }
        if (!irreducible) continue;

        for (auto &s : out) {
            for (const auto &g : generators) {
                const double r = leakage(g, s.frame);
                s.invariance_residual = std::max(s.invariance_residual, r);
                if (r > tol.invariance * std::max(1.0, g.norm())) {
                    throw InvarianceViolation("eigenspace of dimension " + std::to_string(s.dim()) +
                                              " leaks under a generator (residual " + std::to_string(r) + ")");
                }
            }
        }
        return out;
    }
    throw GenericityFailure("no generic commutant element found in " + std::to_string(tol.retry_limit + 1) +
                            " attempts");
}

Decomposition isotypic_grouping(std::vector<InvariantSubspace> subspaces, std::span<const ComplexMatrix> generators,
                                const Tolerances &tol) {
    const Index n = validated_dim(generators);
    Index filled = 0;
    for (const auto &s : subspaces) {
        if (s.ambient_dim() != n) throw DimensionError("subspace frame does not match generator dimension");
        filled += s.dim();
    }
    if (filled != n) {
        throw IncompleteDecomposition("frames cover " + std::to_string(filled) + " of " + std::to_string(n) +
                                      " dimensions");
    }
    ComplexMatrix stacked(n, n);
    {
        Index col = 0;
        for (const auto &s : subspaces) {
            stacked.middleCols(col, s.dim()) = s.frame;
            col += s.dim();
        }
    }
    const double defect = (stacked.adjoint() * stacked - ComplexMatrix::Identity(n, n)).norm();
    if (defect > tol.orthonormal * double(n)) {
        throw IncompleteDecomposition("frames are not mutually orthonormal (defect " + std::to_string(defect) + ")");
    }

    std::vector<std::vector<ComplexMatrix>> actions;
    actions.reserve(subspaces.size());
    for (const auto &s : subspaces) {
        if (!is_irreducible(s, generators, tol.rank)) throw NotIrreducible("subspace is not irreducible");
        actions.push_back(restricted_action(generators, s.frame));
    }

    std::vector<std::vector<std::size_t>> classes;
    for (std::size_t i = 0; i < subspaces.size(); ++i) {
        bool placed = false;
        for (auto &cls : classes) {
            const std::size_t rep = cls.front();
            if (subspaces[rep].dim() != subspaces[i].dim()) continue;
            if (intertwiner_dim(actions[rep], actions[i], tol.rank) >= 1) {
                cls.push_back(i);
                placed = true;
                break;
            }
        }
        if (!placed) classes.push_back({i});
    }
    std::stable_sort(classes.begin(), classes.end(),
                     [&](const auto &x, const auto &y) { return subspaces[x.front()].dim() > subspaces[y.front()].dim(); });

    Decomposition dec;
    dec.total_dim = n;
    for (std::size_t label = 0; label < classes.size(); ++label) {
        IsotypicComponent comp;
        comp.label = static_cast<int>(label);
        comp.d = subspaces[classes[label].front()].dim();
        comp.n = static_cast<Index>(classes[label].size());
        for (std::size_t idx : classes[label]) {
            subspaces[idx].isotypic_label = comp.label;
            comp.members.push_back(std::move(subspaces[idx]));
        }
        dec.components.push_back(std::move(comp));
    }
    return dec;
}

WedderburnDiagnostics wedderburn_check(const Decomposition &dec, const AssociativeAlgebraBasis &alg,
                                       std::span<const ComplexMatrix> comm) {
    WedderburnDiagnostics w;
    w.alg_dim = alg.dim();
    w.comm_dim = static_cast<Index>(comm.size());
    w.total_dim = dec.total_dim;
    for (const auto &c : dec.components) {
        w.sum_d_squared += c.d * c.d;
        w.sum_n_squared += c.n * c.n;
        w.sum_nd += c.n * c.d;
    }
    return w;
}

ComplexMatrix stacked_frames(const Decomposition &dec) {
    Index cols = 0;
    for (const auto &c : dec.components)
        for (const auto &m : c.members) cols += m.dim();
    ComplexMatrix out(dec.total_dim, cols);
    Index col = 0;
    for (const auto &c : dec.components)
        for (const auto &m : c.members) {
            out.middleCols(col, m.dim()) = m.frame;
            col += m.dim();
        }
    return out;
}

}  // namespace qsubctl
