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

#include "qsubctl/universality.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <string>

#include <Eigen/SVD>

#include "qsubctl/errors.hpp"

namespace qsubctl {

Restriction restrict_to(const ComplexMatrix &op, const InvariantSubspace &subspace) {
    const ComplexMatrix &v = subspace.frame;
    require_square(op, "operator");
    if (op.rows() != v.rows()) {
        throw DimensionError("operator is " + std::to_string(op.rows()) + "-dimensional, frame lives in " +
                             std::to_string(v.rows()));
    }
    const ComplexMatrix image = op * v;
    Restriction r;
    r.restricted = v.adjoint() * image;
    r.residual = (image - v * r.restricted).norm();
    return r;
}

CodeVerdict code_universality(const LieAlgebraBasis &closure, const InvariantSubspace &subspace,
                              const Tolerances &tol) {
    CodeVerdict v;
    v.isotypic_label = subspace.isotypic_label;
    v.d = subspace.dim();
    std::vector<ComplexMatrix> restricted;
    restricted.reserve(closure.elements.size());
    for (const auto &l : closure.elements) {
        auto r = restrict_to(l, subspace);
        v.invariance_residual = std::max(v.invariance_residual, r.residual);
        if (r.residual > tol.invariance * std::max(1.0, l.norm())) {
            throw InvarianceViolation("code of dimension " + std::to_string(v.d) +
                                      " is not invariant under the closure (residual " + std::to_string(r.residual) +
                                      ")");
        }
        restricted.push_back(std::move(r.restricted));
    }
    if (v.d == 1) {
        v.trivial_code = true;
        return v;
    }
    v.restricted_dim = traceless_dim(restricted, tol.rank);
    v.deficiency = v.d * v.d - 1 - v.restricted_dim;
    v.universal = v.deficiency == 0;
    return v;
}

std::string digest_generators(std::span<const ComplexMatrix> generators) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    auto mix = [&](const void *data, std::size_t len) {
        const auto *p = static_cast<const unsigned char *>(data);
        for (std::size_t i = 0; i < len; ++i) {
            h ^= p[i];
            h *= 0x100000001b3ull;
        }
    };
    const std::uint64_t count = generators.size();
    mix(&count, sizeof count);
    for (const auto &g : generators) {
        const std::int64_t rows = g.rows(), cols = g.cols();
        mix(&rows, sizeof rows);
        mix(&cols, sizeof cols);
        for (Index i = 0; i < rows; ++i)
            for (Index j = 0; j < cols; ++j) {
                // +0.0 and -0.0 hash alike.
                const double re = g(i, j).real() + 0.0, im = g(i, j).imag() + 0.0;
                mix(&re, sizeof re);
                mix(&im, sizeof im);
            }
    }
    static constexpr char kHex[] = "0123456789abcdef";
    std::string out(16, '0');
    for (int k = 15; k >= 0; --k, h >>= 4) out[static_cast<std::size_t>(k)] = kHex[h & 0xf];
    return out;
}

UniversalityReport analyze(std::span<const ComplexMatrix> generators, std::uint64_t seed, const Tolerances &tol) {
    return with_stage("analyze", [&] {
        if (generators.empty()) throw EmptyGenerators("no generators supplied");
        for (std::size_t k = 0; k < generators.size(); ++k) {
            require_square(generators[k], "generator");
            require_same_dim(generators[k], generators.front());
            if (!is_hermitian(generators[k], 1e-8)) {
                throw ShapeError("generator " + std::to_string(k) + " is not Hermitian");
            }
        }
        const Index n = generators.front().rows();

        UniversalityReport report;
        report.input_digest = digest_generators(generators);
        report.dimension = n;
        report.seed = seed;
        report.tolerances = tol;

        const auto closure = with_stage("lie_closure", [&] { return lie_closure(generators, tol.rank); });
        report.closure_dim = closure.dim();
        report.closure_traceless_dim = traceless_dim(closure.elements, tol.rank);

        const auto comm = with_stage("commutant", [&] { return commutant(generators, tol.rank); });
        auto subspaces = with_stage("invariant_irreducible_subspaces",
                                    [&] { return invariant_irreducible_subspaces(generators, comm, seed, tol); });
        report.decomposition =
            with_stage("isotypic_grouping", [&] { return isotypic_grouping(std::move(subspaces), generators, tol); });

        with_stage("code_universality", [&] {
            for (const auto &comp : report.decomposition.components) {
                CodeVerdict v = code_universality(closure, comp.members.front(), tol);
                v.n = comp.n;
                if (comp.n >= 2) {
                    const CodeVerdict w = code_universality(closure, comp.members[1], tol);
                    if (w.restricted_dim != v.restricted_dim || w.deficiency != v.deficiency) {
                        throw NumericalError("members of isotypic component " + std::to_string(comp.label) +
                                             " disagree on the restricted dimension");
                    }
                }
                report.verdicts.push_back(v);
            }
        });

        const auto alg = with_stage("associative_closure", [&] { return associative_closure(generators, tol.rank); });
        report.wedderburn = wedderburn_check(report.decomposition, alg, comm);
        report.globally_universal = n >= 2 && report.closure_traceless_dim == n * n - 1;
        return report;
    });
}

Index schmidt_rank(const ComplexMatrix &x, Index d1, Index d2, double tol) {
    if (x.rows() != x.cols() || d1 < 1 || d2 < 1 || d1 * d2 != x.rows()) {
        throw ShapeError("dims " + std::to_string(d1) + "x" + std::to_string(d2) + " do not factor a " +
                         std::to_string(x.rows()) + "x" + std::to_string(x.cols()) + " operator");
    }
    // X[(i,j),(i',j')] -> R[(i,i'),(j,j')]
    ComplexMatrix realigned(d1 * d1, d2 * d2);
    for (Index i = 0; i < d1; ++i)
        for (Index ip = 0; ip < d1; ++ip)
            for (Index j = 0; j < d2; ++j)
                for (Index jp = 0; jp < d2; ++jp)
                    realigned(i * d1 + ip, j * d2 + jp) = x(i * d2 + j, ip * d2 + jp);
    const Eigen::JacobiSVD<ComplexMatrix> svd(realigned);
    const auto &sv = svd.singularValues();
    if (sv.size() == 0 || sv(0) <= kAbsoluteFloor) return 0;
    return static_cast<Index>((sv.array() > tol * sv(0)).count());
}

ComplexMatrix swap_operator(Index d) {
    ComplexMatrix s = ComplexMatrix::Zero(d * d, d * d);
    for (Index i = 0; i < d; ++i)
        for (Index j = 0; j < d; ++j) s(j * d + i, i * d + j) = 1.0;
    return s;
}

bool is_entangling(const ComplexMatrix &x, Index d1, Index d2, double tol) {
    const Index local = schmidt_rank(x, d1, d2, tol);
    if (!is_unitary(x, 1e-8)) throw NonUnitary("is_entangling expects a unitary operator");
    if (local == 1) return false;
    if (d1 == d2 && schmidt_rank(x * swap_operator(d1), d1, d2, tol) == 1) return false;
    return true;
}

CouplingVerdict coupling_check(const ComplexMatrix &x, std::span<const InvariantSubspace> cluster_codes,
                         std::pair<std::size_t, std::size_t> pair, std::span<const Index> cluster_dims, double tol) {
    const std::size_t k = cluster_dims.size();
    const auto [ci, cj] = pair;
    if (k < 2) throw ShapeError("coupling_check needs at least two clusters");
    if (cluster_codes.size() != k) throw ShapeError("one code per cluster is required");
    if (ci >= k || cj >= k || ci == cj) throw ShapeError("cluster pair must name two distinct clusters");
    Index total = 1;
    for (std::size_t c = 0; c < k; ++c) {
        if (cluster_dims[c] < 1) throw ShapeError("cluster dimensions must be positive");
        if (cluster_codes[c].ambient_dim() != cluster_dims[c]) {
            throw ShapeError("code frame for cluster " + std::to_string(c) + " does not match its dimension");
        }
        total *= cluster_dims[c];
    }
    if (x.rows() != total || x.cols() != total) {
        throw ShapeError("operator dimension " + std::to_string(x.rows()) + " is not the cluster product " +
                         std::to_string(total));
    }

    // Reorder tensor factors as (i, j, rest...) so X' = X_ij (x) I_rest is the target form.
    std::vector<std::size_t> order{ci, cj};
    for (std::size_t c = 0; c < k; ++c)
        if (c != ci && c != cj) order.push_back(c);
    std::vector<Index> new_stride(k);
    {
        Index s = 1;
        for (std::size_t pos = k; pos-- > 0;) {
            new_stride[order[pos]] = s;
            s *= cluster_dims[order[pos]];
        }
    }
    std::vector<Index> perm(static_cast<std::size_t>(total));
    for (Index idx = 0; idx < total; ++idx) {
        Index rem = idx, mapped = 0;
        for (std::size_t c = k; c-- > 0;) {
            mapped += (rem % cluster_dims[c]) * new_stride[c];
            rem /= cluster_dims[c];
        }
        perm[static_cast<std::size_t>(idx)] = mapped;
    }
    ComplexMatrix xp(total, total);
    for (Index r = 0; r < total; ++r)
        for (Index c = 0; c < total; ++c) xp(perm[r], perm[c]) = x(r, c);

    const Index da = cluster_dims[ci], db = cluster_dims[cj];
    const Index pair_dim = da * db;
    const Index rest = total / pair_dim;
    ComplexMatrix xij = ComplexMatrix::Zero(pair_dim, pair_dim);
    for (Index a = 0; a < pair_dim; ++a)
        for (Index b = 0; b < pair_dim; ++b) {
            Complex acc{};
            for (Index t = 0; t < rest; ++t) acc += xp(a * rest + t, b * rest + t);
            xij(a, b) = acc / double(rest);
        }

    CouplingVerdict v;
    v.locality_residual = (xp - kron(xij, ComplexMatrix::Identity(rest, rest))).norm();
    v.identity_elsewhere = v.locality_residual <= tol * std::max(1.0, x.norm());

    const ComplexMatrix w = kron(cluster_codes[ci].frame, cluster_codes[cj].frame);
    const ComplexMatrix image = xij * w;
    v.code_operator = w.adjoint() * image;
    v.invariance_residual = (image - w * v.code_operator).norm();
    v.code_invariant = v.invariance_residual <= tol * std::max(1.0, xij.norm());
    v.pair_operator = std::move(xij);
    if (v.code_invariant && is_unitary(v.code_operator, 1e-8)) {
        v.entangling = is_entangling(v.code_operator, cluster_codes[ci].dim(), cluster_codes[cj].dim());
    }
    return v;
}

}  // namespace qsubctl
