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

#include <cmath>
#include <map>
#include <random>
#include <string>

#include "qsubctl/errors.hpp"

namespace qsubctl {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// Elements within tol of each other have fingerprints within tol, since the
// weight matrix has unit Frobenius norm.
class ElementIndex {
   public:
    ElementIndex(Index dim, double tol) : tol_(tol) {
        std::mt19937_64 rng(0x5eed);
        std::normal_distribution<double> normal;
        weights_.resize(dim, dim);
        for (Index i = 0; i < dim; ++i)
            for (Index j = 0; j < dim; ++j) weights_(i, j) = Complex(normal(rng), normal(rng));
        weights_ /= weights_.norm();
    }

    int find(const ComplexMatrix &m, const std::vector<ComplexMatrix> &elements) const {
        const double key = fingerprint(m);
        for (auto it = by_key_.lower_bound(key - tol_); it != by_key_.end() && it->first <= key + tol_; ++it) {
            if ((elements[static_cast<std::size_t>(it->second)] - m).norm() <= tol_) return it->second;
        }
        return -1;
    }

    void insert(const ComplexMatrix &m, int index) { by_key_.emplace(fingerprint(m), index); }

   private:
    double fingerprint(const ComplexMatrix &m) const { return weights_.cwiseProduct(m).sum().real(); }

    double tol_;
    ComplexMatrix weights_;
    std::multimap<double, int> by_key_;
};

}  // namespace

FiniteGroupRep group_closure(std::span<const ComplexMatrix> generators, double tol_group, Index max_order) {
    if (generators.empty()) throw EmptyGenerators("group_closure needs at least one generator");
    for (std::size_t k = 0; k < generators.size(); ++k) {
        require_square(generators[k], "group generator");
        require_same_dim(generators[k], generators.front());
        if (!is_unitary(generators[k], 1e-8)) {
            throw NonUnitary("group generator " + std::to_string(k) + " is not unitary");
        }
    }
    const Index n = generators.front().rows();
    const double tol = tol_group >= 0 ? tol_group : 1e-8 * std::sqrt(double(n));

    FiniteGroupRep g;
    ElementIndex index(n, tol);
    auto admit = [&](const ComplexMatrix &m) {
        if (int found = index.find(m, g.elements); found >= 0) return found;
        if (g.order() >= max_order) {
            throw BudgetExceeded("group order exceeds max_order = " + std::to_string(max_order));
        }
        const int id = static_cast<int>(g.elements.size());
        g.elements.push_back(m);
        index.insert(m, id);
        return id;
    };

    admit(ComplexMatrix::Identity(n, n));
    for (std::size_t next = 0; next < g.elements.size(); ++next) {
        for (const auto &gen : generators) {
            const ComplexMatrix product = g.elements[next] * gen;
            admit(product);
        }
    }

    const auto order = static_cast<std::size_t>(g.order());
    g.mult_table.assign(order, std::vector<int>(order, -1));
    g.inverse.assign(order, -1);
    for (std::size_t a = 0; a < order; ++a) {
        for (std::size_t b = 0; b < order; ++b) {
            const int c = index.find(g.elements[a] * g.elements[b], g.elements);
            if (c < 0) throw NumericalError("group product fell outside the closed set; loosen tol_group");
            g.mult_table[a][b] = c;
            if (c == 0) g.inverse[a] = static_cast<int>(b);
        }
        if (g.inverse[a] < 0) throw NumericalError("group element without inverse in the closed set");
    }
    return g;
}

ComplexMatrix hermitian_group_sample(const FiniteGroupRep &group, std::uint64_t seed,
                                     std::optional<std::span<const int>> support) {
    if (group.elements.empty()) throw InvalidArgument("empty group");
    const auto order = static_cast<std::size_t>(group.order());
    std::vector<bool> active(order, support ? false : true);
    if (support) {
        for (int e : *support) {
            if (e < 0 || static_cast<std::size_t>(e) >= order) throw InvalidArgument("support index out of range");
            active[static_cast<std::size_t>(e)] = true;
            active[static_cast<std::size_t>(group.inverse[static_cast<std::size_t>(e)])] = true;
        }
    }

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal;
    const Index n = group.dim();
    ComplexMatrix h = ComplexMatrix::Zero(n, n);
    for (std::size_t g = 0; g < order; ++g) {
        const auto inv = static_cast<std::size_t>(group.inverse[g]);
        if (inv < g) continue;  // paired with an earlier element
        // Draw for every element so a support mask does not shift the stream.
        const double re = normal(rng), im = normal(rng);
        if (!active[g]) continue;
        if (inv == g) {
            h += re * group.elements[g];
        } else {
            const Complex c(re / std::sqrt(2.0), im / std::sqrt(2.0));
            h += c * group.elements[g] + std::conj(c) * group.elements[inv];
        }
    }
    return (h + h.adjoint()) * 0.5;
}

GroupAlgebraReport group_algebra_analyze(const FiniteGroupRep &group, std::uint64_t seed, Index samples, const Tolerances &tol) {
    if (samples < 2) throw InvalidArgument("group_algebra_analyze needs at least 2 samples");
    if (group.elements.empty()) throw InvalidArgument("empty group");

    auto run = [&](std::uint64_t sample_seed, int attempt) {
        GroupAlgebraReport out;
        out.group_order = group.order();
        out.samples = samples;
        out.attempts = attempt;
        out.sample_seed = sample_seed;
        for (Index k = 0; k < samples; ++k) {
            out.hamiltonians.push_back(hermitian_group_sample(group, splitmix64(sample_seed + std::uint64_t(k))));
        }
        out.report = analyze(out.hamiltonians, seed, tol);
        out.generic = true;
        for (const auto &v : out.report.verdicts)
            if (v.d >= 2 && !v.universal) out.generic = false;
        return out;
    };

    GroupAlgebraReport first = run(seed, 1);
    if (first.generic) return first;
    return run(splitmix64(seed ^ 0xa5a5a5a5a5a5a5a5ull), 2);
}

}  // namespace qsubctl
