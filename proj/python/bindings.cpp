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

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <utility>
#include <vector>

#include "qsubctl/errors.hpp"
#include "qsubctl/group_algebra.hpp"
#include "qsubctl/lie_closure.hpp"
#include "qsubctl/models.hpp"
#include "qsubctl/operator_core.hpp"
#include "qsubctl/problem.hpp"
#include "qsubctl/rep_decompose.hpp"
#include "qsubctl/universality.hpp"

namespace py = pybind11;
using namespace qsubctl;

namespace {

using Matrices = std::vector<ComplexMatrix>;

Tolerances make_tolerances(double rank, double invariance, double cluster_gap) {
    Tolerances t;
    t.rank = rank;
    t.invariance = invariance;
    t.cluster_gap = cluster_gap;
    return t;
}

py::list decomposition_to_py(const Decomposition &dec) {
    py::list out;
    for (const auto &c : dec.components) {
        py::dict d;
        d["J"] = c.label;
        d["d"] = c.d;
        d["n"] = c.n;
        Matrices frames;
        for (const auto &m : c.members) frames.push_back(m.frame);
        d["frames"] = frames;
        out.append(std::move(d));
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_qsubctl, m) {
    m.doc() = "Dynamical Lie algebras, isotypic decompositions and encoded-universality verdicts.";

    py::register_exception<Error>(m, "Error", PyExc_RuntimeError);

    // operator core
    m.def("commutator", &commutator, py::arg("a"), py::arg("b"));
    m.def("matrix_exp", &matrix_exp, py::arg("a"));
    m.def(
        "hermitian_eig",
        [](const ComplexMatrix &h) {
            auto e = hermitian_eig(h);
            return std::make_pair(RealVector(e.values), ComplexMatrix(e.vectors));
        },
        py::arg("h"), "Ascending eigenvalues and eigenvector columns of a Hermitian matrix.");
    m.def(
        "evolve_piecewise",
        [](const std::vector<std::pair<ComplexMatrix, double>> &segments, Index dim) {
            PiecewiseSchedule s(dim);
            for (const auto &[h, t] : segments) s.append(h, t);
            return evolve_piecewise(s);
        },
        py::arg("segments"), py::arg("dim"), "Ordered product of exp(-i H t) over (H, t) segments.");

    // algebras
    m.def(
        "lie_closure", [](const Matrices &g, double tol) { return lie_closure(g, tol).elements; },
        py::arg("generators"), py::arg("tol") = 1e-9);
    m.def(
        "associative_closure", [](const Matrices &g, double tol) { return associative_closure(g, tol).elements; },
        py::arg("generators"), py::arg("tol") = 1e-9);
    m.def(
        "traceless_dim", [](const Matrices &e, double tol) { return traceless_dim(e, tol); }, py::arg("elements"),
        py::arg("tol") = 1e-9);
    m.def(
        "commutant", [](const Matrices &g, double tol) { return commutant(g, tol); }, py::arg("generators"),
        py::arg("tol") = 1e-9);

    // decomposition and verdicts
    m.def(
        "decompose",
        [](const Matrices &g, std::uint64_t seed) {
            const auto comm = commutant(g);
            auto subs = invariant_irreducible_subspaces(g, comm, seed);
            return decomposition_to_py(isotypic_grouping(std::move(subs), g));
        },
        py::arg("generators"), py::arg("seed") = 0);
    m.def(
        "_analyze_json",
        [](const Matrices &g, std::uint64_t seed, double rank, double inv, double gap) {
            return report_to_json(analyze(g, seed, make_tolerances(rank, inv, gap))).dump();
        },
        py::arg("generators"), py::arg("seed") = 0, py::arg("tol_rank") = 1e-9, py::arg("tol_inv") = 1e-8,
        py::arg("cluster_gap") = 1e-7);
    m.def(
        "_group_algebra_json",
        [](const Matrices &group_generators, std::uint64_t seed, Index samples) {
            const auto group = group_closure(group_generators);
            return group_report_to_json(group_algebra_analyze(group, seed, samples), digest_generators(group_generators))
                .dump();
        },
        py::arg("group_generators"), py::arg("seed") = 0, py::arg("samples") = 2);
    m.def(
        "group_closure",
        [](const Matrices &g, Index max_order) {
            const auto group = group_closure(g, -1.0, max_order);
            py::dict d;
            d["order"] = group.order();
            d["elements"] = group.elements;
            d["mult_table"] = group.mult_table;
            d["inverse"] = group.inverse;
            return d;
        },
        py::arg("generators"), py::arg("max_order") = 4096);
    m.def("schmidt_rank", &schmidt_rank, py::arg("x"), py::arg("d1"), py::arg("d2"), py::arg("tol") = 1e-9);
    m.def("is_entangling", &is_entangling, py::arg("x"), py::arg("d1"), py::arg("d2"), py::arg("tol") = 1e-9);

    // models
    m.def("pauli_string", [](const std::string &axes, double c) {
        return pauli_string({axes, c}, static_cast<int>(axes.size()));
    }, py::arg("axes"), py::arg("coefficient") = 1.0);
    m.def("example1_generators", &example1_generators);
    m.def("example1_prime_generators", &example1_prime_generators);
    m.def("swap_generators", &swap_generators, py::arg("n_qubits"));
    m.def("sector_dimension", &sector_dimension, py::arg("modes"), py::arg("particles"));
    m.def(
        "boson_generators",
        [](int modes, int particles) { return boson_hermitian_generators(boson_sector(modes, particles)); },
        py::arg("modes"), py::arg("particles"));
    m.def("dihedral_rep", &dihedral_rep);
    m.def("dihedral_fourier_frame", &dihedral_fourier_frame);
    m.def(
        "_catalog_json", [](const std::string &name) { return problem_to_json(catalog_problem(name)).dump(); },
        py::arg("name"));
    m.def("catalog_names", &catalog_names);
}
