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

#ifndef QSUBCTL_PROBLEM_HPP
#define QSUBCTL_PROBLEM_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qsubctl/group_algebra.hpp"
#include "qsubctl/operator_core.hpp"
#include "qsubctl/rep_decompose.hpp"
#include "qsubctl/universality.hpp"

namespace qsubctl {

inline constexpr int kSchemaVersion = 1;

struct NamedMatrix {
    std::string name;
    ComplexMatrix matrix;
};

/// A user-supplied code: either computational-basis indices or an explicit
/// n x d frame with orthonormal columns.
struct CodeSpec {
    std::string name;
    std::vector<Index> indices;
    std::optional<ComplexMatrix> frame;
};

struct ProblemFile {
    int schema_version = kSchemaVersion;
    Index dimension = 0;
    std::vector<NamedMatrix> hamiltonians;
    std::vector<NamedMatrix> group_generators;
    std::vector<CodeSpec> codes;

    std::vector<ComplexMatrix> hamiltonian_matrices() const;
    std::vector<ComplexMatrix> group_matrices() const;
};

/// Complex numbers are [re, im]; matrices are row-major nested arrays.
nlohmann::json complex_matrix_to_json(const ComplexMatrix &m);
ComplexMatrix complex_matrix_from_json(const nlohmann::json &j, const std::string &path);

nlohmann::json problem_to_json(const ProblemFile &p);

/// Parses and validates a problem document. Every failure is a SchemaError
/// (or NonUnitary for group generators) whose message starts with the JSON
/// path of the offending field.
ProblemFile problem_from_json(const nlohmann::json &j);

ProblemFile read_problem_file(const std::string &path);

/// Frame for a code: unit vectors for an index set, or the explicit frame.
InvariantSubspace code_subspace(const CodeSpec &code, Index dimension);

/// Names accepted by catalog_problem; parametric entries are shown with
/// their placeholders.
std::vector<std::string> catalog_names();

/// Ready-made problem for example1, example1-prime, swap:<n>,
/// boson:<L>:<N>, dihedral or z2-commutant. Throws InvalidArgument on an
/// unknown name.
ProblemFile catalog_problem(const std::string &name);

nlohmann::json tolerances_to_json(const Tolerances &tol);
nlohmann::json report_to_json(const UniversalityReport &report);
nlohmann::json group_report_to_json(const GroupAlgebraReport &report, const std::string &input_digest);

/// Fixed-width text table of the per-component verdicts.
std::string report_table(const UniversalityReport &report);

}  // namespace qsubctl

#endif  // QSUBCTL_PROBLEM_HPP
