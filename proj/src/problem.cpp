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

#include "qsubctl/problem.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "qsubctl/errors.hpp"
#include "qsubctl/models.hpp"

namespace qsubctl {

using nlohmann::json;

std::vector<ComplexMatrix> ProblemFile::hamiltonian_matrices() const {
    std::vector<ComplexMatrix> out;
    for (const auto &h : hamiltonians) out.push_back(h.matrix);
    return out;
}

std::vector<ComplexMatrix> ProblemFile::group_matrices() const {
    std::vector<ComplexMatrix> out;
    for (const auto &g : group_generators) out.push_back(g.matrix);
    return out;
}

json complex_matrix_to_json(const ComplexMatrix &m) {
    json rows = json::array();
    for (Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Index j = 0; j < m.cols(); ++j) {
            // +0.0 keeps -0 out of the document.
            row.push_back(json::array({m(i, j).real() + 0.0, m(i, j).imag() + 0.0}));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

ComplexMatrix complex_matrix_from_json(const json &j, const std::string &path) {
    if (!j.is_array() || j.empty()) throw SchemaError(path + ": expected a nonempty array of rows");
    const auto rows = static_cast<Index>(j.size());
    if (!j[0].is_array() || j[0].empty()) throw SchemaError(path + "[0]: expected a nonempty row array");
    const auto cols = static_cast<Index>(j[0].size());
    ComplexMatrix m(rows, cols);
    for (Index r = 0; r < rows; ++r) {
        const auto &row = j[static_cast<std::size_t>(r)];
        const std::string rpath = path + "[" + std::to_string(r) + "]";
        if (!row.is_array() || static_cast<Index>(row.size()) != cols) {
            throw SchemaError(rpath + ": expected a row of " + std::to_string(cols) + " entries");
        }
        for (Index c = 0; c < cols; ++c) {
            const auto &z = row[static_cast<std::size_t>(c)];
            const std::string zpath = rpath + "[" + std::to_string(c) + "]";
            if (!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number()) {
                throw SchemaError(zpath + ": expected [re, im]");
            }
            const double re = z[0].get<double>(), im = z[1].get<double>();
            if (!std::isfinite(re) || !std::isfinite(im)) throw SchemaError(zpath + ": non-finite value");
            m(r, c) = Complex(re, im);
        }
    }
    return m;
}

json problem_to_json(const ProblemFile &p) {
    json j;
    j["schema_version"] = p.schema_version;
    j["dimension"] = p.dimension;
    auto named = [](const std::vector<NamedMatrix> &list) {
        json arr = json::array();
        for (const auto &m : list) arr.push_back({{"name", m.name}, {"matrix", complex_matrix_to_json(m.matrix)}});
        return arr;
    };
    j["hamiltonians"] = named(p.hamiltonians);
    if (!p.group_generators.empty()) j["group_generators"] = named(p.group_generators);
    if (!p.codes.empty()) {
        json codes = json::array();
        for (const auto &c : p.codes) {
            json e{{"name", c.name}};
            if (c.frame) {
                e["frame"] = complex_matrix_to_json(*c.frame);
            } else {
                e["indices"] = c.indices;
            }
            codes.push_back(std::move(e));
        }
        j["codes"] = std::move(codes);
    }
    return j;
}

namespace {

const json &require_field(const json &obj, const char *key, const std::string &path) {
    if (!obj.is_object() || !obj.contains(key)) throw SchemaError(path + "." + key + ": required field missing");
    return obj.at(key);
}

std::vector<NamedMatrix> named_list(const json &arr, const std::string &path, Index dimension) {
    if (!arr.is_array()) throw SchemaError(path + ": expected an array");
    std::vector<NamedMatrix> out;
    for (std::size_t k = 0; k < arr.size(); ++k) {
        const std::string ipath = path + "[" + std::to_string(k) + "]";
        const auto &entry = arr[k];
        if (!entry.is_object()) throw SchemaError(ipath + ": expected an object with name and matrix");
        const auto &name = require_field(entry, "name", ipath);
        if (!name.is_string()) throw SchemaError(ipath + ".name: expected a string");
        const std::string mpath = ipath + ".matrix";
        ComplexMatrix m = complex_matrix_from_json(require_field(entry, "matrix", ipath), mpath);
        if (m.rows() != dimension || m.cols() != dimension) {
            throw SchemaError(mpath + ": expected " + std::to_string(dimension) + "x" + std::to_string(dimension) +
                              ", got " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
        }
        out.push_back({name.get<std::string>(), std::move(m)});
    }
    return out;
}

}  // namespace

ProblemFile problem_from_json(const json &j) {
    if (!j.is_object()) throw SchemaError("$: expected a JSON object");
    ProblemFile p;
    const auto &version = require_field(j, "schema_version", "$");
    if (!version.is_number_integer() || version.get<int>() != kSchemaVersion) {
        throw SchemaError("$.schema_version: unsupported version (expected " + std::to_string(kSchemaVersion) + ")");
    }
    const auto &dim = require_field(j, "dimension", "$");
    if (!dim.is_number_integer() || dim.get<long long>() < 1 || dim.get<long long>() > 512) {
        throw SchemaError("$.dimension: expected an integer in [1, 512]");
    }
    p.dimension = dim.get<Index>();

    p.hamiltonians = named_list(require_field(j, "hamiltonians", "$"), "$.hamiltonians", p.dimension);
    for (std::size_t k = 0; k < p.hamiltonians.size(); ++k) {
        if (!is_hermitian(p.hamiltonians[k].matrix, 1e-10)) {
            throw SchemaError("$.hamiltonians[" + std::to_string(k) + "].matrix: not Hermitian");
        }
    }
    if (j.contains("group_generators")) {
        p.group_generators = named_list(j.at("group_generators"), "$.group_generators", p.dimension);
        for (std::size_t k = 0; k < p.group_generators.size(); ++k) {
            if (!is_unitary(p.group_generators[k].matrix, 1e-8)) {
                throw NonUnitary("$.group_generators[" + std::to_string(k) + "].matrix: not unitary");
            }
        }
    }
    if (j.contains("codes")) {
        const auto &codes = j.at("codes");
        if (!codes.is_array()) throw SchemaError("$.codes: expected an array");
        for (std::size_t k = 0; k < codes.size(); ++k) {
            const std::string cpath = "$.codes[" + std::to_string(k) + "]";
            const auto &c = codes[k];
            if (!c.is_object()) throw SchemaError(cpath + ": expected an object");
            CodeSpec spec;
            const auto &name = require_field(c, "name", cpath);
            if (!name.is_string()) throw SchemaError(cpath + ".name: expected a string");
            spec.name = name.get<std::string>();
            const bool has_idx = c.contains("indices"), has_frame = c.contains("frame");
            if (has_idx == has_frame) throw SchemaError(cpath + ": exactly one of indices or frame is required");
            if (has_idx) {
                const auto &idx = c.at("indices");
                if (!idx.is_array() || idx.empty()) throw SchemaError(cpath + ".indices: expected a nonempty array");
                std::set<Index> seen;
                for (std::size_t t = 0; t < idx.size(); ++t) {
                    const auto &v = idx[t];
                    const std::string vpath = cpath + ".indices[" + std::to_string(t) + "]";
                    if (!v.is_number_integer() || v.get<long long>() < 0 || v.get<long long>() >= p.dimension) {
                        throw SchemaError(vpath + ": expected an index in [0, " + std::to_string(p.dimension) + ")");
                    }
                    if (!seen.insert(v.get<Index>()).second) throw SchemaError(vpath + ": duplicate index");
                    spec.indices.push_back(v.get<Index>());
                }
            } else {
                const std::string fpath = cpath + ".frame";
                ComplexMatrix f = complex_matrix_from_json(c.at("frame"), fpath);
                if (f.rows() != p.dimension || f.cols() > p.dimension) {
                    throw SchemaError(fpath + ": expected " + std::to_string(p.dimension) + " rows and at most " +
                                      std::to_string(p.dimension) + " columns");
                }
                const Index d = f.cols();
                if ((f.adjoint() * f - ComplexMatrix::Identity(d, d)).norm() > 1e-8) {
                    throw SchemaError(fpath + ": columns are not orthonormal");
                }
                spec.frame = std::move(f);
            }
            p.codes.push_back(std::move(spec));
        }
    }
    return p;
}

ProblemFile read_problem_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open problem file '" + path + "'");
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error &e) {
        throw SchemaError("'" + path + "' is not valid JSON: " + e.what());
    }
    return problem_from_json(j);
}

InvariantSubspace code_subspace(const CodeSpec &code, Index dimension) {
    InvariantSubspace s;
    if (code.frame) {
        s.frame = *code.frame;
    } else {
        s.frame = ComplexMatrix::Zero(dimension, static_cast<Index>(code.indices.size()));
        for (std::size_t k = 0; k < code.indices.size(); ++k) {
            if (code.indices[k] < 0 || code.indices[k] >= dimension) throw SchemaError("code index out of range");
            s.frame(code.indices[k], static_cast<Index>(k)) = 1.0;
        }
    }
    return s;
}

std::vector<std::string> catalog_names() {
    return {"example1", "example1-prime", "swap:<n>", "boson:<L>:<N>", "dihedral", "z2-commutant"};
}

namespace {

std::vector<int> parse_parameters(const std::string &rest, std::size_t count, const std::string &name) {
    std::vector<std::string> tokens;
    std::stringstream ss(rest);
    for (std::string t; std::getline(ss, t, ':');) tokens.push_back(t);
    if (!rest.empty() && rest.back() == ':') tokens.push_back("");
    if (tokens.size() != count) throw InvalidArgument("malformed catalog name '" + name + "'");
    std::vector<int> out;
    for (const auto &t : tokens) {
        int v = 0;
        const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
        if (t.empty() || ec != std::errc() || ptr != t.data() + t.size()) {
            throw InvalidArgument("malformed catalog name '" + name + "'");
        }
        out.push_back(v);
    }
    return out;
}

std::string unknown_message(const std::string &name) {
    std::string msg = "unknown example '" + name + "'; catalog:";
    for (const auto &n : catalog_names()) msg += " " + n;
    return msg;
}

}  // namespace

ProblemFile catalog_problem(const std::string &name) {
    ProblemFile p;
    if (name == "example1" || name == "example1-prime") {
        const bool prime = name == "example1-prime";
        const auto gens = prime ? example1_prime_generators() : example1_generators();
        const char *labels[3] = {"XX+YY", "XY-YX", "ZI-IZ"};
        const char *prime_labels[3] = {"XX-YY", "XY+YX", "ZI+IZ"};
        p.dimension = 4;
        for (std::size_t k = 0; k < 3; ++k) p.hamiltonians.push_back({prime ? prime_labels[k] : labels[k], gens[k]});
        if (prime) {
            p.codes.push_back({"span{|00>,|11>}", {0, 3}, std::nullopt});
        } else {
            p.codes.push_back({"span{|01>,|10>}", {1, 2}, std::nullopt});
        }
        return p;
    }
    if (name.rfind("swap:", 0) == 0) {
        const int n = parse_parameters(name.substr(5), 1, name)[0];
        if (n < 2 || n > 9) throw InvalidArgument("swap:<n> needs 2 <= n <= 9");
        p.dimension = Index{1} << n;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                const std::string label = "SWAP_" + std::to_string(i) + "_" + std::to_string(j);
                const ComplexMatrix s = qubit_swap(n, i, j);
                p.hamiltonians.push_back({label, s});
                p.group_generators.push_back({label, s});
            }
        return p;
    }
    if (name.rfind("boson:", 0) == 0) {
        const auto params = parse_parameters(name.substr(6), 2, name);
        if (params[0] < 1 || params[1] < 0) throw InvalidArgument("boson:<L>:<N> needs L >= 1, N >= 0");
        const auto model = boson_sector(params[0], params[1]);
        const auto gens = boson_hermitian_generators(model);
        p.dimension = model.sector.dim();
        std::vector<std::string> labels;
        const int l = params[0];
        for (int i = 0; i < l; ++i)
            for (int j = i + 1; j < l; ++j) {
                const std::string ij = std::to_string(i) + std::to_string(j), ji = std::to_string(j) + std::to_string(i);
                labels.push_back("E" + ij + "+E" + ji);
                labels.push_back("i(E" + ij + "-E" + ji + ")");
            }
        for (int i = 0; i < l; ++i) labels.push_back("E" + std::to_string(i) + std::to_string(i));
        for (std::size_t k = 0; k < gens.size(); ++k) p.hamiltonians.push_back({labels[k], gens[k]});
        return p;
    }
    if (name == "dihedral") {
        const auto [r, pm] = dihedral_rep();
        const auto hs = dihedral_hamiltonians();
        p.dimension = 3;
        p.hamiltonians = {{"P", hs[0]}, {"R+R^-1", hs[1]}, {"i(R-R^-1)", hs[2]}};
        p.group_generators = {{"R", r}, {"P", pm}};
        p.codes.push_back({"fourier", {}, dihedral_fourier_frame()});
        return p;
    }
    if (name == "z2-commutant") {
        p.dimension = 4;
        const ComplexMatrix zz = pauli_string({"ZZ", 1.0}, 2);
        p.hamiltonians = {{"II", ComplexMatrix::Identity(4, 4)}, {"ZZ", zz}};
        p.group_generators = {{"ZZ", zz}};
        return p;
    }
    throw InvalidArgument(unknown_message(name));
}

json tolerances_to_json(const Tolerances &tol) {
    return {{"tol_rank", tol.rank},           {"tol_inv", tol.invariance}, {"cluster_gap", tol.cluster_gap},
            {"tol_orth", tol.orthonormal},    {"tol_group", tol.group},    {"retry_limit", tol.retry_limit}};
}

json report_to_json(const UniversalityReport &report) {
    json comps = json::array();
    for (const auto &v : report.verdicts) {
        comps.push_back({{"J", v.isotypic_label},
                         {"d", v.d},
                         {"n", v.n},
                         {"restricted_dim", v.restricted_dim},
                         {"deficiency", v.deficiency},
                         {"universal", v.universal},
                         {"trivial_code", v.trivial_code}});
    }
    const auto &w = report.wedderburn;
    json j;
    j["schema_version"] = kSchemaVersion;
    j["input_digest"] = report.input_digest;
    j["dimension"] = report.dimension;
    j["closure_dim"] = report.closure_dim;
    j["closure_traceless_dim"] = report.closure_traceless_dim;
    j["components"] = std::move(comps);
    j["wedderburn"] = {{"alg_dim", w.alg_dim},         {"sum_d_squared", w.sum_d_squared},
                       {"comm_dim", w.comm_dim},       {"sum_n_squared", w.sum_n_squared},
                       {"sum_nd", w.sum_nd},           {"pass", w.pass()}};
    j["globally_universal"] = report.globally_universal;
    j["config"] = {{"seed", report.seed}, {"tolerances", tolerances_to_json(report.tolerances)}};
    return j;
}

json group_report_to_json(const GroupAlgebraReport &report, const std::string &input_digest) {
    json j = report_to_json(report.report);
    j["input_digest"] = input_digest;
    j["group"] = {{"order", report.group_order},
                  {"samples", report.samples},
                  {"attempts", report.attempts},
                  {"sample_seed", report.sample_seed},
                  {"generic", report.generic}};
    return j;
}

std::string report_table(const UniversalityReport &report) {
    std::ostringstream out;
    out << "dimension " << report.dimension << ", closure_dim " << report.closure_dim << " (traceless "
        << report.closure_traceless_dim << "), globally universal: " << (report.globally_universal ? "yes" : "no")
        << "\n";
    char line[128];
    std::snprintf(line, sizeof line, "%3s | %4s | %4s | %14s | %10s | %s\n", "J", "d_J", "n_J", "restricted_dim",
                  "deficiency", "universal");
    out << line;
    out << "----+------+------+----------------+------------+----------\n";
    for (const auto &v : report.verdicts) {
        const char *verdict = v.trivial_code ? "trivial" : (v.universal ? "yes" : "no");
        std::snprintf(line, sizeof line, "%3d | %4lld | %4lld | %14lld | %10lld | %s\n", v.isotypic_label,
                      static_cast<long long>(v.d), static_cast<long long>(v.n),
                      static_cast<long long>(v.restricted_dim), static_cast<long long>(v.deficiency), verdict);
        out << line;
    }
    const auto &w = report.wedderburn;
    out << "wedderburn: alg " << w.alg_dim << " = sum d^2 " << w.sum_d_squared << ", comm " << w.comm_dim
        << " = sum n^2 " << w.sum_n_squared << ", sum nd " << w.sum_nd << " = " << w.total_dim << " -> "
        << (w.pass() ? "pass" : "FAIL") << "\n";
    return out.str();
}

}  // namespace qsubctl
