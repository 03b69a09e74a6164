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

// Command-line front end. Exit codes: 0 success, 2 input/schema,
// 3 numerical failure, 4 budget exceeded.

#include <unistd.h>

#include <charconv>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qsubctl/errors.hpp"
#include "qsubctl/group_algebra.hpp"
#include "qsubctl/lie_closure.hpp"
#include "qsubctl/problem.hpp"
#include "qsubctl/universality.hpp"

namespace {

using nlohmann::json;
using namespace qsubctl;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitBudget = 4;

struct CommonOptions {
    std::string problem;
    std::uint64_t seed = 0;
    Tolerances tol;
    std::string out;
    std::string format;
};

void add_common(CLI::App *cmd, CommonOptions &o) {
    cmd->add_option("problem", o.problem, "Problem file (JSON)")->required();
    cmd->add_option("--seed", o.seed, "Seed for generic draws")->capture_default_str();
    cmd->add_option("--tol-rank", o.tol.rank, "Relative rank cut")->capture_default_str();
    cmd->add_option("--tol-inv", o.tol.invariance, "Invariant-subspace leakage tolerance")->capture_default_str();
    cmd->add_option("--cluster-gap", o.tol.cluster_gap, "Eigenvalue cluster gap")->capture_default_str();
    cmd->add_option("--out", o.out, "Write the report document here instead of stdout");
    cmd->add_option("--format", o.format, "json or table")->check(CLI::IsMember({"json", "table"}));
}

bool want_table(const CommonOptions &o) {
    if (!o.format.empty()) return o.format == "table";
    return o.out.empty() && isatty(STDOUT_FILENO);
}

void emit(const CommonOptions &o, const json &doc, const std::string &table) {
    const std::string body = want_table(o) && o.out.empty() ? table : doc.dump(2) + "\n";
    if (o.out.empty()) {
        std::cout << body;
        return;
    }
    std::ofstream f(o.out, std::ios::binary);
    if (!f) throw SchemaError("cannot write report to '" + o.out + "'");
    f << (o.format == "table" ? table : doc.dump(2) + "\n");
    std::cout << table;
}

int cmd_analyze(const CommonOptions &o) {
    const ProblemFile p = read_problem_file(o.problem);
    if (p.hamiltonians.empty()) throw SchemaError("$.hamiltonians: analyze needs at least one Hamiltonian");
    const auto report = analyze(p.hamiltonian_matrices(), o.seed, o.tol);
    emit(o, report_to_json(report), report_table(report));
    return kExitOk;
}

int cmd_group(const CommonOptions &o, Index samples, Index max_order) {
    const ProblemFile p = read_problem_file(o.problem);
    if (p.group_generators.empty()) throw SchemaError("$.group_generators: group mode needs generator unitaries");
    const auto gens = p.group_matrices();
    const auto group = with_stage("group_closure", [&] { return group_closure(gens, -1.0, max_order); });
    const auto result = group_algebra_analyze(group, o.seed, samples, o.tol);
    std::string table = "group order " + std::to_string(result.group_order) + ", " + std::to_string(samples) +
                        " samples, generic: " + (result.generic ? "yes" : "no") + "\n" + report_table(result.report);
    emit(o, group_report_to_json(result, digest_generators(gens)), table);
    return kExitOk;
}

CodeSpec resolve_code(const ProblemFile &p, const std::string &code) {
    for (const auto &c : p.codes)
        if (c.name == code) return c;
    CodeSpec spec;
    spec.name = code;
    if (code == "all") {
        for (Index k = 0; k < p.dimension; ++k) spec.indices.push_back(k);
        return spec;
    }
    std::stringstream ss(code);
    for (std::string tok; std::getline(ss, tok, ',');) {
        Index v = -1;
        const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size() || v < 0 || v >= p.dimension) {
            throw SchemaError("--code: '" + code + "' is neither a code name nor a list of indices in [0, " +
                              std::to_string(p.dimension) + ")");
        }
        for (Index seen : spec.indices)
            if (seen == v) throw SchemaError("--code: duplicate index " + tok);
        spec.indices.push_back(v);
    }
    if (spec.indices.empty()) throw SchemaError("--code: empty code");
    return spec;
}

int cmd_check(const CommonOptions &o, const std::string &code) {
    const ProblemFile p = read_problem_file(o.problem);
    if (p.hamiltonians.empty()) throw SchemaError("$.hamiltonians: check needs at least one Hamiltonian");
    const CodeSpec spec = resolve_code(p, code);
    const InvariantSubspace subspace = code_subspace(spec, p.dimension);
    const auto gens = p.hamiltonian_matrices();
    const auto closure = with_stage("lie_closure", [&] { return lie_closure(gens, o.tol.rank); });

    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["input_digest"] = digest_generators(gens);
    doc["code"] = spec.name;
    doc["d"] = subspace.dim();
    doc["closure_dim"] = closure.dim();
    std::string table;
    try {
        const CodeVerdict v = code_universality(closure, subspace, o.tol);
        doc["status"] = v.trivial_code ? "trivial" : (v.universal ? "universal" : "not_universal");
        doc["invariant"] = true;
        doc["invariance_residual"] = v.invariance_residual;
        doc["restricted_dim"] = v.restricted_dim;
        doc["deficiency"] = v.deficiency;
        doc["universal"] = v.universal;
        doc["trivial_code"] = v.trivial_code;
        table = "code " + spec.name + " (d=" + std::to_string(v.d) + "): restricted_dim " +
                std::to_string(v.restricted_dim) + ", deficiency " + std::to_string(v.deficiency) + ", " +
                doc["status"].get<std::string>() + "\n";
    } catch (const InvarianceViolation &e) {
        double worst = 0;
        for (const auto &l : closure.elements) worst = std::max(worst, restrict_to(l, subspace).residual);
        doc["status"] = "invariance_violation";
        doc["invariant"] = false;
        doc["invariance_residual"] = worst;
        doc["universal"] = false;
        table = "code " + spec.name + ": InvarianceViolation (residual " + std::to_string(worst) + ")\n";
    }
    doc["config"] = {{"seed", o.seed}, {"tolerances", tolerances_to_json(o.tol)}};
    emit(o, doc, table);
    return kExitOk;
}

int cmd_examples(const std::string &name, const std::string &out) {
    const ProblemFile p = catalog_problem(name);
    const std::string body = problem_to_json(p).dump(2) + "\n";
    if (out.empty()) {
        std::cout << body;
    } else {
        std::ofstream f(out, std::ios::binary);
        if (!f) throw SchemaError("cannot write '" + out + "'");
        f << body;
    }
    return kExitOk;
}

int exit_code_for(const Error &e) {
    switch (e.kind()) {
        case ErrorKind::Input:
            return kExitInput;
        case ErrorKind::Budget:
            return kExitBudget;
        case ErrorKind::Numerical:
            break;
    }
    return kExitNumerical;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"qsubctl: encoded-universality analysis for sets of Hamiltonians"};
    app.require_subcommand(1);

    CommonOptions analyze_opts;
    auto *analyze_cmd = app.add_subcommand("analyze", "Decompose the space and report per-code verdicts");
    add_common(analyze_cmd, analyze_opts);

    CommonOptions group_opts;
    Index samples = 2;
    Index max_order = 4096;
    auto *group_cmd = app.add_subcommand("group", "Close a finite group and test generic group-algebra control");
    add_common(group_cmd, group_opts);
    group_cmd->add_option("--samples", samples, "Group-algebra samples")->capture_default_str();
    group_cmd->add_option("--max-order", max_order, "Largest group order to enumerate")->capture_default_str();

    CommonOptions check_opts;
    std::string code;
    auto *check_cmd = app.add_subcommand("check", "Verdict for one code subspace");
    add_common(check_cmd, check_opts);
    check_cmd->add_option("--code", code, "Code name from the problem file, comma-separated indices, or 'all'")
        ->required();

    std::string example_name, example_out;
    auto *examples_cmd = app.add_subcommand("examples", "Write a catalog problem file");
    examples_cmd->add_option("name", example_name, "example1, example1-prime, swap:<n>, boson:<L>:<N>, dihedral, "
                                                   "z2-commutant")
        ->required();
    examples_cmd->add_option("--out", example_out, "Output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        if (*analyze_cmd) return cmd_analyze(analyze_opts);
        if (*group_cmd) return cmd_group(group_opts, samples, max_order);
        if (*check_cmd) return cmd_check(check_opts, code);
        if (*examples_cmd) return cmd_examples(example_name, example_out);
    } catch (const Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const nlohmann::json::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumerical;
    }
    return kExitInput;
}
