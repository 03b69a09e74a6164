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

#include <gtest/gtest.h>

#include <json.hpp>

#include "cli_util.hpp"

using nlohmann::json;

class CliTest : public ::testing::Test {
   protected:
    void SetUp() override { dir_ = cli::scratch_dir("cli"); }
    void TearDown() override { std::filesystem::remove_all(dir_); }

    std::string example(const std::string &name) {
        std::string file = name;
        for (char &c : file)
            if (c == ':') c = '_';
        const auto path = dir_ / (file + ".json");
        EXPECT_EQ(cli::run("examples " + name + " --out " + path.string()).exit_code, 0);
        return path.string();
    }

    std::filesystem::path dir_;
};

TEST_F(CliTest, analyze_example) {
    const auto r = cli::run("analyze " + example("example1") + " --seed 7 --format json");
    ASSERT_EQ(r.exit_code, 0);
    const json j = json::parse(r.out);
    EXPECT_EQ(j["closure_dim"], 3);
    EXPECT_EQ(j["components"][0]["d"], 2);
    EXPECT_EQ(j["components"][0]["n"], 1);
    EXPECT_TRUE(j["components"][0]["universal"].get<bool>());
    EXPECT_EQ(j["config"]["seed"], 7);

    const auto table = cli::run("analyze " + example("example1") + " --seed 7 --format table");
    EXPECT_NE(table.out.find("restricted_dim"), std::string::npos);
}

TEST_F(CliTest, boson_deficiency) {
    const auto r = cli::run("analyze " + example("boson:2:2") + " --format json");
    ASSERT_EQ(r.exit_code, 0);
    EXPECT_EQ(json::parse(r.out)["components"][0]["deficiency"], 5);
}

TEST_F(CliTest, group_mode) {
    auto r = cli::run("group " + example("dihedral") + " --format json");
    ASSERT_EQ(r.exit_code, 0);
    json j = json::parse(r.out);
    EXPECT_EQ(j["group"]["order"], 6);
    EXPECT_TRUE(j["components"][0]["universal"].get<bool>());

    r = cli::run("group " + example("swap:3") + " --format json");
    ASSERT_EQ(r.exit_code, 0);
    j = json::parse(r.out);
    EXPECT_EQ(j["components"][0]["d"], 2);
    EXPECT_EQ(j["components"][0]["n"], 2);
    EXPECT_TRUE(j["components"][0]["universal"].get<bool>());

    EXPECT_EQ(cli::run("group " + example("dihedral") + " --max-order 3").exit_code, 4);
    EXPECT_EQ(cli::run("group " + example("example1")).exit_code, 2);  // no group generators
}

TEST_F(CliTest, check_codes) {
    const std::string p = example("example1");
    auto r = cli::run("check " + p + " --code 1,2 --format json");
    ASSERT_EQ(r.exit_code, 0);
    EXPECT_EQ(json::parse(r.out)["status"], "universal");

    r = cli::run("check " + p + " --code 0,1 --format json");
    ASSERT_EQ(r.exit_code, 0);
    const json v = json::parse(r.out);
    EXPECT_EQ(v["status"], "invariance_violation");
    EXPECT_FALSE(v["invariant"].get<bool>());

    r = cli::run("check " + p + " --code 0 --format json");
    EXPECT_EQ(json::parse(r.out)["status"], "trivial");

    r = cli::run("check " + p + " --code all --format json");
    EXPECT_EQ(json::parse(r.out)["status"], "not_universal");

    r = cli::run("check " + example("dihedral") + " --code fourier --format json");
    EXPECT_EQ(json::parse(r.out)["status"], "universal");

    EXPECT_EQ(cli::run("check " + p + " --code 7").exit_code, 2);
    EXPECT_EQ(cli::run("check " + p + " --code 1,1").exit_code, 2);
    EXPECT_EQ(cli::run("check " + p + " --code a,b").exit_code, 2);
}

TEST_F(CliTest, deterministic_reports) {
    const std::string p = example("swap:3");
    const auto a = dir_ / "a.json", b = dir_ / "b.json";
    ASSERT_EQ(cli::run("analyze " + p + " --seed 3 --out " + a.string()).exit_code, 0);
    ASSERT_EQ(cli::run("analyze " + p + " --seed 3 --out " + b.string()).exit_code, 0);
    EXPECT_EQ(cli::slurp(a), cli::slurp(b));
    EXPECT_FALSE(cli::slurp(a).empty());

    EXPECT_EQ(cli::run("examples dihedral").out, cli::run("examples dihedral").out);
}

TEST_F(CliTest, input_errors) {
    EXPECT_EQ(cli::run("analyze /nonexistent/problem.json").exit_code, 2);
    EXPECT_EQ(cli::run("examples nonsense").exit_code, 2);
    EXPECT_EQ(cli::run("").exit_code, 2);
    EXPECT_EQ(cli::run("analyze").exit_code, 2);
    EXPECT_EQ(cli::run("analyze x.json --format xml").exit_code, 2);

    const auto bad = dir_ / "bad.json";
    cli::write_file(bad, "{ not json");
    EXPECT_EQ(cli::run("analyze " + bad.string()).exit_code, 2);
    cli::write_file(bad, R"({"schema_version": 1, "dimension": 2,
        "hamiltonians": [{"name": "h", "matrix": [[[0,0],[0,1]],[[0,0],[0,0]]]}]})");
    EXPECT_EQ(cli::run("analyze " + bad.string()).exit_code, 2);
    cli::write_file(bad, R"({"schema_version": 1, "dimension": 2, "hamiltonians": [],
        "group_generators": [{"name": "u", "matrix": [[[2,0],[0,0]],[[0,0],[1,0]]]}]})");
    EXPECT_EQ(cli::run("group " + bad.string()).exit_code, 2);
}

TEST_F(CliTest, numerical_failure) {
    EXPECT_EQ(cli::run("analyze " + example("example1") + " --cluster-gap 1e9").exit_code, 3);
}
