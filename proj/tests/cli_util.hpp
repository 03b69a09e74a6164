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

#ifndef QSUBCTL_TESTS_CLI_UTIL_HPP
#define QSUBCTL_TESTS_CLI_UTIL_HPP

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace cli {

struct Result {
    int exit_code = -1;
    std::string out;
};

/// Runs the CLI with the given argument string; stderr is discarded.
inline Result run(const std::string &args) {
    const std::string cmd = std::string(QSUBCTL_CLI_PATH) + " " + args + " 2>/dev/null";
    Result r;
    FILE *pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    char buf[4096];
    while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) r.out.append(buf, n);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

inline std::filesystem::path scratch_dir(const std::string &tag) {
    auto dir = std::filesystem::temp_directory_path() / ("qsubctl-" + tag + "-" + std::to_string(getpid()));
    std::filesystem::create_directories(dir);
    return dir;
}

inline std::string slurp(const std::filesystem::path &p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_file(const std::filesystem::path &p, const std::string &body) {
    std::ofstream(p, std::ios::binary) << body;
}

}  // namespace cli

#endif  // QSUBCTL_TESTS_CLI_UTIL_HPP
