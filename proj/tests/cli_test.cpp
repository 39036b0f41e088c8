// Copyright 2026 The luinv Authors
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

#include "cli.hpp"

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "gtest/gtest.h"
#include "cli_golden.hpp"
#include "test_support.hpp"

using namespace luinv;
namespace fs = std::filesystem;

namespace {

using Result = luinv::testing::CliRun;
using luinv::testing::run_cli;

std::string fixture(const std::string &name) { return std::string(LUINV_FIXTURE_DIR) + "/" + name; }

std::string slurp(const fs::path &path) { return luinv::testing::read_file(path); }

class TempDir {
   public:
    TempDir() {
        path_ = fs::temp_directory_path() / ("luinv_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter_++));
        fs::create_directories(path_);
    }
    ~TempDir() { fs::remove_all(path_); }
    std::string file(const std::string &name) const { return (path_ / name).string(); }

   private:
    static inline int counter_ = 0;
    fs::path path_;
};

// Exit status of the installed binary, with stdout and stderr discarded.
int exit_status(const std::string &args) {
    const std::string command = std::string(LUINV_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    const int raw = std::system(command.c_str());
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

}  // namespace

TEST(cli, decompose_bell_json) {
    const Result r = run_cli({"decompose", fixture("bell.json")});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(doc["metadata"]["convention"], "exact-expansion");
    EXPECT_EQ(doc["metadata"]["dims"], nlohmann::json::array({2, 2}));
    const auto &rr = doc["blocks"]["R"];
    EXPECT_NEAR(rr[0][0].get<double>(), 0.25, 1e-15);
    EXPECT_NEAR(rr[1][1].get<double>(), -0.25, 1e-15);
    EXPECT_NEAR(rr[2][2].get<double>(), 0.25, 1e-15);
    EXPECT_NEAR(rr[0][1].get<double>(), 0.0, 1e-15);
}

TEST(cli, decompose_tripartite_unfoldings) {
    const Result plain = run_cli({"decompose", fixture("ghz.json")});
    ASSERT_EQ(plain.code, 0) << plain.err;
    EXPECT_FALSE(nlohmann::json::parse(plain.out).contains("unfoldings"));
    const Result r = run_cli({"decompose", fixture("ghz.json"), "--unfoldings"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto doc = nlohmann::json::parse(r.out);
    ASSERT_TRUE(doc.contains("unfoldings"));
    EXPECT_EQ(doc["unfoldings"]["R2|13"].size(), 3u);
    EXPECT_EQ(doc["unfoldings"]["R2|13"][0].size(), 9u);
    EXPECT_NEAR(doc["blocks"]["R"][0][0][0].get<double>(), 0.125, 1e-15);
}

TEST(cli, reports_match_golden_files) {
    // LUINV_UPDATE_GOLDEN=1 rewrites the golden files from the current build.
    const bool update = std::getenv("LUINV_UPDATE_GOLDEN") != nullptr;
    for (const auto &c : luinv::testing::golden_cases()) {
        const Result r = run_cli(luinv::testing::expand_fixtures(c.args, LUINV_FIXTURE_DIR));
        EXPECT_EQ(r.code, c.exit_code) << c.golden << ": " << r.err;
        const fs::path path = fs::path(LUINV_GOLDEN_DIR) / c.golden;
        if (update) {
            std::ofstream(path, std::ios::binary) << r.out;
            continue;
        }
        ASSERT_TRUE(fs::exists(path)) << path;
        EXPECT_EQ(luinv::testing::normalize_report(r.out), luinv::testing::normalize_report(slurp(path))) << c.golden;
    }
}

TEST(cli, exit_code_contract) {
    for (const auto &c : luinv::testing::exit_cases()) {
        const Result r = run_cli(luinv::testing::expand_fixtures(c.args, LUINV_FIXTURE_DIR));
        EXPECT_EQ(r.code, c.exit_code) << c.args.front() << " " << r.err;
    }
}

TEST(cli, report_normalization) {
    EXPECT_EQ(luinv::testing::normalize_report("T1.iii.beta=1  -1.2e-17  0.1875\n"), "T1.iii.beta=1  0  0.1875\n");
    EXPECT_EQ(luinv::testing::normalize_report("x -0 1e-09"), "x 0 1e-09");
}

TEST(cli, invariants_json_and_settings) {
    const Result r = run_cli({"invariants", fixture("bell.json"), "--max-alpha", "0", "--max-beta", "1"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(doc["metadata"]["power_limits"]["T1.iii"], 1);
    EXPECT_EQ(doc["entries"].size(), 5u);
    bool found = false;
    for (const auto &e : doc["entries"]) {
        if (e["key"] == "T1.iii.beta=1") {
            EXPECT_NEAR(e["value"].get<double>(), 0.1875, 1e-15);
            found = true;
        }
    }
    EXPECT_TRUE(found);
}

TEST(cli, compare_exit_codes) {
    const Result distinct = run_cli({"compare", fixture("bell.json"), fixture("product00.json")});
    EXPECT_EQ(distinct.code, 1);
    EXPECT_NE(distinct.out.find("DISTINCT"), std::string::npos);
    EXPECT_NE(distinct.out.find("T1.iii.beta=1  0.1875  0.0625"), std::string::npos) << distinct.out;

    const Result same = run_cli({"compare", fixture("bell.json"), fixture("bell_rotated.json"), "--format", "json"});
    EXPECT_EQ(same.code, 0) << same.err;
    const auto doc = nlohmann::json::parse(same.out);
    EXPECT_EQ(doc["status"], "INCONCLUSIVE");
    EXPECT_TRUE(doc["witnesses"].empty());

    EXPECT_EQ(run_cli({"compare", fixture("bell.json"), fixture("ghz.json")}).code, 2);
}

TEST(cli, data_and_usage_errors) {
    EXPECT_EQ(run_cli({"decompose", fixture("malformed.json")}).code, 2);
    EXPECT_EQ(run_cli({"decompose", fixture("does_not_exist.json")}).code, 2);
    EXPECT_EQ(run_cli({"invariants", fixture("bell.json"), "--max-beta", "0"}).code, 64);
    EXPECT_EQ(run_cli({"invariants", fixture("bell.json"), "--max-alpha", "-1"}).code, 64);
    EXPECT_EQ(run_cli({"orbit-check", fixture("bell.json"), "--trials", "0"}).code, 64);
    EXPECT_EQ(run_cli({"decompose", fixture("bell.json"), "--format", "xml"}).code, 64);
    EXPECT_EQ(run_cli({"frobnicate"}).code, 64);
    EXPECT_EQ(run_cli({}).code, 64);
    const Result help = run_cli({"--help"});
    EXPECT_EQ(help.code, 0);
    EXPECT_NE(help.out.find("orbit-check"), std::string::npos);

    const Result malformed = run_cli({"decompose", fixture("malformed.json")});
    EXPECT_NE(malformed.err.find("matrix"), std::string::npos) << malformed.err;
}

TEST(cli, random_writes_valid_reproducible_states) {
    TempDir dir;
    ASSERT_EQ(run_cli({"random", "--dims", "2,2,2", "--seed", "7", "--out", dir.file("a.json")}).code, 0);
    ASSERT_EQ(run_cli({"random", "--dims", "2,2,2", "--seed", "7", "--out", dir.file("b.json")}).code, 0);
    ASSERT_EQ(run_cli({"random", "--dims", "2,2,2", "--seed", "8", "--out", dir.file("c.json")}).code, 0);
    EXPECT_EQ(slurp(dir.file("a.json")), slurp(dir.file("b.json")));
    EXPECT_NE(slurp(dir.file("a.json")), slurp(dir.file("c.json")));
    const DensityMatrix a = read_state(dir.file("a.json"));
    EXPECT_EQ(a.dims(), (Dims{2, 2, 2}));

    ASSERT_EQ(run_cli({"random", "--dims", "2,3", "--rank", "1", "--seed", "1", "--out", dir.file("p.json")}).code, 0);
    const DensityMatrix p = read_state(dir.file("p.json"));
    EXPECT_NEAR((p.matrix() * p.matrix()).trace().real(), 1.0, 1e-12);

    EXPECT_EQ(run_cli({"random", "--dims", "2,2", "--rank", "0", "--out", dir.file("x.json")}).code, 64);
    EXPECT_EQ(run_cli({"random", "--dims", "2,2", "--rank", "5", "--out", dir.file("x.json")}).code, 64);
    EXPECT_EQ(run_cli({"random", "--dims", "2", "--out", dir.file("x.json")}).code, 64);
    EXPECT_EQ(run_cli({"random", "--dims", "2,2,2,2", "--out", dir.file("x.json")}).code, 64);
    EXPECT_EQ(run_cli({"random", "--dims", "1,2", "--out", dir.file("x.json")}).code, 64);
    EXPECT_FALSE(fs::exists(dir.file("x.json")));
}

TEST(cli, orbit_check_report) {
    const Result r = run_cli({"orbit-check", fixture("w.json"), "--trials", "5", "--seed", "11"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(doc["status"], "INCONCLUSIVE");
    EXPECT_EQ(doc["trials"], 5);
    EXPECT_EQ(doc["seed"], 11);
    EXPECT_TRUE(doc["distinct_trials"].empty());
    EXPECT_LT(doc["max_delta_overall"].get<double>(), 1e-12);
    for (const char *family : {"T2.i", "T2.ii", "T3.i", "T3.ii"}) EXPECT_TRUE(doc["max_delta"].contains(family)) << family;

    const Result text = run_cli({"orbit-check", fixture("bell.json"), "--trials", "3", "--format", "text"});
    EXPECT_EQ(text.code, 0);
    EXPECT_EQ(text.out.rfind("INCONCLUSIVE  trials 3", 0), 0u) << text.out;
}

TEST(cli, orbit_check_hundred_trials) {
    for (const char *name : {"bell.json", "ghz.json"}) {
        const Result r = run_cli({"orbit-check", fixture(name), "--trials", "100"});
        ASSERT_EQ(r.code, 0) << name << ": " << r.err;
        EXPECT_LE(nlohmann::json::parse(r.out)["max_delta_overall"].get<double>(), 1e-10) << name;
    }
}

TEST(cli, out_option_writes_file) {
    TempDir dir;
    const Result r = run_cli({"invariants", fixture("bell.json"), "--out", dir.file("fp.json")});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(r.out.empty());
    EXPECT_EQ(slurp(dir.file("fp.json")), run_cli({"invariants", fixture("bell.json")}).out);
}

TEST(cli, binary_exit_codes) {
    EXPECT_EQ(exit_status("invariants " + fixture("bell.json")), 0);
    EXPECT_EQ(exit_status("compare " + fixture("bell.json") + " " + fixture("product00.json")), 1);
    EXPECT_EQ(exit_status("compare " + fixture("bell.json") + " " + fixture("ghz.json")), 2);
    EXPECT_EQ(exit_status("decompose " + fixture("malformed.json")), 2);
    EXPECT_EQ(exit_status("invariants " + fixture("bell.json") + " --max-beta 0"), 64);
    EXPECT_EQ(exit_status("orbit-check " + fixture("ghz.json") + " --trials 2"), 0);
}
