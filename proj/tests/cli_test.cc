// Copyright 2026 The kdsim Authors
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

#include "kdsim/cli.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "gtest/gtest.h"
#include "json.hpp"
#include "kdsim/polytope.h"
#include "kdsim/state_io.h"
#include "test_util.h"

using namespace kdsim;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(const std::vector<std::string> &args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

class TempDir {
   public:
    TempDir() {
        static int counter = 0;
        path_ = std::filesystem::temp_directory_path() /
                ("kdsim_cli_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
        std::filesystem::create_directories(path_);
    }
    ~TempDir() { std::filesystem::remove_all(path_); }

    std::string write(const std::string &name, const std::string &contents) const {
        std::string p = (path_ / name).string();
        std::ofstream(p) << contents;
        return p;
    }
    std::string state(const std::string &name, const DensityMatrix &rho) const {
        return write(name, to_json(rho).dump());
    }
    std::string path(const std::string &name) const { return (path_ / name).string(); }

   private:
    std::filesystem::path path_;
};

std::string body(const std::string &tsv) {
    std::istringstream in(tsv);
    std::string line, result;
    while (std::getline(in, line)) {
        if (!line.empty() && line[0] != '#') {
            result += line + "\n";
        }
    }
    return result;
}

const char *kBell = "n 2\nCX 0 1\nM 0\nM 1\n";

}  // namespace

TEST(cli, usage_errors) {
    ASSERT_EQ(run({}).code, kExitUsage);
    ASSERT_EQ(run({"bogus"}).code, kExitUsage);
    ASSERT_EQ(run({"simulate"}).code, kExitUsage);
    ASSERT_EQ(run({"volume", "--samples", "ten"}).code, kExitUsage);
    ASSERT_EQ(run({"volume", "--format", "xml"}).code, kExitUsage);
    ASSERT_EQ(run({"--help"}).code, kExitOk);
}

TEST(cli, kd_maximally_mixed) {
    TempDir dir;
    Result r = run({"kd", dir.state("mixed.json", maximally_mixed(2)), "--format", "json"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    auto j = nlohmann::json::parse(r.out);
    ASSERT_EQ(j["kd_positive"], true);
    ASSERT_EQ(j["mana_bits"].get<double>(), 0.0);
    ASSERT_EQ(j["meta"]["mana_log_base"], "2");
    ASSERT_TRUE(j["meta"].contains("version"));
    ASSERT_TRUE(j["meta"].contains("command"));
    ASSERT_TRUE(j["meta"].contains("tol"));
}

TEST(cli, kd_t_state) {
    TempDir dir;
    Result r = run({"kd", dir.state("t.json", kdsim_test::t_state())});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    ASSERT_NE(r.out.find("# kd_positive: false"), std::string::npos);
    ASSERT_NE(r.out.find("# mana_bits: 0.38577"), std::string::npos);
    ASSERT_EQ(body(r.out).substr(0, 12), "g\tchi\tre\tim\n");
}

TEST(cli, kd_css_name) {
    Result r = run({"kd", "--css", "css:H=11;g=01;x=10", "--format", "json"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    auto j = nlohmann::json::parse(r.out);
    ASSERT_EQ(j["kd_positive"], true);
    ASSERT_NEAR(j["mana_bits"].get<double>(), 0, 1e-12);
}

TEST(cli, simulate_bell) {
    TempDir dir;
    std::string circuit = dir.write("bell.circ", kBell);
    std::vector<std::string> args = {"simulate", circuit, "--css", "css:H=10;g=00;x=00", "--shots", "100000",
                                     "--seed", "3"};
    Result a = run(args);
    ASSERT_EQ(a.code, kExitOk) << a.err;
    std::istringstream in(body(a.out));
    std::string key;
    uint64_t count = 0, total = 0;
    while (in >> key >> count) {
        ASSERT_TRUE(key == "00" || key == "11");
        ASSERT_NEAR(count / 100000.0, 0.5, 0.01);
        total += count;
    }
    ASSERT_EQ(total, 100000u);
    ASSERT_EQ(run(args).out, a.out);
    ASSERT_NE(a.out.find("# seed: 3"), std::string::npos);

    // Workers do not change the output beyond the command line echo.
    args.push_back("--workers");
    args.push_back("4");
    ASSERT_EQ(body(run(args).out), body(a.out));
}

TEST(cli, simulate_refuses_t_state) {
    TempDir dir;
    std::string circuit = dir.write("m.circ", "n 1\nM 0\n");
    Result r = run({"simulate", circuit, "--state", dir.state("t.json", kdsim_test::t_state())});
    ASSERT_EQ(r.code, kExitInput);
    ASSERT_TRUE(r.out.empty());
    ASSERT_NE(r.err.find("worst entry"), std::string::npos);
}

TEST(cli, simulate_reports_parse_errors) {
    TempDir dir;
    std::string circuit = dir.write("bad.circ", "n 2\nCX 0 0\n");
    Result r = run({"simulate", circuit, "--css", "css:H=;g=00;x=00"});
    ASSERT_EQ(r.code, kExitInput);
    ASSERT_NE(r.err.find("line 2"), std::string::npos);
    ASSERT_EQ(run({"simulate", dir.path("missing.circ"), "--css", "css:H=;g=00;x=00"}).code, kExitInput);
    ASSERT_EQ(run({"kd", dir.write("bad.json", "{\"n\": 1}")}).code, kExitInput);
}

TEST(cli, oracle_bell) {
    TempDir dir;
    std::string circuit = dir.write("bell.circ", kBell);
    Result r = run({"oracle", circuit, "--css", "css:H=10;g=00;x=00", "--format", "json"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    auto j = nlohmann::json::parse(r.out);
    ASSERT_EQ(j["probabilities"].size(), 2u);
    ASSERT_NEAR(j["probabilities"]["00"].get<double>(), 0.5, 1e-15);
    ASSERT_NEAR(j["probabilities"]["11"].get<double>(), 0.5, 1e-15);
}

TEST(cli, facets) {
    Result r = run({"facets"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    ASSERT_EQ(body(r.out),
              "polytope\tvertices\tfacets\taffine_dim\n"
              "rebit\t24\t120\t9\n"
              "css\t20\t40\t9\n"
              "shared\t-\t24\t-\n");
    Result h = run({"facets", "--hrep", "shared"});
    ASSERT_EQ(h.code, kExitOk);
    std::string lines = body(h.out);
    ASSERT_EQ(std::count(lines.begin(), lines.end(), '\n'), 24);
    Result v = run({"facets", "--vrep", "stabilizer", "--format", "json"});
    ASSERT_EQ(nlohmann::json::parse(v.out)["vertices"].size(), 60u);
    ASSERT_EQ(run({"facets", "--hrep", "other"}).code, kExitInput);
}

TEST(cli, bound_scan_builtin_f) {
    Result r = run({"bound-scan", "--only-f", "--format", "json"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    auto j = nlohmann::json::parse(r.out);
    ASSERT_EQ(j["scans"].size(), 1u);
    ASSERT_NEAR(j["scans"][0]["lambda_magic"].get<double>(), 0.05, 1e-6);
    ASSERT_NEAR(j["scans"][0]["lambda_kdpos"].get<double>(), 1.0 / 12, 1e-6);
    ASSERT_TRUE(j["meta"].contains("bisection_tol"));
}

TEST(cli, bound_scan_all) {
    Result r = run({"bound-scan", "--workers", "4"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    std::string lines = body(r.out);
    ASSERT_EQ(std::count(lines.begin(), lines.end(), '\n'), 25);
}

TEST(cli, volume) {
    Result a = run({"volume", "--samples", "500", "--seed", "4", "--workers", "2"});
    ASSERT_EQ(a.code, kExitOk) << a.err;
    Result b = run({"volume", "--samples", "500", "--seed", "4", "--workers", "1"});
    ASSERT_EQ(body(a.out), body(b.out));
    ASSERT_NE(a.out.find("# kd_tol: "), std::string::npos);
    ASSERT_NE(a.out.find("# seed: 4"), std::string::npos);
}

TEST(cli, css_list) {
    Result r = run({"css-list", "2"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    std::string lines = body(r.out);
    ASSERT_EQ(std::count(lines.begin(), lines.end(), '\n'), 20);
    ASSERT_NE(r.out.find("# count: 20"), std::string::npos);
    ASSERT_EQ(run({"css-list", "5"}).code, kExitInput);
}

TEST(cli, classify) {
    TempDir dir;
    Result r = run({"classify", "--css", "css:H=10;g=00;x=01", "--format", "json"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    auto j = nlohmann::json::parse(r.out);
    ASSERT_EQ(j["category"], "STAB_KDPOS");
    ASSERT_TRUE(j.contains("witness"));

    Result m = run({"classify", "--format", "json",
                    dir.state("bound.json", rho_lambda(matrix_F(), 0.06))});
    ASSERT_EQ(m.code, kExitOk) << m.err;
    j = nlohmann::json::parse(m.out);
    ASSERT_EQ(j["category"], "MAGIC_KDPOS");
    ASSERT_EQ(j["separating_functional"].size(), 16u);
}

TEST(cli, out_file) {
    TempDir dir;
    std::string path = dir.path("list.tsv");
    Result r = run({"css-list", "1", "--out", path});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    ASSERT_TRUE(r.out.empty());
    std::ifstream in(path);
    std::stringstream contents;
    contents << in.rdbuf();
    ASSERT_NE(contents.str().find("css:H=;g=0;x=0"), std::string::npos);
}
