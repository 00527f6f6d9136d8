// Copyright 2026 The shordecoh Authors
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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli/commands.h"
#include "cli/config.h"
#include "cli/emit.h"
#include "nlohmann/json.hpp"

using namespace shordecoh;
using namespace shordecoh::cli;

namespace {

struct Invocation {
    int code;
    std::string out;
    std::string err;
};

Invocation run(std::vector<std::string> args) {
    args.insert(args.begin(), "shordecoh");
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string &text) {
    std::vector<std::string> result;
    std::istringstream is(text);
    for (std::string line; std::getline(is, line);) {
        result.push_back(line);
    }
    return result;
}

class TempDir {
   public:
    TempDir() {
        path_ = std::filesystem::temp_directory_path() /
                ("shordecoh_cli_test_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
                 ::testing::UnitTest::GetInstance()->current_test_info()->name());
        std::filesystem::create_directories(path_);
    }
    ~TempDir() {
        std::filesystem::remove_all(path_);
    }
    std::string file(const std::string &name, const std::string &content = "") const {
        std::string p = (path_ / name).string();
        if (!content.empty()) {
            std::ofstream(p) << content;
        }
        return p;
    }
    static std::string read(const std::string &p) {
        std::ifstream in(p);
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }

   private:
    std::filesystem::path path_;
};

}  // namespace

TEST(cli_config, flag_overrides_file) {
    TempDir dir;
    std::string cfg = dir.file("c.json", R"({"N": 15, "x": 7, "seed": 1, "trials": 20})");
    RunConfig from_file = parse_config({"shordecoh", "sample", "--config", cfg});
    ASSERT_EQ(from_file.seed, 1u);
    ASSERT_EQ(from_file.trials, 20u);
    RunConfig merged = parse_config({"shordecoh", "sample", "--config", cfg, "--seed", "7"});
    ASSERT_EQ(merged.seed, 7u);
    ASSERT_EQ(merged.n, 15u);
}

TEST(cli_config, kernel_parsing_and_validation) {
    RunConfig fig2 = parse_config({"shordecoh", "spectrum", "--N", "21", "--x", "5", "--q", "128", "--kernel", "xi:0.1"});
    ASSERT_EQ(fig2.kernel, Kernel::hamming(0.1));
    ASSERT_EQ(fig2.q, std::optional<uint64_t>(128));
    try {
        parse_config({"shordecoh", "spectrum", "--N", "21", "--x", "5", "--kernel", "beta:1.5", "--seed", "x"});
        FAIL() << "expected ConfigError";
    } catch (const ConfigError &e) {
        ASSERT_EQ(e.lines().size(), 2u);
        std::string all = e.lines()[0] + e.lines()[1];
        ASSERT_NE(all.find("--kernel"), std::string::npos);
        ASSERT_NE(all.find("--seed"), std::string::npos);
    }
}

TEST(cli_config, file_rejects_unknown_keys) {
    ASSERT_THROW(read_config_file("spectrum", R"({"N": 21, "colour": "red"})"), ConfigError);
    ASSERT_THROW(read_config_file("spectrum", "[1, 2]"), ConfigError);
    ASSERT_THROW(read_config_file("spectrum", "{"), ConfigError);
    RawConfig raw = read_config_file("spectrum", R"({"N": 21, "kernel": "xi:0.1"})");
    ASSERT_EQ(raw.at("N"), "21");
}

TEST(cli_spectrum, csv_shape_and_row) {
    Invocation r = run({"spectrum", "--N", "21", "--x", "5", "--q", "128", "--k", "3"});
    ASSERT_EQ(r.code, 0);
    auto rows = lines(r.out);
    ASSERT_EQ(rows.size(), 129u);
    ASSERT_EQ(rows[0], "c,p");
    ASSERT_EQ(rows[65], "64,2.691650390625e-2");
    // Every value reads back exactly.
    for (std::size_t i = 1; i < rows.size(); ++i) {
        std::string v = rows[i].substr(rows[i].find(',') + 1);
        ASSERT_EQ(format_probability(std::stod(v)), v);
    }
}

TEST(cli_spectrum, json_round_trip_and_echo) {
    Invocation first = run({"spectrum", "--N", "21", "--x", "5", "--q", "128", "--kernel", "xi:0.1", "--format", "json"});
    ASSERT_EQ(first.code, 0);
    auto doc = nlohmann::ordered_json::parse(first.out);
    ASSERT_EQ(render_json(doc), first.out);
    ASSERT_EQ(doc["payload"]["values"].size(), 128u);
    ASSERT_FALSE(doc.contains("timing"));

    // The echoed config reproduces the run.
    RawConfig raw;
    for (auto &[key, value] : doc["config"].items()) {
        if (key != "command") {
            raw[key] = value.get<std::string>();
        }
    }
    std::ostringstream out, err;
    ASSERT_EQ(dispatch(build_config("spectrum", raw), out, err), 0);
    ASSERT_EQ(out.str(), first.out);
}

TEST(cli_spectrum, gnuplot_preamble) {
    Invocation r = run({"spectrum", "--N", "21", "--x", "5", "--q", "128", "--format", "gnuplot"});
    ASSERT_EQ(r.code, 0);
    auto rows = lines(r.out);
    std::size_t comments = 0;
    while (comments < rows.size() && rows[comments].starts_with("#")) {
        ++comments;
    }
    ASSERT_GE(comments, 2u);
    ASSERT_EQ(rows[comments - 1], "# c,p");
    ASSERT_EQ(rows.size() - comments, 128u);
}

TEST(cli_spectrum, writes_files_byte_identically) {
    TempDir dir;
    std::string a = dir.file("a.csv"), b = dir.file("b.csv");
    ASSERT_EQ(run({"spectrum", "--N", "21", "--x", "5", "--kernel", "xi:0.2", "--q", "128", "--output", a}).code, 0);
    ASSERT_EQ(run({"spectrum", "--N", "21", "--x", "5", "--kernel", "xi:0.2", "--q", "128", "--output", b,
                   "--threads", "3"})
                  .code,
              0);
    ASSERT_FALSE(TempDir::read(a).empty());
    ASSERT_EQ(TempDir::read(a), TempDir::read(b));
}

TEST(cli_sample, reruns_are_identical) {
    std::vector<std::string> args{"sample", "--N", "15", "--x", "7", "--kernel", "xi:0.3", "--trials", "500",
                                  "--seed", "9"};
    Invocation a = run(args), b = run(args);
    ASSERT_EQ(a.code, 0);
    ASSERT_EQ(a.out, b.out);
    args.insert(args.end(), {"--method", "dephasing"});
    Invocation c = run(args), d = run(args);
    ASSERT_EQ(c.code, 0);
    ASSERT_EQ(c.out, d.out);
}

TEST(cli_sweep, serial_and_parallel_tables_match) {
    std::vector<std::string> args{"sweep", "--N", "15", "--x", "7", "--param", "beta", "--trials", "1000",
                                  "--seed", "4"};
    Invocation serial = run(args);
    args.insert(args.end(), {"--threads", "4"});
    Invocation parallel = run(args);
    ASSERT_EQ(serial.code, 0);
    ASSERT_EQ(serial.out, parallel.out);
    auto rows = lines(serial.out);
    ASSERT_EQ(rows[0], "param,success_rate,on_peak_mass,floor_to_peak");
    ASSERT_EQ(rows.size(), 6u);
    for (std::size_t i = 2; i < rows.size(); ++i) {
        ASSERT_LT(std::stod(rows[i - 1]), std::stod(rows[i]));
    }
}

TEST(cli_sweep, values_sorted_and_unique) {
    Invocation r = run({"sweep", "--N", "15", "--x", "7", "--param", "xi", "--values", "0.5,0.1,0.5,0", "--trials",
                 "100"});
    ASSERT_EQ(r.code, 0);
    auto rows = lines(r.out);
    ASSERT_EQ(rows.size(), 4u);
    ASSERT_TRUE(rows[1].starts_with("0,"));
    ASSERT_TRUE(rows[2].starts_with("0.1,"));
    ASSERT_TRUE(rows[3].starts_with("0.5,"));
}

TEST(cli_factor, exit_codes) {
    Invocation ok = run({"factor", "--N", "15", "--x", "7", "--seed", "1", "--max-trials", "50", "--format", "json"});
    ASSERT_EQ(ok.code, 0);
    auto doc = nlohmann::json::parse(ok.out);
    auto factors = doc["payload"]["factors"].get<std::vector<uint64_t>>();
    std::sort(factors.begin(), factors.end());
    ASSERT_EQ(factors, (std::vector<uint64_t>{3, 5}));

    Invocation r21 = run({"factor", "--N", "21", "--x", "2", "--max-trials", "100"});
    ASSERT_EQ(r21.code, 0);
    auto last = lines(r21.out).back();
    ASSERT_TRUE(last.ends_with(",3,7,1") || last.ends_with(",7,3,1")) << r21.out;

    Invocation bad = run({"factor", "--N", "21", "--x", "5", "--max-trials", "30"});
    ASSERT_EQ(bad.code, 3);
    ASSERT_NE(bad.err.find("x^{r/2} ≡ −1"), std::string::npos) << bad.err;
}

TEST(cli_errors, exit_codes) {
    ASSERT_EQ(run({"spectrum", "--N", "21", "--x", "5", "--kernel", "beta:1.5"}).code, 1);
    ASSERT_EQ(run({"spectrum", "--N", "13", "--x", "2"}).code, 1);
    ASSERT_EQ(run({"spectrum", "--N", "21", "--x", "7"}).code, 1);
    ASSERT_EQ(run({"frobnicate"}).code, 1);
    ASSERT_EQ(run({"spectrum", "--N", "21", "--x", "5", "--bogus", "1"}).code, 1);
    // Standard q for N = 91 is 16384: over the double-sum guard.
    Invocation guard = run({"spectrum", "--N", "91", "--x", "2", "--kernel", "xi:0.1"});
    ASSERT_EQ(guard.code, 2);
    ASSERT_FALSE(guard.err.empty());
    ASSERT_EQ(run({"spectrum", "--N", "21", "--x", "5", "--output", "/nonexistent/dir/out.csv"}).code, 2);
    ASSERT_EQ(run({"--help"}).code, 0);
}

TEST(cli_budget, calculators) {
    Invocation m = run({"budget", "--alpha", "0.04", "--max-factorable"});
    ASSERT_EQ(m.code, 0);
    ASSERT_NE(m.out.find("ln_n_max,5\n"), std::string::npos) << m.out;

    Invocation t = run({"budget", "--alpha", "0.005", "--L", "10", "--format", "json"});
    ASSERT_EQ(t.code, 0);
    auto doc = nlohmann::json::parse(t.out);
    ASSERT_FALSE(doc.dump().empty());
    ASSERT_NE(t.out.find("20"), std::string::npos);

    Invocation v = run({"budget", "--rho-uu", "0.5", "--rho-dd", "0.5", "--rho-ud-re", "0.2"});
    ASSERT_EQ(v.code, 0);
    ASSERT_NE(v.out.find("beta_visibility,0.6\n"), std::string::npos) << v.out;
}

TEST(cli_timing, only_when_requested) {
    Invocation r = run({"budget", "--alpha", "0.04", "--max-factorable", "--format", "json", "--timing"});
    ASSERT_EQ(r.code, 0);
    ASSERT_TRUE(nlohmann::json::parse(r.out).contains("timing"));
}
