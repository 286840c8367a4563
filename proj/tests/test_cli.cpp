/*
   Copyright 2026 The llab Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "doctest.h"
#include "llab/cli.hpp"
#include "llab/errors.hpp"
#include "llab/output.hpp"
#include "support.hpp"

using namespace llab;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

class Sandbox {
public:
    Sandbox() {
        dir_ = fs::temp_directory_path() / ("llab-cli-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter_++));
        fs::remove_all(dir_);
    }
    ~Sandbox() { fs::remove_all(dir_); }

    Run run(std::vector<std::string> args) const {
        args.insert(args.begin(), {"--cache-dir", dir_.string(), "--workers", "2"});
        std::ostringstream out, err;
        const int code = run_cli(args, out, err);
        return {code, out.str(), err.str()};
    }
    const fs::path& dir() const { return dir_; }

private:
    static inline int counter_ = 0;
    fs::path dir_;
};

std::string read_file(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("table matches the golden file byte for byte") {
    Sandbox box;
    const auto r = box.run({"table", "--n", "12"});
    CHECK(r.code == exit_code::ok);
    CHECK(r.out == read_file(fs::path(LLAB_GOLDEN_DIR) / "table_n12.txt"));
    const auto again = box.run({"table", "--n", "12"});  // served from the cache
    CHECK(again.out == r.out);
    CHECK(fs::exists(box.dir() / "N=12-naive.json"));
    const auto structured = box.run({"table", "--n", "12", "--method", "structured"});
    CHECK(structured.out == r.out);
}

TEST_CASE("global options work after the subcommand") {
    Sandbox box;
    const auto r = box.run({"enumerate", "--n", "6", "--out", "json", "--no-cache"});
    CHECK(r.code == exit_code::ok);
    const Json j = Json::parse(r.out);
    CHECK(j["N"] == 6);
    CHECK(j["method"] == "naive");
    REQUIRE(j["polynomials"].is_array());
    CHECK(j["polynomials"].size() == 3);
    for (const auto& p : j["polynomials"]) {
        CHECK(p.contains("signs"));
        CHECK(p.contains("i"));
        CHECK(p["factors"].contains("sign"));
        CHECK(p["factors"]["factors"].is_object());
    }
    CHECK_FALSE(fs::exists(box.dir() / "N=6-naive.json"));
}

TEST_CASE("exit codes") {
    Sandbox box;
    CHECK(box.run({"enumerate", "--n", "30"}).code == exit_code::cap_exceeded);
    CHECK(box.run({"enumerate", "--n", "30", "--allow-over-cap", "--naive-cap", "26", "--method", "structured"}).code ==
          exit_code::ok);
    CHECK(box.run({"enumerate", "--n", "40", "--allow-over-cap"}).code == exit_code::cap_exceeded);
    CHECK(box.run({"verify", "--n", "20..30", "--which", "c12"}).code == exit_code::cap_exceeded);
    CHECK(box.run({"enumerate", "--n", "12", "--naive-cap", "40"}).code == exit_code::invalid_arguments);
    CHECK(box.run({}).code == exit_code::invalid_arguments);
    CHECK(box.run({"frobnicate"}).code == exit_code::invalid_arguments);
    CHECK(box.run({"enumerate", "--n", "1"}).code == exit_code::invalid_arguments);
    CHECK(box.run({"enumerate", "--n", "12", "--method", "fast"}).code == exit_code::invalid_arguments);
    CHECK(box.run({"verify", "--n", "12..4", "--which", "c12"}).code == exit_code::invalid_arguments);
    CHECK(box.run({"verify", "--n", "12", "--which", "c99"}).code == exit_code::invalid_arguments);
    CHECK(box.run({"factor", "--poly", "++x"}).code == exit_code::invalid_arguments);
    CHECK(box.run({"factor"}).code == exit_code::invalid_arguments);
    CHECK(box.run({"factor", "--poly", "++", "--factors", "2:1"}).code == exit_code::invalid_arguments);
    CHECK(box.run({"epath", "--poly", "+-++"}).code == exit_code::invalid_arguments);
    const auto help = box.run({"--help"});
    CHECK(help.code == exit_code::ok);
    CHECK(help.out.find("verify") != std::string::npos);
}

TEST_CASE("a broken enumeration is reported as a verification failure") {
    Sandbox box;
    fs::create_directories(box.dir());
    std::vector<IntPoly> partial = llab::testing::lc(12);
    partial.erase(partial.begin() + 3);
    std::ofstream(box.dir() / "N=12-naive.json") << enumeration_to_json(12, Method::naive, partial).dump();
    const auto r = box.run({"verify", "--n", "12", "--which", "c12"});
    CHECK(r.code == exit_code::verification_failed);
    CHECK(r.out.find("FAIL") != std::string::npos);
}

TEST_CASE("LLAB_WORKERS sets the default worker count") {
    Sandbox box;
    ::setenv("LLAB_WORKERS", "zero", 1);
    std::ostringstream out, err;
    CHECK(run_cli({"enumerate", "--n", "4", "--no-cache"}, out, err) == exit_code::invalid_arguments);
    ::setenv("LLAB_WORKERS", "3", 1);
    CHECK(run_cli({"enumerate", "--n", "4", "--no-cache"}, out, err) == exit_code::ok);
    ::unsetenv("LLAB_WORKERS");
}

TEST_CASE("factor, check-form11 and epath") {
    Sandbox box;
    auto r = box.run({"factor", "--poly", "++++----++++"});
    CHECK(r.code == 0);
    CHECK(r.out == "++++----++++  N=12  Φ2·Φ4·Φ24\n");
    r = box.run({"factor", "--factors", "1:1,2:2,24:1", "--sign", "-1"});
    CHECK(r.out == "++----++++--  N=12  -Φ1·Φ2^2·Φ24\n");
    r = box.run({"factor", "--poly", "++-+"});
    CHECK(r.out == "++-+  N=4  not cyclotomic\n");
    r = box.run({"factor", "--poly", "+++------+++", "--out", "json"});
    const Json j = Json::parse(r.out);
    CHECK(j["cyclotomic"] == true);
    CHECK(j["factorization"]["factors"]["3"] == 3);

    r = box.run({"check-form11", "--poly", "++++++++++++"});
    CHECK(r.out == "++++++++++++  +Φ2(x)·Φ2(x^2)·Φ3(x^4)\n");
    r = box.run({"check-form11", "--poly", "++-+"});
    CHECK(r.out == "++-+  not a nested product\n");

    r = box.run({"epath", "--poly", "+++------+++", "--out", "json"});
    CHECK(r.code == 0);
    const Json e = Json::parse(r.out);
    CHECK(e["N"] == 12);
    REQUIRE(e["path"].is_array());
    for (const auto& m : e["path"]) {
        CHECK(m.contains("t"));
        CHECK(m.contains("d"));
        CHECK(m.contains("sign"));
    }
    CHECK(e["chains"][1]["after"] == Json::array({3, 1, 0, 0}));
    r = box.run({"epath", "--poly", "+++------+++"});
    CHECK(r.out.find("d=3: (1,1,1,0)→(3,1,0,0)") != std::string::npos);
    CHECK(r.out.find("d=1: (0,1,1)→(1,2,0)→(2,1,0)") != std::string::npos);
}

TEST_CASE("verify reports") {
    Sandbox box;
    auto r = box.run({"verify", "--n", "12", "--which", "c43", "--out", "json"});
    CHECK(r.code == 0);
    const Json reps = Json::parse(r.out);
    REQUIRE(reps.size() == 1);
    const Json& rep = reps[0];
    CHECK(rep["N"] == 12);
    CHECK(rep["check"] == "c43");
    CHECK(rep["passed"] == true);
    CHECK(rep["entries"].size() == 8);
    bool p5 = false, p8 = false;
    for (const auto& e : rep["entries"]) {
        for (const char* key : {"signs", "i", "factors", "K", "T_eff", "T_path", "path", "form11", "witness_status"})
            CHECK(e.contains(key));
        for (const auto& w : e["witnesses"]) {
            p5 = p5 || (e["signs"] == "++----++++--" && w["partner"] == "++--++--++--" && w["t"] == 2);
            p8 = p8 || (e["signs"] == "+++------+++" && w["partner"] == "+++---+++---" && w["t"] == 1);
        }
    }
    CHECK(p5);
    CHECK(p8);
    CHECK(fs::exists(box.dir() / "report-c43-N=12.json"));
    CHECK(Json::parse(read_file(box.dir() / "report-c43-N=12.json")) == rep);

    r = box.run({"verify", "--n", "2..12", "--which", "t39", "--out", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out.starts_with(std::string(kCsvHeader) + "\n"));

    r = box.run({"verify", "--n", "12", "--which", "bound"});
    CHECK(r.code == 0);
    CHECK(r.out.starts_with("N=12 bound PASS  r=3  bound=152/64"));
}

TEST_CASE("norms table") {
    Sandbox box;
    const auto r = box.run({"norms", "--r-max", "3", "--out", "csv"});
    CHECK(r.code == 0);
    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "r,u_r,closed_form,rel_diff");
    std::vector<std::string> u;
    while (std::getline(lines, line)) u.push_back(line.substr(0, line.find(',', line.find(',') + 1)));
    CHECK(u == std::vector<std::string>{"0,1", "1,6", "2,28", "3,152"});
}

TEST_CASE("every command is deterministic") {
    const std::vector<std::vector<std::string>> commands{
        {"enumerate", "--n", "16"},
        {"enumerate", "--n", "16", "--out", "csv"},
        {"table", "--n", "18", "--out", "json"},
        {"factor", "--poly", "++--++++--++"},
        {"check-form11", "--poly", "+++------+++", "--out", "json"},
        {"epath", "--factors", "1:1,2:2,24:1", "--sign", "-1"},
        {"norms"},
        {"verify", "--n", "2..16", "--which", "c12", "--out", "json"},
        {"verify", "--n", "2..16", "--which", "c43"},
        {"verify", "--n", "4..16", "--which", "bound", "--out", "csv"},
    };
    for (const auto& cmd : commands) {
        Sandbox first, second;
        const auto a = first.run(cmd);
        const auto b = first.run(cmd);
        const auto c = second.run(cmd);
        INFO(cmd.front());
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
        CHECK(a.out == c.out);
    }
}

TEST_CASE("serialization round trips") {
    const ExponentMap ev = parse_factor_list("1:2,2:1,3:3,6:1");
    const Json j = to_json(ev);
    CHECK(j.dump() == R"({"sign":1,"factors":{"1":2,"2":1,"3":3,"6":1}})");
    CHECK(exponent_map_from_json(j) == ev);

    const auto list = llab::testing::lc(12);
    const Json cache = enumeration_to_json(12, Method::naive, list);
    CHECK(enumeration_from_json(cache, 12, Method::naive) == list);
    CHECK_THROWS_AS(enumeration_from_json(cache, 10, Method::naive), BadInput);
    CHECK_THROWS_AS(enumeration_from_json(cache, 12, Method::structured), BadInput);

    CHECK(format_set(std::set<unsigned>{}) == "∅");
    CHECK(format_set(std::set<unsigned>{1, 2}) == "1,2");
    CHECK(to_json(EPath{{{0, 3, 1}}}).dump() == R"([{"t":0,"d":3,"sign":1}])");
    CHECK(to_json(Form11Decomposition{-1, {{2, 1}, {3, -1}}}).dump() ==
          R"({"sign":-1,"steps":[{"p":2,"sign":1},{"p":3,"sign":-1}]})");
}
