/*
   Copyright 2026 The skewcodes Authors

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

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <string>

#include "skewcodes/cli.hpp"

namespace {

struct Result {
    int exit_code;
    std::string out;
};

Result run(const std::string& args) {
    const std::string cmd = std::string(SKEWCODES_TOOL) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) throw std::runtime_error("popen failed");
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

int count_lines_starting(const std::string& text, const std::string& prefix) {
    std::istringstream in(text);
    int count = 0;
    for (std::string line; std::getline(in, line);) count += line.rfind(prefix, 0) == 0;
    return count;
}

}  // namespace

TEST(Cli, VerifyCommandPasses) {
    const auto r = run("verify-paper");
    EXPECT_EQ(r.exit_code, 0) << r.out;
    EXPECT_EQ(count_lines_starting(r.out, "PASS"), 10) << r.out;
    EXPECT_EQ(count_lines_starting(r.out, "FAIL"), 0) << r.out;
}

TEST(Cli, VerifyCommandFaultInjectionFails) {
    const auto r = run("verify-paper --beta 1");
    EXPECT_NE(r.exit_code, 0) << r.out;
    EXPECT_GT(count_lines_starting(r.out, "FAIL"), 0);
    EXPECT_NE(r.out.find("FAIL  lattice-skew-nodes"), std::string::npos) << r.out;
}

TEST(Cli, VerifyCommandJson) {
    const auto r = run("verify-paper --json");
    ASSERT_EQ(r.exit_code, 0) << r.out;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j.at("schema"), 1);
    EXPECT_TRUE(j.at("passed").get<bool>());
    ASSERT_TRUE(j.at("results").is_array());
    EXPECT_EQ(j.at("results").size(), 10u);
    for (const auto& c : j.at("results")) EXPECT_TRUE(c.at("passed").get<bool>()) << c.dump();
}

TEST(Cli, Divisors) {
    const auto skew = run("divisors");
    EXPECT_EQ(skew.exit_code, 0);
    EXPECT_EQ(count_lines_starting(skew.out, "  deg 1"), 6) << skew.out;
    const auto comm = run("divisors --beta 1");
    EXPECT_EQ(comm.exit_code, 0);
    EXPECT_EQ(count_lines_starting(comm.out, "  deg 1"), 2) << comm.out;
    EXPECT_NE(comm.out.find("  deg 1  x+1\n"), std::string::npos);
    EXPECT_NE(comm.out.find("  deg 1  x+2\n"), std::string::npos);
    const auto bad = run("divisors --n 1");
    EXPECT_EQ(bad.exit_code, 2);
    EXPECT_NE(bad.out.find("multiple of ord(Theta)"), std::string::npos) << bad.out;
}

TEST(Cli, IdealsJsonAndDot) {
    const auto r = run("ideals --format json");
    ASSERT_EQ(r.exit_code, 0) << r.out;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j.at("schema"), 1);
    EXPECT_EQ(j.at("ideals").size(), 13u);
    EXPECT_EQ(j.at("edges").size(), 20u);
    std::set<std::string> labels;
    for (const auto& I : j.at("ideals")) {
        labels.insert(I.at("label").get<std::string>());
        EXPECT_TRUE(I.contains("type") && I.contains("generators") && I.contains("cardinality"));
    }
    for (const char* s : {"<x+1+u>", "<x+1+2u>", "<x+2+u>", "<x+2+2u>", "<u, x+1>", "<u(x+2)>"})
        EXPECT_TRUE(labels.count(s)) << s;
    const auto comm = nlohmann::json::parse(run("ideals --beta 1 --format json").out);
    EXPECT_EQ(comm.at("ideals").size(), 9u);

    const auto dot = run("ideals --format dot");
    ASSERT_EQ(dot.exit_code, 0);
    EXPECT_EQ(dot.out.rfind("digraph", 0), 0u);
    EXPECT_NE(dot.out.find("&lt;u, x+1&gt;<SUB>3</SUB>"), std::string::npos) << dot.out;
    EXPECT_NE(dot.out.find("&lt;u&gt;<SUB>2</SUB>"), std::string::npos);
    std::size_t arrows = 0;
    for (std::size_t pos = 0; (pos = dot.out.find("->", pos)) != std::string::npos; ++pos) ++arrows;
    EXPECT_EQ(arrows, 20u);
}

TEST(Cli, IdealsBoundError) {
    const auto r = run("ideals --beta 1 --n 8");
    EXPECT_EQ(r.exit_code, 2);
    EXPECT_NE(r.out.find("exceeds the brute-force bound"), std::string::npos) << r.out;
    const auto capped = run("ideals --max-bruteforce 80");
    EXPECT_EQ(capped.exit_code, 2) << capped.out;
}

TEST(Cli, Dual) {
    const auto h = run("dual --hermitian --gen \"x+1+2*u\"");
    EXPECT_EQ(h.exit_code, 0) << h.out;
    EXPECT_NE(h.out.find("hermitian dual: <x+2+u>"), std::string::npos) << h.out;
    const auto v = run("dual --euclidean --hermitian --verify --format json --gen u --gen x+1");
    ASSERT_EQ(v.exit_code, 0) << v.out;
    const auto j = nlohmann::json::parse(v.out);
    ASSERT_EQ(j.at("duals").size(), 2u);
    for (const auto& d : j.at("duals")) {
        EXPECT_TRUE(d.at("oracle_agrees").get<bool>());
        EXPECT_EQ(d.at("dual").at("label"), "<u(x+2)>");
    }
    const auto li1 = nlohmann::json::parse(run("dual --format json --gen x+1").out);
    EXPECT_EQ(li1.at("duals").at(0).at("dual").at("label"), "<x+2>");
    EXPECT_EQ(li1.at("generator_matrix"), nlohmann::json::parse(R"([["1", "1"]])"));
    EXPECT_EQ(li1.at("parity_check_matrix"), nlohmann::json::parse(R"([["1", "2"]])"));
    const auto id = run("dual --hermitian --beta 1 --gen x+1");
    EXPECT_NE(id.exit_code, 0);
    EXPECT_NE(id.out.find("ord(Theta) = 2"), std::string::npos) << id.out;
    const auto parse = run("dual --gen \"x+\"");
    EXPECT_EQ(parse.exit_code, 2);
    EXPECT_NE(parse.out.find("position"), std::string::npos) << parse.out;
}

TEST(Cli, SelfDualSearchAndRingInfo) {
    const auto r = run("selfdual-search");
    EXPECT_EQ(r.exit_code, 0) << r.out;
    EXPECT_NE(r.out.find("<u>"), std::string::npos) << r.out;
    const auto info = run("ring-info --format json");
    ASSERT_EQ(info.exit_code, 0) << info.out;
    const auto j = nlohmann::json::parse(info.out);
    EXPECT_EQ(j.at("schema"), 1);
    EXPECT_EQ(j.at("context").at("theta_order"), 2);
}

TEST(Cli, ConfigFileWithOverrides) {
    const auto path = std::filesystem::temp_directory_path() / "skewcodes_test_config.json";
    {
        std::ofstream out(path);
        out << R"({"field": {"p": 3, "m": 1}, "beta": 1, "n": 2, "lambda": "1", "format": "text"})";
    }
    const auto r = run("divisors --config " + path.string());
    EXPECT_EQ(r.exit_code, 0) << r.out;
    EXPECT_EQ(count_lines_starting(r.out, "  deg 1"), 2) << r.out;
    const auto over = run("divisors --config " + path.string() + " --beta 2");
    EXPECT_EQ(count_lines_starting(over.out, "  deg 1"), 6) << over.out;
    const auto cfg = skewcodes::cli::load_config(path.string());
    EXPECT_EQ(cfg.beta, std::optional<std::string>("1"));
    EXPECT_EQ(cfg.n, 2);
    std::filesystem::remove(path);
    EXPECT_THROW(skewcodes::cli::load_config(path.string()), std::invalid_argument);
    EXPECT_EQ(run("divisors --config /nonexistent/config.json").exit_code, 2);
}

TEST(Cli, LibraryEntryPoints) {
    std::ostringstream os;
    EXPECT_EQ(skewcodes::cli::cmd_verify_paper(std::nullopt, "text", os), 0);
    std::ostringstream bad;
    EXPECT_NE(skewcodes::cli::cmd_verify_paper(std::string("1"), "text", bad), 0);
    EXPECT_THROW(skewcodes::cli::check_format("xml", {"text", "json"}), std::invalid_argument);
}
