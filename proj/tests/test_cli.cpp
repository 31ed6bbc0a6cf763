#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <sstream>
#include <sys/wait.h>

#include "cli.hpp"

using onerow::cli::run_cli;
using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run cli(std::vector<std::string> args) {
    args.insert(args.begin(), "onerow");
    std::vector<const char*> argv;
    for (auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

// Runs the installed binary; returns (exit code, stdout).
std::pair<int, std::string> shell(const std::string& args) {
    std::string cmd = std::string(ONEROW_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return {-1, ""};
    std::string out;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
    int status = pclose(p);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string fixture(const std::string& name) { return std::string(ONEROW_FIXTURES) + "/" + name; }

}  // namespace

TEST(Compute, Examples) {
    auto d = cli({"compute", "--family", "D", "--n", "1", "--r", "3", "--format", "text"});
    EXPECT_EQ(d.code, 0);
    EXPECT_EQ(d.out, "x1^3 + x1^-3\n");
    auto c = cli({"compute", "--family", "C", "--n", "1", "--r", "0"});
    EXPECT_EQ(c.code, 0);
    EXPECT_EQ(c.out, "1\n");
}

TEST(Compute, PipelinesAgreeByteForByte) {
    auto base = cli({"compute", "--family", "D", "--n", "2", "--r", "2"}).out;
    EXPECT_EQ(cli({"compute", "--family", "D", "--n", "2", "--r", "2", "--via", "lassalle"}).out, base);
    EXPECT_EQ(cli({"compute", "--family", "D", "--n", "2", "--r", "2", "--via", "walgebra"}).out, base);
    auto cs = cli({"compute", "--family", "C", "--n", "2", "--r", "2", "--format", "json"}).out;
    EXPECT_EQ(cli({"compute", "--family", "C", "--n", "2", "--r", "2", "--format", "json", "--via", "walgebra"}).out,
              std::string(cs).replace(cs.find("\"tableau\""), 9, "\"walgebra\""));
    auto ct = cli({"compute", "--family", "C", "--n", "2", "--r", "2", "--T", "5/7"}).out;
    EXPECT_EQ(cli({"compute", "--family", "C", "--n", "2", "--r", "2", "--T", "5/7", "--via", "lassalle"}).out, ct);
}

TEST(Compute, JsonSchema) {
    auto r = cli({"compute", "--family", "C", "--n", "2", "--r", "1", "--T", "T", "--format", "json"});
    ASSERT_EQ(r.code, 0);
    auto j = json::parse(r.out);
    EXPECT_EQ(j["schema"], 1);
    EXPECT_EQ(j["family"], "C");
    EXPECT_EQ(j["T"], "T");
    EXPECT_EQ(j["terms"].size(), 4u);
    EXPECT_EQ(j["terms"][0]["exponent"], json::array({1, 0}));
    EXPECT_EQ(j["text"], "x1 + x2 + x2^-1 + x1^-1");
}

TEST(Compute, Latex) {
    auto r = cli({"compute", "--family", "D", "--n", "1", "--r", "2", "--format", "latex"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "x_{1}^{2} + x_{1}^{-2}\n");
}

TEST(Compute, UsageErrors) {
    EXPECT_EQ(cli({"compute", "--family", "D", "--T", "5/7"}).code, 2);
    EXPECT_EQ(cli({"compute", "--family", "X"}).code, 2);
    EXPECT_EQ(cli({"compute", "--n", "0"}).code, 2);
    EXPECT_EQ(cli({"compute", "--r", "-1"}).code, 2);
    EXPECT_EQ(cli({"compute", "--family", "C", "--T", "5/7", "--via", "walgebra"}).code, 2);
    EXPECT_EQ(cli({"compute", "--family", "C", "--T", "t**2"}).code, 2);
    EXPECT_EQ(cli({"compute", "--family", "D", "--n", "3", "--r", "7", "--via", "walgebra", "--budget", "10"}).code, 2);
    EXPECT_EQ(cli({}).code, 2);
    EXPECT_EQ(cli({"--help"}).code, 0);
}

TEST(Compute, PoleExitsThree) {
    // T = 1/(tq) hits a pole of the general type C coefficients at n = r = 2
    auto r = cli({"compute", "--family", "C", "--n", "2", "--r", "2", "--T", "1/(t*q)"});
    EXPECT_EQ(r.code, 3) << r.out << r.err;
    EXPECT_NE(r.err.find("arithmetic error"), std::string::npos);
}

TEST(Tableaux, Counts) {
    auto count = [](const std::string& f, int n, int r) {
        auto res = cli({"tableaux", "--family", f, "--n", std::to_string(n), "--r", std::to_string(r), "--format", "json"});
        auto j = json::parse(res.out);
        EXPECT_EQ(j["count"], j["closed_form_count"]);
        EXPECT_EQ(j["tableaux"].size(), j["count"].get<std::size_t>());
        return j["tableaux"].size();
    };
    EXPECT_EQ(count("D", 2, 1), 4u);
    EXPECT_EQ(count("D", 2, 2), 9u);
    EXPECT_EQ(count("C", 2, 0), 1u);
    auto empty = json::parse(cli({"tableaux", "--family", "C", "--n", "2", "--r", "0", "--format", "json"}).out);
    EXPECT_TRUE(empty["tableaux"][0]["letters"].empty());
    EXPECT_EQ(cli({"tableaux", "--family", "D", "--n", "2", "--r", "1"}).out, "1bar\n2bar\n2\n1\n");
}

TEST(Verify, Thm22AllPass) {
    auto r = cli({"verify", "--suite", "thm22", "--seed", "7", "--format", "json"});
    EXPECT_EQ(r.code, 0);
    auto j = json::parse(r.out);
    EXPECT_EQ(j["schema"], 1);
    EXPECT_EQ(j["failed"], 0);
    EXPECT_EQ(j["passed"], 50);
}

TEST(Verify, SoukanSmall) { EXPECT_EQ(cli({"verify", "--suite", "soukan", "--n", "2", "--r", "2"}).code, 0); }

TEST(Verify, CorruptedWatsonFails) {
    auto r = cli({"verify", "--config", fixture("corrupt_watson.cfg"), "--format", "json"});
    EXPECT_EQ(r.code, 1);
    auto j = json::parse(r.out);
    EXPECT_EQ(j["suite"], "classical");
    for (auto& inst : j["instances"]) {
        bool watson = inst["key"].get<std::string>().rfind("watson", 0) == 0;
        EXPECT_EQ(inst["pass"], !watson) << inst["key"];
    }
    // explicit flags override the file
    EXPECT_EQ(cli({"verify", "--config", fixture("corrupt_watson.cfg"), "--suite", "thm22"}).code, 0);
}

TEST(Verify, DeterministicOutput) {
    auto a = cli({"verify", "--suite", "classical", "--seed", "99", "--samples", "5", "--format", "json"});
    auto b = cli({"verify", "--suite", "classical", "--seed", "99", "--samples", "5", "--format", "json"});
    EXPECT_EQ(a.out, b.out);
    auto c = cli({"verify", "--suite", "classical", "--seed", "100", "--samples", "5", "--format", "json"});
    EXPECT_NE(a.out, c.out);
}

TEST(Verify, UsageErrors) {
    EXPECT_EQ(cli({"verify", "--suite", "nope"}).code, 2);
    EXPECT_EQ(cli({"verify", "--suite", "classical", "--corrupt", "nope"}).code, 2);
    EXPECT_EQ(cli({"verify", "--config", fixture("missing.cfg")}).code, 2);
    EXPECT_EQ(cli({"verify", "--suite", "thm22", "--format", "latex"}).code, 2);
}

TEST(Binary, ExitCodes) {
    auto [c0, out0] = shell("compute --family D --n 1 --r 3");
    EXPECT_EQ(c0, 0);
    EXPECT_EQ(out0, "x1^3 + x1^-3\n");
    EXPECT_EQ(shell("verify --config " + fixture("corrupt_watson.cfg")).first, 1);
    EXPECT_EQ(shell("compute --family Q").first, 2);
    EXPECT_EQ(shell("compute --family C --n 2 --r 2 --T '1/(t*q)'").first, 3);
    EXPECT_EQ(shell("tableaux --family D --n 2 --r 2 --format json").second,
              shell("tableaux --family D --n 2 --r 2 --format json").second);
}
