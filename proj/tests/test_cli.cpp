#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "json.hpp"

namespace {

struct Run {
    int status;
    std::string out;
};

Run run(const std::string& args) {
    std::string cmd = std::string(TWOSTRUCT_CLI) + " " + args + " 2>/dev/null";
    Run r{0, ""};
    FILE* p = popen(cmd.c_str(), "r");
    std::array<char, 4096> buf{};
    while (std::size_t got = fread(buf.data(), 1, buf.size(), p)) r.out.append(buf.data(), got);
    int raw = pclose(p);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

std::string fixture(const std::string& name) { return std::string(FIXTURE_DIR) + "/" + name; }

std::string temp_file(const std::string& name, const std::string& body) {
    auto path = std::filesystem::temp_directory_path() / ("twostruct_cli_" + name);
    std::ofstream(path) << body;
    return path.string();
}

}  // namespace

TEST(Cli, BoundOddChain) {
    auto r = run("bound " + fixture("l3.trn"));
    ASSERT_EQ(r.status, 0);
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["p"], 2);
    EXPECT_EQ(j["case"], "T4bound");
}

TEST(Cli, DecomposePath) {
    auto r = run("decompose --json " + fixture("p3.graph"));
    ASSERT_EQ(r.status, 0);
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["label"]["kind"], "Complete");
    EXPECT_EQ(j["children"][0]["vertices"], nlohmann::json::array({0, 2}));
    EXPECT_EQ(j["children"][1]["vertices"], nlohmann::json::array({1}));
    EXPECT_EQ(run("decompose " + fixture("p3.graph")).status, 0);
}

TEST(Cli, OracleMatching) {
    auto r = run("oracle " + fixture("m2.graph") + " --kmax 2");
    ASSERT_EQ(r.status, 0);
    EXPECT_EQ(nlohmann::json::parse(r.out)["k"], 1);
}

TEST(Cli, FamiliesReport) {
    auto r = run("families " + fixture("p3_2k1.graph"));
    ASSERT_EQ(r.status, 0);
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["c"], 2);
    EXPECT_EQ(j["isolated"]["nonedge"], nlohmann::json::array({3, 4}));
}

TEST(Cli, BoundWitnessVerifies) {
    for (const char* f : {"l3.trn", "m2.graph", "p3_2k1.graph", "2k4.graph", "f1.2s", "p4.graph"}) {
        auto b = nlohmann::json::parse(run("bound " + fixture(f)).out);
        ASSERT_TRUE(b["witness"].is_string()) << f;
        auto path = temp_file(std::string(f) + ".ext.2s", b["witness"].get<std::string>());
        EXPECT_EQ(run("verify " + fixture(f) + " " + path).status, 0) << f;
    }
}

TEST(Cli, ExtendMethods) {
    auto r = run("extend " + fixture("m2.graph") + " --method log");
    ASSERT_EQ(r.status, 0);
    auto path = temp_file("m2_log.2s", r.out);
    EXPECT_EQ(run("verify " + fixture("m2.graph") + " " + path).status, 0);
    auto c = run("extend " + fixture("m2.graph") + " --method complete-clan --clan 0,1 --color edge");
    EXPECT_EQ(c.status, 0);
    EXPECT_EQ(run("extend " + fixture("m2.graph") + " --method small-c").status, 2);
}

TEST(Cli, VerifyReportsViolation) {
    // The base itself is imprimitive.
    auto self = temp_file("m2_self.2s",
                          "2s 1\nn 4\ncolors 2\nedge sym\nnonedge sym\noriginal 4\n"
                          ". edge nonedge nonedge\nedge . nonedge nonedge\n"
                          "nonedge nonedge . edge\nnonedge nonedge edge .\n");
    EXPECT_EQ(run("verify " + fixture("m2.graph") + " " + self).status, 1);
}

TEST(Cli, UsageAndParseErrors) {
    EXPECT_EQ(run("").status, 2);
    EXPECT_EQ(run("bound").status, 2);
    EXPECT_EQ(run("bound --nope " + fixture("p4.graph")).status, 2);
    EXPECT_EQ(run("bound /nonexistent/file.2s").status, 2);
    auto bad = temp_file("bad.2s", "2s 1\nn 2\ncolors 1\na sym\n. a\nq .\n");
    EXPECT_EQ(run("bound " + bad).status, 2);
}

TEST(Cli, GenerateIsSeeded) {
    auto a = run("generate --seed 5 --n 5 --colors 3");
    auto b = run("generate --seed 5 --n 5 --colors 3");
    ASSERT_EQ(a.status, 0);
    EXPECT_EQ(a.out, b.out);
    auto path = temp_file("gen.2s", a.out);
    EXPECT_EQ(run("bound " + path).status, 0);
    EXPECT_EQ(run("generate --tournament --n 4").status, 0);
}
