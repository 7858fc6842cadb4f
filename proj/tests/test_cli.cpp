#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ikmp/io.hpp"

namespace {

namespace fs = std::filesystem;

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args) {
    std::string cmd = std::string(IKMP_CLI) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    std::string out;
    char buf[4096];
    while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

class CliTest : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() / ("ikmp_cli_" + std::to_string(::getpid()));
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }
    std::string path(const std::string& name) const { return (dir_ / name).string(); }

    fs::path dir_;
};

TEST_F(CliTest, GenRoundTripsByteForByte) {
    for (std::string args : {"--family arrangement --n 4 --s 2", "--family complete --n 5",
                             "--family random-bipartite --a 4 --b 4 --p 0.5 --seed 7"}) {
        auto file = path("g.txt");
        ASSERT_EQ(run("gen " + args + " -o " + file).code, 0) << args;
        std::string text = slurp(file);
        EXPECT_EQ(ikmp::write_graph(ikmp::parse_graph(text)), text);
    }
    auto a = path("a.txt"), b = path("b.txt");
    run("gen --family random-bipartite --a 4 --b 4 --p 0.5 --seed 7 -o " + a);
    run("gen --family random-bipartite --a 4 --b 4 --p 0.5 --seed 7 -o " + b);
    EXPECT_EQ(slurp(a), slurp(b));

    run("gen --family arrangement --n 4 --s 2 -o " + a);
    auto g = ikmp::load_graph(a);
    EXPECT_EQ(g.order(), 12);
    EXPECT_EQ(g.size(), 24);
    auto labels = nlohmann::json::parse(slurp(a + ".labels.json"));
    EXPECT_EQ(labels.size(), 12u);
}

TEST_F(CliTest, SolveModes) {
    auto c5 = path("c5.txt"), c7 = path("c7.txt"), k33 = path("k33.txt");
    run("gen --family cycle --n 5 -o " + c5);
    run("gen --family cycle --n 7 -o " + c7);
    run("gen --family complete-bipartite --a 3 --b 3 -o " + k33);
    auto j = nlohmann::json::parse(run("solve " + c5 + " --k 2 --mode perfect").out);
    EXPECT_TRUE(j["exists"].get<bool>());
    j = nlohmann::json::parse(run("solve " + c7 + " --k 3 --mode almost").out);
    EXPECT_TRUE(j["exists"].get<bool>());
    j = nlohmann::json::parse(run("solve " + k33 + " --k 3 --mode mu").out);
    EXPECT_EQ(j["value"], 9);
}

TEST_F(CliTest, PrecludeAndExitCodes) {
    auto p5 = path("p5.txt"), k5 = path("k5.txt");
    run("gen --family path --n 5 -o " + p5);
    run("gen --family complete --n 5 -o " + k5);
    auto r = run("preclude " + p5 + " --k 3 --strong --exact");
    ASSERT_EQ(r.code, 0);
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["value"], 0);
    EXPECT_EQ(j["status"], "proved");
    EXPECT_TRUE(j.contains("elapsed_ms"));
    EXPECT_TRUE(j.contains("graph"));

    EXPECT_EQ(run("preclude " + k5 + " --k 3 --verify 3").code, 0);
    EXPECT_EQ(run("preclude " + k5 + " --k 3 --verify 4").code, 1);
    EXPECT_EQ(run("preclude " + k5 + " --k 3 --verify 3 --sample 20 --seed 2").code, 0);
    EXPECT_EQ(run("preclude " + k5 + " --k 3 --sample 20").code, 2);
    EXPECT_EQ(run("preclude " + k5).code, 2);
    EXPECT_EQ(run("preclude " + path("missing.txt") + " --k 3").code, 2);
    EXPECT_EQ(run("gen --family nope --n 3 -o " + path("x.txt")).code, 2);
    EXPECT_EQ(run("gen --family arrangement --n 3 --s 5 -o " + path("x.txt")).code, 2);
    EXPECT_EQ(run("").code, 2);
    EXPECT_EQ(run("preclude " + k5 + " --k 3 --strong --budget-test").code, 2);
    EXPECT_EQ(run("preclude " + k5 + " --k 0").code, 2);

    std::string env = "IKMP_BUDGET=5 ";
    FILE* pipe = popen((env + IKMP_CLI + " preclude " + k5 + " --k 3 2>/dev/null").c_str(), "r");
    char buf[256];
    while (fread(buf, 1, sizeof buf, pipe)) {
    }
    EXPECT_EQ(WEXITSTATUS(pclose(pipe)), 3);
}

TEST_F(CliTest, TheoremsCsv) {
    auto r = run("theorems --suite kn --kn-max 5 --format csv");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "theorem,instance,k,expected,computed,mode,provenance,status,elapsed_ms");
    auto j = run("theorems --suite kn --kn-max 4 --format json");
    EXPECT_EQ(nlohmann::json::parse(j.out)["overall"], "pass");
    // the closed form for the strong number of K6 is contradicted by search
    EXPECT_EQ(run("theorems --suite kn --kn-max 6").code, 1);
    EXPECT_EQ(run("theorems --suite kn --k 4").code, 2);
}

}  // namespace
