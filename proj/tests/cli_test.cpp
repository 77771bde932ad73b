#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args) {
    const std::string cmd = std::string(RESOLVDIM_CLI) + " " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::filesystem::path temp(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("resolvdim_cli_" + std::to_string(::getpid()) + "_" + name);
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream f(p);
    std::stringstream s;
    s << f.rdbuf();
    return s.str();
}

}  // namespace

TEST(Cli, Graph) {
    const auto r = run("graph --q 2 --n 3");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "order=7 size=15\n");
    const auto j = nlohmann::json::parse(run("graph --q 3 --n 2 --format json").out);
    EXPECT_EQ(j["order"], 8);
    EXPECT_EQ(j["size"], 24);
}

TEST(Cli, GraphExports) {
    const auto dot = temp("g.dot");
    const auto edges = temp("g.txt");
    ASSERT_EQ(run("graph --q 2 --n 2 --dot " + dot.string() + " --edges " + edges.string()).code, 0);
    EXPECT_EQ(slurp(dot), "graph gv {\n  1 [label=\"e1\"];\n  2 [label=\"e2\"];\n  3 [label=\"e1+e2\"];\n  1 -- 3;\n  2 -- 3;\n}\n");
    EXPECT_EQ(slurp(edges), "1 3\n2 3\n");
    std::filesystem::remove(dot);
    std::filesystem::remove(edges);
}

TEST(Cli, Dim) {
    const auto r = run("dim --q 2 --n 3");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "formula=3 search=3 witness={e1,e2,e1+e2}\n");
    EXPECT_EQ(run("dim --q 3 --n 2 --workers 3").out, "formula=5 search=5 witness={e1,e2,e1+e2,2e1+e2,e1+2e2}\n");
}

TEST(Cli, Twins) {
    const auto r = run("twins --q 3 --n 2");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("mask=01 size=2 members=[e1,2e1]"), std::string::npos);
    EXPECT_NE(r.out.find("mask=11 size=4"), std::string::npos);
    EXPECT_NE(run("twins --q 2 --n 2").out.find("mask=mixed size=2 members=[e1,e2]"), std::string::npos);
}

TEST(Cli, Check) {
    const auto r = run("check --q 2 --n 3 -W e1,e1+e3,e3");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "resolving=yes minimal=yes contains_v_basis=no\n");
    EXPECT_EQ(run("check --q 2 --n 3 -W e1,e2").out,
              "resolving=no minimal=no contains_v_basis=no collision=(e1+e2, e1+e2+e3)\n");
    const auto j = nlohmann::json::parse(run("check --q 2 --n 3 -W e1,e2,e3 --format json").out);
    EXPECT_TRUE(j["resolving"].get<bool>());
    EXPECT_TRUE(j["contains_v_basis"].get<bool>());
}

TEST(Cli, Exchange) {
    const auto j = nlohmann::json::parse(run("exchange --q 2 --n 3").out);
    EXPECT_FALSE(j["holds"].get<bool>());
    EXPECT_EQ(j["witness"]["w2"], nlohmann::json({"e1", "e1+e2", "e2+e3", "e1+e2+e3"}));
    EXPECT_EQ(run("exchange --q 3 --n 3 --budget 10").code, 3);
    const auto t = nlohmann::json::parse(run("exchange --q 3 --n 3 --budget 10 --allow-theorem").out);
    EXPECT_EQ(t["method"], "theorem-citation");
}

TEST(Cli, Intersect) {
    const auto family = temp("fam.txt");
    {
        std::ofstream f(family);
        f << "a,b\nb,c\nd\n";
    }
    const auto r = run("intersect --family " + family.string());
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "1 2\n");
    EXPECT_EQ(run("intersect --powerset 2").out, "1\n2\n1,2\n");
    const auto edges = temp("edges.txt");
    {
        std::ofstream f(edges);
        f << "1 2\n2 3\n";
    }
    EXPECT_EQ(run("intersect --realize " + edges.string()).out, "1-2,v1\n1-2,2-3,v2\n2-3,v3\n");
    std::filesystem::remove(family);
    std::filesystem::remove(edges);
}

TEST(Cli, VerifyGrid) {
    const auto all = run("verify --format json");
    EXPECT_EQ(all.code, 1);  // twin partitions disagree on (2,2)
    const auto j = nlohmann::json::parse(all.out);
    EXPECT_EQ(j["cells"].size(), 6u);
    EXPECT_EQ(all.out, run("verify --format json --workers 4").out);

    const auto ok = run("verify --q-range 3..5 --n-range 1..2");
    EXPECT_EQ(ok.code, 0);
    EXPECT_EQ(ok.out.substr(ok.out.size() - 5), "PASS\n");

    // Orders 6 and 10 are not tabled and drop out of a range.
    const auto filtered = run("verify --q-range 5..10 --n 1");
    EXPECT_EQ(filtered.code, 0);
    EXPECT_EQ(filtered.out.find("q=6"), std::string::npos);
    EXPECT_NE(filtered.out.find("q=9 n=1"), std::string::npos);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run("graph --q 2 --n 20").code, 3);
    EXPECT_EQ(run("dim --q 2 --n 5 --budget 10").code, 3);
    EXPECT_EQ(run("verify --q-range 3..2").code, 2);
    EXPECT_EQ(run("verify --q-range x").code, 2);
    EXPECT_EQ(run("graph --q 6 --n 2").code, 2);
    EXPECT_EQ(run("check --q 2 --n 3 -W e1,,e2").code, 2);
    EXPECT_EQ(run("check --q 2 --n 3 -W e4").code, 2);
    EXPECT_EQ(run("nonsense").code, 2);
    EXPECT_EQ(run("graph --q 2").code, 2);
    EXPECT_EQ(run("verify --q 2 --n 4 --vertex-cap 10").code, 3);
}

TEST(Cli, BudgetFromEnvironment) {
    EXPECT_EQ(run("").code, 2);
    const std::string cmd = std::string("RESOLVDIM_BUDGET=10 ") + RESOLVDIM_CLI + " dim --q 2 --n 5 >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    EXPECT_EQ(WEXITSTATUS(status), 3);
}

TEST(Cli, OutFile) {
    const auto out = temp("out.json");
    ASSERT_EQ(run("graph --q 2 --n 2 --format json --out " + out.string()).out, "");
    EXPECT_EQ(nlohmann::json::parse(slurp(out))["order"], 3);
    std::filesystem::remove(out);
}
