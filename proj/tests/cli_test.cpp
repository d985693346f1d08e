#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace {

struct Result {
    int code = -1;
    std::string out;
};

Result run(const std::string& args) {
    const std::string cmd = std::string(SUSPSPLIT_CLI) + " " + args + " 2>&1";
    Result r;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return r;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
    const int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string data(const std::string& name) { return std::string(SUSPSPLIT_DATA) + "/" + name; }

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::filesystem::path temp(const std::string& name) { return std::filesystem::temp_directory_path() / ("suspsplit_cli_" + name); }

} // namespace

TEST(Cli, SplittingOnS3) {
    auto r = run("verify-splitting --group " + data("s3.csv") + " --max-level 3 --max-dim 1");
    ASSERT_EQ(r.code, 0) << r.out;
    auto j = nlohmann::json::parse(r.out);
    EXPECT_TRUE(j["ok"].get<bool>());
    ASSERT_EQ(j["results"].size(), 4u);
    EXPECT_NE(j["results"][3].dump().find("47"), std::string::npos);
}

TEST(Cli, HomologyOfProjectivePlane) {
    auto r = run("homology --complex " + data("rp2.sc") + " --max-dim 3");
    ASSERT_EQ(r.code, 0) << r.out;
    EXPECT_NE(r.out.find("Z/2"), std::string::npos);
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["results"][0]["reduced"]["degrees"][1]["group"], "Z/2");
}

TEST(Cli, EveryCommandRunsOnBuiltins) {
    for (const std::string cmd : {"validate", "filtration", "verify-splitting", "verify-realization", "verify-corollary", "segal-e1", "triangularity"}) {
        auto r = run(cmd + " --builtin hom-Z2 --max-level 3 --max-dim 2");
        EXPECT_EQ(r.code, 0) << cmd << "\n" << r.out;
    }
    EXPECT_EQ(run("segal-e1 --cech-circle --max-level 2 --max-dim 2").code, 0);
    EXPECT_EQ(run("validate --group " + data("s3.csv") + " --rep --max-level 3").code, 0);
}

TEST(Cli, InputErrors) {
    auto missing = run("homology --complex /nonexistent/file.sc");
    EXPECT_EQ(missing.code, 1);
    EXPECT_NE(missing.out.find("/nonexistent/file.sc"), std::string::npos);

    auto bad = temp("bad.csv");
    {
        std::ofstream f(bad);
        f << "order,2\n0,1\n1,zz\n";
    }
    auto r = run("verify-splitting --group " + bad.string());
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.out.find(bad.string() + ":3"), std::string::npos) << r.out;
    std::filesystem::remove(bad);

    EXPECT_EQ(run("verify-splitting").code, 1);
    EXPECT_EQ(run("verify-splitting --builtin nope").code, 1);
    EXPECT_EQ(run("verify-splitting --builtin hom-Z2 --cech-circle").code, 1);
    EXPECT_EQ(run("frobnicate").code, 1);
}

TEST(Cli, JsonOutputIsDeterministic) {
    auto a = temp("a.json"), b = temp("b.json");
    auto ra = run("verify-splitting --group " + data("q8.csv") + " --max-level 3 --json " + a.string());
    auto rb = run("verify-splitting --group " + data("q8.csv") + " --max-level 3 --json " + b.string());
    ASSERT_EQ(ra.code, 0) << ra.out;
    ASSERT_EQ(rb.code, 0);
    EXPECT_NE(ra.out.find("pass"), std::string::npos);
    const auto ta = slurp(a), tb = slurp(b);
    EXPECT_FALSE(ta.empty());
    EXPECT_EQ(ta, tb);
    std::filesystem::remove(a);
    std::filesystem::remove(b);
}
