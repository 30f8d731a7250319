#include <nlohmann/json.hpp>

#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

namespace {

struct Result {
    int code = -1;
    std::string out, err;
};

std::string slurp(const std::string& path)
{
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Result cli(const std::string& args, const std::string& env = {})
{
    auto dir = std::filesystem::temp_directory_path();
    std::string errf = (dir / ("hurwitz_cli_err_" + std::to_string(::getpid()))).string();
    std::string cmd = env + (env.empty() ? "" : " ") + HURWITZ_CLI + std::string(" ") + args + " 2>" + errf;
    Result r;
    FILE* p = ::popen(cmd.c_str(), "r");
    if (!p) return r;
    char buf[4096];
    std::size_t n;
    while ((n = std::fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
    int status = ::pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.err = slurp(errf);
    std::filesystem::remove(errf);
    return r;
}

using ojson = nlohmann::ordered_json;

} // namespace

TEST(Cli, UsageErrors)
{
    EXPECT_EQ(cli("").code, 2);
    EXPECT_EQ(cli("frobnicate").code, 2);
    EXPECT_EQ(cli("relations --degree 6").code, 2);
    EXPECT_EQ(cli("relations --degree 4 --bogus").code, 2);
    EXPECT_EQ(cli("relations --degree 4 --format xml").code, 2);
    EXPECT_EQ(cli("relations --degree 4 --genus 1").code, 2);
    EXPECT_EQ(cli("relations --degree 4 --genus abc").code, 2);
    EXPECT_EQ(cli("relations --degree 4 --cut 3").code, 2);
    EXPECT_EQ(cli("relations --degree 4 --deep").code, 2);
    EXPECT_EQ(cli("chow3").code, 2);
    EXPECT_EQ(cli("classes --degree 3").code, 2);
    EXPECT_EQ(cli("verify --suite nope").code, 2);
    EXPECT_EQ(cli("verify --genus 4").code, 2);
    auto r = cli("chow3");
    EXPECT_NE(r.err.find("usage error"), std::string::npos);
}

TEST(Cli, RelationsDegree4)
{
    auto r = cli("relations --degree 4 --format json");
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = ojson::parse(r.out);
    const auto& s = j["sections"][0];
    EXPECT_EQ(s["data"]["count"], 18);
    EXPECT_EQ(s["data"]["generators"].size(), 18u);
    EXPECT_EQ(s["data"]["generators"][0]["class"], "(8g+20)*a1 - 8*a2' - b2'");
}

TEST(Cli, JsonRoundTripIsByteIdentical)
{
    for (const char* args : {"relations --degree 3", "dims --degree 4 --max-codim 6", "chow3 --genus 6"}) {
        auto r = cli(args);
        ASSERT_EQ(r.code, 0) << args << "\n" << r.err;
        EXPECT_EQ(ojson::parse(r.out).dump(2) + "\n", r.out) << args;
    }
}

TEST(Cli, Chow3)
{
    auto r = cli("chow3 --genus 2");
    ASSERT_EQ(r.code, 0);
    auto d = ojson::parse(r.out)["sections"][0]["data"];
    EXPECT_EQ(d["presentation"], "Q");
    EXPECT_EQ(d["dims"][1], 0);
    r = cli("chow3 --genus 7 --format md");
    ASSERT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("Q[a1]/(a1^3)"), std::string::npos);
}

TEST(Cli, MarkdownTypesetsClasses)
{
    auto r = cli("relations --degree 3 --format md");
    ASSERT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("(8g+12)\xC2\xB7" "a1 \xE2\x88\x92 9\xC2\xB7" "a2\xE2\x80\xB2"), std::string::npos);
    EXPECT_NE(r.out.find("| check |"), std::string::npos);
}

TEST(Cli, VerifyIsDeterministicAcrossThreads)
{
    auto a = cli("verify --suite deg3 --threads 1 --quiet");
    auto b = cli("verify --suite deg3 --threads 3 --quiet");
    ASSERT_EQ(a.code, 0) << a.err;
    ASSERT_EQ(b.code, 0) << b.err;
    EXPECT_EQ(a.out, b.out);
    auto c = cli("verify --suite deg4 --threads 2");
    EXPECT_EQ(c.code, 0) << c.err;
}

TEST(Cli, MismatchExitsOne)
{
    auto path = std::filesystem::temp_directory_path() / ("hurwitz_golden_" + std::to_string(::getpid()) + ".json");
    auto j = ojson::parse(slurp(HURWITZ_DATA_DIR "/golden.json"));
    j["deg3"]["generator.0.0"] = "(8g+13)a1 - 9a2'";
    std::ofstream(path) << j.dump(2);
    auto r = cli("verify --suite deg3", "HURWITZ_GOLDEN=" + path.string());
    std::filesystem::remove(path);
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("mismatch: deg3.generator.0.0"), std::string::npos) << r.err;
    EXPECT_NE(r.err.find("(8g+12)*a1 - 9*a2'"), std::string::npos);
}
