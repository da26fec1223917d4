// Runs the hookwalk binary and checks its output and exit codes.

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <regex>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args, bool with_stderr = false)
{
    const std::string cmd = std::string(HOOKWALK_CLI) + " " + args + (with_stderr ? " 2>&1" : " 2>/dev/null");
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

bool contains(const std::string& haystack, const std::string& needle) { return haystack.find(needle) != std::string::npos; }

std::string strip_wall_time(const std::string& s) { return std::regex_replace(s, std::regex("\"wall_seconds\": [0-9.e+-]+"), ""); }

} // namespace

TEST(Cli, DecomposeRunningExample)
{
    const auto r = run("decompose 18,7,6 --t 3");
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(contains(r.out, "\"core\": \"3,1\"")) << r.out;
    EXPECT_TRUE(contains(r.out, "\"quotients\": [\n    \"2\",\n    \"-\",\n    \"5,2\"\n  ]")) << r.out;
    EXPECT_TRUE(contains(r.out, "\"holds\": true"));
}

TEST(Cli, DecomposeEmptyAndOffsets)
{
    const auto e = run("decompose - --t 5 --format tsv");
    EXPECT_EQ(e.code, 0);
    EXPECT_TRUE(contains(e.out, "core\t-\n"));
    for (int i = 0; i < 5; ++i) EXPECT_TRUE(contains(e.out, "quotient " + std::to_string(i) + "\t-\n"));
    const auto c = run("decompose 5,3,1,1 --t 3 --format tsv");
    EXPECT_TRUE(contains(c.out, "b\t0,7,-4\n")) << c.out;
    EXPECT_TRUE(contains(c.out, "d\t0,2,-2\n")) << c.out;
}

TEST(Cli, AverageTable)
{
    const auto r = run("average --core - --t 2 --n 0..3 --stat hook:j=0,pow=2,G");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "n\thook:j=0,pow=2,G\n0\t0\n1\t4\n2\t14\n3\t30\n");
    const auto c = run("average --core - --t 2 --n 1 --stat content:j=1,pow=2,G");
    EXPECT_EQ(c.out, "n\tcontent:j=1,pow=2,G\n1\t1\n");
    const auto at_core = run("average --core 5,3,1,1 --t 3 --n 0 --stat hook:t=1,pow=2");
    EXPECT_EQ(at_core.out, "n\thook:t=1,pow=2\n0\t145\n");
}

TEST(Cli, AverageExactRationalsAndWorkers)
{
    const auto one = run("average --core 3,1 --t 3 --n 0..3 --stat content:j=1,pow=3 --weight-g --workers 1");
    const auto four = run("average --core 3,1 --t 3 --n 0..3 --stat content:j=1,pow=3 --weight-g --workers 4");
    EXPECT_EQ(one.code, 0);
    EXPECT_EQ(one.out, four.out);
    const auto frac = run("average --core - --t 2 --n 1 --stat hook:t=1,pow=2");
    EXPECT_EQ(frac.out, "n\thook:t=1,pow=2\n1\t10\n");
    const auto json = run("average --core - --t 2 --n 0..1 --stat hook:j=0,pow=2,G --format json");
    EXPECT_TRUE(contains(json.out, "\"hook:j=0,pow=2,G\": \"4\"")) << json.out;
}

TEST(Cli, NonCoreIsUsageError)
{
    const auto r = run("average --core 2 --t 2 --n 0..1 --stat hook:j=0,pow=2", true);
    EXPECT_EQ(r.code, 2);
    EXPECT_TRUE(contains(r.out, "hook 2")) << r.out;
}

TEST(Cli, UsageErrors)
{
    EXPECT_EQ(run("decompose 1,2 --t 2").code, 2);
    EXPECT_EQ(run("decompose 3,1").code, 2);
    EXPECT_EQ(run("decompose 3,1 --t 0").code, 2);
    EXPECT_EQ(run("verify nonsense").code, 2);
    EXPECT_EQ(run("average --t 2 --n 0..2 --stat hook:pow=2,bogus").code, 2);
    EXPECT_EQ(run("average --t 2 --n 3..1 --stat hook:pow=2").code, 2);
    EXPECT_EQ(run("").code, 2);
    EXPECT_EQ(run("frobnicate").code, 2);
    EXPECT_EQ(run("--help").code, 0);
}

TEST(Cli, StatCommand)
{
    const auto r = run("stat 2 --t 2 --stat hook:j=0,pow=2,paired --stat content:j=1,pow=2 --stat hook:j=0,pow=2,G");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "hook:j=0,pow=2,paired\t8\ncontent:j=1,pow=2\t1\nhook:j=0,pow=2,G\t2\n");
}

TEST(Cli, Certify)
{
    const auto r = run("certify --t 3 --stat hook:j=1,pow=2,paired --stat content:j=0,pow=2 --weight-g --degree 4");
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(contains(r.out, "\"verdict\": \"certified\"")) << r.out;
    EXPECT_TRUE(contains(r.out, "\"degree\": 4"));
    EXPECT_TRUE(contains(r.out, "\"vanishing_order\": 5"));
    const auto bad = run("certify --t 2 --stat hook:j=0,pow=2 --weight-g --degree 1");
    EXPECT_EQ(bad.code, 1);
    EXPECT_TRUE(contains(bad.out, "\"verdict\": \"refuted\""));
    EXPECT_TRUE(contains(bad.out, "\"witness\": 0"));
}

TEST(Cli, VerifyReportIsDeterministic)
{
    const auto a = run("verify bijection --max-size 9 --t 1..3");
    const auto b = run("verify bijection --max-size 9 --t 1..3 --workers 3");
    EXPECT_EQ(a.code, 0);
    EXPECT_TRUE(contains(a.out, "\"failures\": 0"));
    EXPECT_TRUE(contains(a.out, "\"first_failure\": null"));
    EXPECT_EQ(strip_wall_time(a.out), strip_wall_time(b.out));
    const auto tsv = run("verify averages --t 2 --n 0..2 --format tsv");
    EXPECT_EQ(tsv.code, 0);
    EXPECT_TRUE(contains(tsv.out, "failures\t0\n")) << tsv.out;
}
