#include "qsum/cli/app.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using namespace qsum::cli;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "qsum");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string golden(const std::string& name) {
    const char* dir = std::getenv("QSUM_GOLDEN_DIR");
    std::ifstream in(std::string(dir ? dir : "tests/golden") + "/" + name);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

nlohmann::json parse(const std::string& s) { return nlohmann::json::parse(s); }

const std::vector<std::string> kThm11 = {"--n", "0", "--b", "2*q", "--c", "3*q", "--d", "5*q"};

std::vector<std::string> cat(std::vector<std::string> a, const std::vector<std::string>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

}  // namespace

TEST(CliVerify, TrivialExactInstance) {
    const auto r = invoke(cat({"verify", "--id", "thm1.1", "--mode", "exact"}, kThm11));
    EXPECT_EQ(r.code, kPass);
    EXPECT_EQ(parse(r.out)["status"], "Equal");
}

TEST(CliVerify, NumericThreePsiThree) {
    const auto r = invoke({"verify", "--id", "thm1.3", "--b", "2", "--c", "3", "--d", "5", "--q", "0.25", "--digits", "60"});
    EXPECT_EQ(r.code, kPass);
    const auto j = parse(r.out);
    EXPECT_EQ(j["status"], "WithinTolerance");
    EXPECT_LE(std::stod(j["diff"].get<std::string>()), 1e-40);
}

TEST(CliVerify, PoleNamesTheParameter) {
    const auto r = invoke({"verify", "--id", "thm1.1", "--n", "1", "--b", "1*q", "--c", "3*q", "--d", "5*q", "--mode", "exact"});
    EXPECT_EQ(r.code, kPoleOrDomain);
    const auto j = parse(r.out);
    EXPECT_EQ(j["status"], "Pole");
    EXPECT_NE(j["detail"].get<std::string>().find("q/b = 1"), std::string::npos);
}

TEST(CliVerify, InjectedFaultMismatches) {
    const auto r = invoke(cat({"verify", "--id", "thm1.1", "--inject-fault", "thm1.1"}, kThm11));
    EXPECT_EQ(r.code, kMismatch);
    EXPECT_EQ(parse(r.out)["status"], "Mismatch");
}

TEST(CliVerify, UsageErrors) {
    EXPECT_EQ(invoke({}).code, kUsage);
    EXPECT_EQ(invoke({"frobnicate"}).code, kUsage);
    EXPECT_EQ(invoke({"verify", "--id", "thm9.9"}).code, kUsage);
    EXPECT_EQ(invoke({"verify", "--id", "thm1.3", "--b", "2", "--c", "3", "--d", "5", "--mode", "numeric"}).code, kUsage);
    EXPECT_EQ(invoke({"verify", "--id", "thm1.1", "--n", "0", "--b", "2*q", "--c", "3*q"}).code, kUsage);
    EXPECT_EQ(invoke({"verify", "--id", "thm1.1", "--n", "0", "--b", "2*x", "--c", "3*q", "--d", "q"}).code, kUsage);
    EXPECT_EQ(invoke(cat({"verify", "--id", "thm1.1", "--digits", "10"}, kThm11)).code, kUsage);
    EXPECT_EQ(invoke({"verify", "--id", "thm1.3", "--b", "2", "--c", "3", "--d", "5", "--q", "0.25", "--tol", "1e-60"}).code,
              kUsage);
    EXPECT_EQ(invoke(cat({"verify", "--id", "thm1.1", "--output", "csv"}, kThm11)).code, kUsage);
    const auto r = invoke({"verify", "--id", "thm9.9"});
    EXPECT_FALSE(r.err.empty());
    EXPECT_TRUE(r.out.empty());
}

TEST(CliVerify, NonTerminatingInExactModeIsADomainError) {
    EXPECT_EQ(invoke({"verify", "--id", "thm1.3", "--b", "2", "--c", "3", "--d", "5"}).code, kPoleOrDomain);
}

TEST(CliVerify, BaseAboveLimitIsRefused) {
    const auto r = invoke({"verify", "--id", "thm1.3", "--b", "2", "--c", "3", "--d", "5", "--q", "0.95"});
    EXPECT_EQ(r.code, kPoleOrDomain);
}

TEST(CliVerify, DigitsFromEnvironment) {
    ::setenv("QSUM_DIGITS", "30", 1);
    const auto r = invoke({"verify", "--id", "thm1.3", "--b", "2", "--c", "3", "--d", "5", "--q", "0.25", "--tol", "1e-15"});
    ::unsetenv("QSUM_DIGITS");
    EXPECT_EQ(r.code, kPass);
    // 30 significant digits in the printed mantissa
    const std::string lhs = parse(r.out)["lhs_value"];
    EXPECT_EQ(lhs.find('e'), 31u);
}

TEST(CliVerify, TextOutput) {
    const auto r = invoke(cat({"verify", "--id", "thm1.1", "--output", "text"}, kThm11));
    EXPECT_EQ(r.code, kPass);
    EXPECT_EQ(r.out.rfind("thm1.1 [exact] Equal", 0), 0u);
}

TEST(CliSweep, DeterministicAndSummarized) {
    const std::vector<std::string> args = {"sweep", "--id", "thm1.5", "--count", "12", "--seed", "5"};
    const auto a = invoke(args), b = invoke(args);
    EXPECT_EQ(a.code, kPass);
    EXPECT_EQ(a.out, b.out);
    const auto j = parse(a.out);
    EXPECT_EQ(j["reports"].size(), 12u);
    EXPECT_EQ(j["summary"]["passed"], 12);
    EXPECT_EQ(j["summary"]["n_parity"]["even"].get<int>() + j["summary"]["n_parity"]["odd"].get<int>(), 12);
}

TEST(CliSweep, ParallelismDoesNotChangeOutput) {
    const std::vector<std::string> args = {"sweep", "--id", "thm1.2", "--count", "6", "--seed", "2"};
    EXPECT_EQ(invoke(cat(args, {"--parallelism", "1"})).out, invoke(cat(args, {"--parallelism", "3"})).out);
}

TEST(CliSweep, FailureExitsTwo) {
    const auto r = invoke({"sweep", "--id", "thm1.6", "--count", "3", "--seed", "1", "--inject-fault", "thm1.6"});
    EXPECT_EQ(r.code, kMismatch);
    EXPECT_EQ(parse(r.out)["summary"]["failed"], 3);
}

TEST(CliSweep, TextSummaryLine) {
    const auto r = invoke({"sweep", "--id", "thm1.5", "--count", "3", "--seed", "1", "--output", "text"});
    EXPECT_NE(r.out.find("summary: 3 passed, 0 failed (n even: "), std::string::npos);
}

TEST(CliLimit, Examples) {
    const std::vector<std::string> base = {"limit", "--pair", "A", "--q", "0.5", "--b", "2", "--c", "3", "--d", "5"};
    const auto r = invoke(cat(base, {"--grid", "5,10,20,40"}));
    EXPECT_EQ(r.code, kPass);
    EXPECT_EQ(parse(r.out)["rows"].size(), 4u);
    const auto single = invoke(cat(base, {"--grid", "5"}));
    EXPECT_EQ(single.code, kPass);
    EXPECT_FALSE(parse(single.out)["convergence_asserted"].get<bool>());
    const auto csv = invoke(cat(base, {"--grid", "5,10", "--output", "csv"}));
    EXPECT_EQ(csv.out.rfind("n,finite_rhs,limit_rhs,diff\n5,", 0), 0u);
}

TEST(CliLimit, WarnsNearTheUnitCircle) {
    const auto r = invoke({"limit", "--pair", "A", "--q", "0.9", "--b", "2", "--c", "3", "--d", "5", "--grid", "5"});
    EXPECT_EQ(r.code, kPass);
    EXPECT_EQ(r.err.rfind("warning: |q| = 0.900", 0), 0u);
    EXPECT_EQ(invoke({"limit", "--pair", "A", "--q", "0.5", "--b", "2", "--c", "3", "--d", "5", "--grid", "5"}).err, "");
}

TEST(CliIsmail, Examples) {
    for (const char* id : {"thm1.3", "thm1.4"}) {
        const auto r = invoke({"ismail", "--id", id, "--q", "1/3", "--b", "2", "--c", "3", "--m-max", "15"});
        EXPECT_EQ(r.code, kPass) << id;
        const auto j = parse(r.out);
        ASSERT_EQ(j["rows"].size(), 15u);
        for (const auto& row : j["rows"]) EXPECT_TRUE(row["radius_ok"].get<bool>());
    }
    const auto small = invoke({"ismail", "--id", "thm1.3", "--q", "1/3", "--b", "0.1", "--c", "0.1", "--m-max", "3"});
    const auto j = parse(small.out);
    ASSERT_EQ(j["rows"].size(), 3u);
    for (const auto& row : j["rows"]) EXPECT_FALSE(row["radius_ok"].get<bool>());
    EXPECT_EQ(invoke({"ismail", "--id", "thm1.1", "--q", "1/3", "--b", "2", "--c", "3"}).code, kUsage);
}

TEST(CliSelftest, LowDigitsSkipsInfiniteSuites) {
    const auto r = invoke({"selftest", "--digits", "15"});
    EXPECT_EQ(r.code, kPass);
    const auto j = parse(r.out);
    int skipped = 0;
    for (const auto& s : j["suites"]) {
        if (s["status"] == "skipped") ++skipped;
        if (std::string(s["name"]).rfind("shift", 0) == 0 || s["name"] == "negative_index" || s["name"] == "ratio_shift")
            EXPECT_EQ(s["status"], "pass");
    }
    EXPECT_EQ(skipped, 3);
}

TEST(CliSelftest, CorruptedCatalogNamesTheIdentity) {
    const auto r = invoke({"selftest", "--digits", "15", "--inject-fault", "thm1.7"});
    EXPECT_NE(r.code, kPass);
    EXPECT_NE(r.out.find("thm1.7 seed 1 instance"), std::string::npos);
}

struct GoldenCase {
    const char* file;
    std::vector<std::string> args;
};

class Golden : public ::testing::TestWithParam<GoldenCase> {};

TEST_P(Golden, ByteStable) {
    const auto& g = GetParam();
    const auto a = invoke(g.args), b = invoke(g.args);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.out, golden(g.file)) << "regenerate with: qsum " << ::testing::PrintToString(g.args);
}

INSTANTIATE_TEST_SUITE_P(
    Commands, Golden,
    ::testing::Values(
        GoldenCase{"verify_thm1.1.json", {"verify", "--id", "thm1.1", "--n", "2", "--b", "2*q", "--c", "3*q", "--d", "5*q"}},
        GoldenCase{"verify_thm1.3.json",
                   {"verify", "--id", "thm1.3", "--b", "2", "--c", "3", "--d", "5", "--q", "0.25", "--digits", "60"}},
        GoldenCase{"sweep_thm1.5.json", {"sweep", "--id", "thm1.5", "--count", "4", "--seed", "7"}},
        GoldenCase{"limit_A.json",
                   {"limit", "--pair", "A", "--q", "0.5", "--b", "2", "--c", "3", "--d", "5", "--grid", "5,10,20,40"}},
        GoldenCase{"ismail_thm1.4.json", {"ismail", "--id", "thm1.4", "--q", "1/3", "--b", "2", "--c", "3", "--m-max", "4"}},
        GoldenCase{"selftest.json", {"selftest", "--seed", "1"}}),
    [](const auto& info) {
        std::string s = info.param.file;
        for (char& c : s)
            if (!std::isalnum(static_cast<unsigned char>(c))) c = '_';
        return s;
    });
