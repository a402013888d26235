#include "wheeldist/cli.hpp"
#include "wheeldist/report.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <algorithm>
#include <filesystem>
#include <map>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using namespace wheeldist;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args)
{
    args.insert(args.begin(), "wheeldist");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

nlohmann::json without_header(nlohmann::json j)
{
    j.erase("header");
    return j;
}

}  // namespace

TEST(CliGen, DistanceCsvForW6)
{
    const Result r = run({"gen", "--n", "6", "--what", "distance", "--format", "csv"});
    EXPECT_EQ(r.code, kExitPass);
    EXPECT_EQ(r.out, "0,1,1,1,1,1\n1,0,1,2,2,1\n1,1,0,1,2,2\n1,2,1,0,1,2\n1,2,2,1,0,1\n1,1,2,2,1,0\n");
}

TEST(CliGen, InverseDenominatorsDivideTen)
{
    const Result r = run({"gen", "--n", "6", "--what", "inverse"});
    ASSERT_EQ(r.code, kExitPass);
    const Matrix m = matrix_from_json(nlohmann::json::parse(r.out));
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) EXPECT_EQ(10 % m(i, j).denominator(), 0);
    EXPECT_EQ(m(0, 0), BigRational(-6, 5));
}

TEST(CliGen, LaplacianAndPseudoinverse)
{
    const Result l = run({"gen", "--n", "4", "--what", "laplacian", "--format", "csv"});
    EXPECT_EQ(l.out, "3/2,-1/2,-1/2,-1/2\n-1/2,3/2,-1/2,-1/2\n-1/2,-1/2,3/2,-1/2\n-1/2,-1/2,-1/2,3/2\n");
    const Result p = run({"gen", "--n", "4", "--what", "pseudoinverse", "--format", "csv"});
    EXPECT_EQ(p.out, "3/8,-1/8,-1/8,-1/8\n-1/8,3/8,-1/8,-1/8\n-1/8,-1/8,3/8,-1/8\n-1/8,-1/8,-1/8,3/8\n");
}

TEST(CliGen, UsageErrors)
{
    const Result odd = run({"gen", "--n", "5", "--what", "laplacian"});
    EXPECT_EQ(odd.code, kExitUsage);
    EXPECT_NE(odd.err.find("even n required"), std::string::npos);
    EXPECT_EQ(run({"gen", "--n", "3"}).code, kExitUsage);
    EXPECT_EQ(run({"gen", "--n", "6", "--what", "nonsense"}).code, kExitUsage);
    EXPECT_EQ(run({"gen"}).code, kExitUsage);
    EXPECT_EQ(run({}).code, kExitUsage);
    EXPECT_EQ(run({"gen", "--n", "7", "--what", "distance"}).code, kExitPass);
}

TEST(CliGen, DeterministicBytes)
{
    const auto a = run({"gen", "--n", "12", "--what", "inverse"});
    const auto b = run({"gen", "--n", "12", "--what", "inverse"});
    EXPECT_EQ(a.out, b.out);
}

TEST(CliVerify, SingleEvenN)
{
    const Result r = run({"verify", "--n", "6"});
    ASSERT_EQ(r.code, kExitPass) << r.out;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_GE(j["checks"].size(), 10u);
    EXPECT_EQ(j["summary"]["failed"], 0);
    EXPECT_EQ(j["summary"]["passed"].get<std::size_t>() + j["summary"]["not_applicable"].get<std::size_t>(),
              j["checks"].size());
    for (const auto& c : j["checks"]) EXPECT_TRUE(c["passed"]) << c.dump();
}

TEST(CliVerify, OddNMarksInverseChecksNotApplicable)
{
    const Result r = run({"verify", "--n", "7"});
    ASSERT_EQ(r.code, kExitPass);
    const auto j = nlohmann::json::parse(r.out);
    std::map<std::string, std::string> status;
    for (const auto& c : j["checks"]) status[c["name"]] = c["status"];
    EXPECT_EQ(status["determinant_formula"], "pass");
    EXPECT_EQ(status["odd_singular"], "pass");
    EXPECT_EQ(status["d_inertia"], "pass");
    EXPECT_EQ(status["inverse_formula"], "not-applicable");
    EXPECT_EQ(status["ld_identity"], "not-applicable");
}

TEST(CliVerify, RangeIsSortedAndDeterministic)
{
    const Result a = run({"verify", "--n-min", "4", "--n-max", "9", "--threads", "3"});
    const Result b = run({"verify", "--n-min", "4", "--n-max", "9"});
    ASSERT_EQ(a.code, kExitPass);
    const auto ja = nlohmann::json::parse(a.out), jb = nlohmann::json::parse(b.out);
    EXPECT_EQ(without_header(ja).dump(), without_header(jb).dump());
    std::size_t prev_n = 0;
    std::string prev_name;
    for (const auto& c : ja["checks"]) {
        const std::size_t n = c["n"];
        const std::string name = c["name"];
        EXPECT_TRUE(n > prev_n || (n == prev_n && name > prev_name));
        prev_n = n;
        prev_name = name;
    }
    EXPECT_EQ(ja["header"]["timing_ms"].size(), ja["checks"].size());
}

TEST(CliVerify, CsvOutput)
{
    const Result r = run({"verify", "--n", "4", "--format", "csv"});
    ASSERT_EQ(r.code, kExitPass);
    EXPECT_EQ(r.out.rfind("n,name,status,witness\n", 0), 0u);
    EXPECT_NE(r.out.find("4,q_rows,not-applicable,\"{\"\"reason\"\""), std::string::npos);
}

TEST(CliVerify, UsageErrors)
{
    EXPECT_EQ(run({"verify"}).code, kExitUsage);
    EXPECT_EQ(run({"verify", "--n-min", "3", "--n-max", "8"}).code, kExitUsage);
    EXPECT_EQ(run({"verify", "--n-min", "10", "--n-max", "8"}).code, kExitUsage);
    EXPECT_EQ(run({"verify", "--n", "6", "--n-min", "4"}).code, kExitUsage);
}

TEST(CliVerify, OutputFile)
{
    const auto path = std::filesystem::temp_directory_path() / "wheeldist_cli_test_report.json";
    const Result r = run({"verify", "--n", "4", "--out", path.string()});
    EXPECT_EQ(r.code, kExitPass);
    EXPECT_TRUE(r.out.empty());
    std::ifstream in(path);
    EXPECT_EQ(nlohmann::json::parse(in)["summary"]["failed"], 0);
    std::filesystem::remove(path);
}

TEST(CliVerify, UnwritableOutputIsIoError)
{
    EXPECT_EQ(run({"verify", "--n", "4", "--out", "/nonexistent-dir/x/report.json"}).code, kExitIo);
}

TEST(CliSpectrum, W4)
{
    const Result r = run({"spectrum", "--n", "4"});
    ASSERT_EQ(r.code, kExitPass);
    const auto j = nlohmann::json::parse(r.out);
    const std::vector<double> mu = j["mu"], lambda = j["lambda"];
    const std::vector<double> mu_want{3, -1, -1, -1}, lambda_want{2, 2, 2, 0};
    for (std::size_t k = 0; k < 4; ++k) {
        EXPECT_NEAR(mu[k], mu_want[k], 1e-12);
        EXPECT_NEAR(lambda[k], lambda_want[k], 1e-12);
    }
}

TEST(CliSpectrum, W6ChainStrictlyOrdered)
{
    const auto j = nlohmann::json::parse(run({"spectrum", "--n", "6"}).out);
    const std::vector<double> mu = j["mu"], chain = j["chain"];
    EXPECT_LT(chain[0], 0.0);
    for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
        EXPECT_GE(chain[k], mu[k + 1] - 1e-12);
        EXPECT_GE(mu[k + 1], chain[k + 1] - 1e-12);
    }
}

TEST(CliSpectrum, UsageErrors)
{
    EXPECT_EQ(run({"spectrum", "--n", "3"}).code, kExitUsage);
    EXPECT_EQ(run({"spectrum", "--n", "7"}).code, kExitUsage);
}

TEST(CliSpectrum, Csv)
{
    const Result r = run({"spectrum", "--n", "4", "--format", "csv"});
    EXPECT_EQ(r.out.rfind("k,mu,lambda,chain\n", 0), 0u);
    EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 5);
}
