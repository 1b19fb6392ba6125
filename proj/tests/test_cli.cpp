#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "diam_ramsey/checker.hpp"
#include "diam_ramsey/coloring.hpp"
#include "report.hpp"

using namespace diam_ramsey;
using nlohmann::json;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args) {
    args.insert(args.begin(), "diam_ramsey");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args) {
    const auto o = run(std::move(args));
    EXPECT_EQ(o.code, cli::kOk) << o.err;
    return json::parse(o.out);
}

}  // namespace

TEST(Cli, ComputePrintsValue) {
    const auto o = run({"compute", "--sizes", "2,2,2", "--colors", "2"});
    EXPECT_EQ(o.code, cli::kOk);
    EXPECT_NE(o.out.find("f=12"), std::string::npos);
}

TEST(Cli, ConstructPrintsPublishedString) {
    const auto o = run({"construct", "--m", "5"});
    EXPECT_EQ(o.code, cli::kOk);
    EXPECT_EQ(o.out, "01^40^41^40^81^40^21^70^3\n");
}

TEST(Cli, WitnessOfMonochromaticString) {
    const auto o = run({"witness", "--string", "0^12", "--sizes", "2,2,2", "--colors", "2"});
    EXPECT_EQ(o.code, cli::kOk);
    EXPECT_EQ(o.out, "{1,2},{3,4},{5,6}\n");
    EXPECT_EQ(run({"witness", "--string", "10101101110", "--sizes", "2,2,2", "--colors", "2"}).out, "none\n");
}

TEST(Cli, VerifyFromStringAndFile) {
    auto o = run({"verify", "--string", "10101101110", "--sizes", "2,2,2", "--colors", "2"});
    EXPECT_EQ(o.code, cli::kOk);
    EXPECT_NE(o.out.find("avoids"), std::string::npos);

    const std::string path = ::testing::TempDir() + "cli_verify_input.txt";
    {
        std::ofstream f(path);
        f << "0^12\n";
    }
    o = run({"verify", "--file", path, "--sizes", "2,2,2", "--colors", "2"});
    EXPECT_EQ(o.code, cli::kOk);
    EXPECT_NE(o.out.find("contains a solution {1,2},{3,4},{5,6}"), std::string::npos);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run({}).code, cli::kUsage);
    EXPECT_EQ(run({"bogus"}).code, cli::kUsage);
    EXPECT_EQ(run({"compute", "--colors", "2"}).code, cli::kUsage);
    EXPECT_EQ(run({"compute", "--sizes", "2,x", "--colors", "2"}).code, cli::kUsage);
    EXPECT_EQ(run({"compute", "--sizes", "2,3", "--colors", "2"}).code, cli::kUsage);
    EXPECT_EQ(run({"compute", "--sizes", "2,2,2", "--colors", "2", "--cap", "9"}).code, cli::kInconclusive);
    EXPECT_EQ(run({"verify", "--sizes", "2,2", "--colors", "2"}).code, cli::kUsage);
    EXPECT_EQ(run({"verify", "--string", "0^2 3", "--sizes", "2,2", "--colors", "2"}).code, cli::kUsage);
    EXPECT_EQ(run({"construct", "--m", "1"}).code, cli::kUsage);
    EXPECT_EQ(run({"check-lemma", "--which", "2.3", "--m", "3", "--exhaustive"}).code, cli::kUsage);
    EXPECT_EQ(run({"check-lemma", "--which", "2.1", "--m", "2", "--string", "10101"}).code, cli::kUsage);
    EXPECT_EQ(run({"check-lemma", "--which", "2.1", "--m", "3", "--exhaustive"}).code, cli::kOk);
    EXPECT_EQ(run({"check-lemma", "--which", "2.2", "--m", "2", "--string", "0011"}).code, cli::kOk);
    EXPECT_EQ(run({"table", "--family", "mmm2", "--m-max", "3"}).code, cli::kOk);
    EXPECT_EQ(run({"compute", "--help"}).code, cli::kOk);
}

TEST(Cli, ComputeJsonRoundTrips) {
    const json j = run_json({"compute", "--sizes", "2,2,2", "--colors", "2", "--certificates", "all", "--json"});
    for (const char* key : {"command", "spec", "result", "stats", "version"}) EXPECT_TRUE(j.contains(key)) << key;
    EXPECT_EQ(j["command"], "compute");
    EXPECT_EQ(j["version"], std::string(report::kVersion));
    const ProblemSpec spec = report::spec_from_json(j["spec"]);
    EXPECT_EQ(spec, ProblemSpec({2, 2, 2}, 2));
    EXPECT_EQ(j["result"]["f_value"], 12);
    EXPECT_FALSE(j["result"]["inconclusive"].get<bool>());
    ASSERT_FALSE(j["result"]["certificates"].empty());
    for (const auto& s : j["result"]["certificates"]) {
        const Coloring c = parse_run_string(s.get<std::string>(), 2);
        EXPECT_EQ(c.length(), 11);
        EXPECT_FALSE(exists_solution(c, spec));
    }
    EXPECT_EQ(json::parse(j.dump()), j);
}

TEST(Cli, WitnessJsonRoundTrips) {
    const json j = run_json({"witness", "--string", "0^3 1^4 0^6", "--sizes", "2,3,2", "--colors", "2", "--json"});
    const ProblemSpec spec = report::spec_from_json(j["spec"]);
    const Witness w = report::witness_from_json(j["result"]);
    const Coloring c = parse_run_string("0^3 1^4 0^6", 2);
    EXPECT_EQ(exists_solution(c, spec), w);
    EXPECT_TRUE(is_valid_witness(c, spec, w));
    EXPECT_EQ(report::to_json(w), j["result"]);
}

TEST(Cli, VerifyAndLemmaJsonParse) {
    json j = run_json({"verify", "--string", "0^12", "--sizes", "2,2,2", "--colors", "2", "--json"});
    EXPECT_FALSE(j["result"]["avoids"].get<bool>());
    EXPECT_EQ(report::witness_from_json(j["result"]["witness"]).chain.size(), 3U);

    j = run_json({"check-lemma", "--which", "2.2", "--m", "3", "--exhaustive", "--json"});
    EXPECT_EQ(j["result"]["violations"], 0);
    EXPECT_EQ(j["result"]["instances"], 128);

    j = run_json({"construct", "--m", "3", "--json"});
    EXPECT_EQ(j["result"]["length"], 19);
    EXPECT_EQ(report::spec_from_json(j["spec"]), ProblemSpec({3, 3, 3}, 2));
}

TEST(Cli, SpecFromJsonRejectsBadRecords) {
    EXPECT_THROW((void)report::spec_from_json(json{{"sizes", {1, 2}}, {"colors", 2}, {"strict", false}}),
                 std::invalid_argument);
    EXPECT_THROW((void)report::spec_from_json(json::array()), std::invalid_argument);
}

TEST(Cli, WorkerCountOnlyChangesStats) {
    std::vector<std::string> base{"compute", "--sizes", "3,3,3", "--colors", "2", "--certificates", "all", "--json"};
    auto one = base;
    one.insert(one.end(), {"--workers", "1"});
    auto four = base;
    four.insert(four.end(), {"--workers", "4"});
    json a = run_json(one);
    json b = run_json(four);
    EXPECT_EQ(b["stats"]["worker_count"], 4);
    a.erase("stats");
    b.erase("stats");
    EXPECT_EQ(a.dump(2), b.dump(2));
}

TEST(Cli, WorkerEnvironmentDefault) {
    ::setenv("DIAM_RAMSEY_WORKERS", "3", 1);
    json j = run_json({"compute", "--sizes", "3,3,3", "--colors", "2", "--json"});
    EXPECT_EQ(j["stats"]["worker_count"], 3);
    j = run_json({"compute", "--sizes", "3,3,3", "--colors", "2", "--workers", "2", "--json"});
    EXPECT_EQ(j["stats"]["worker_count"], 2);
    ::unsetenv("DIAM_RAMSEY_WORKERS");
}

TEST(Cli, TableJsonListsRows) {
    const json j = run_json({"table", "--family", "mm2", "--m-max", "3", "--json"});
    ASSERT_TRUE(j["result"].contains("rows"));
    EXPECT_EQ(j["result"]["rows"].size(), 2U);
}
