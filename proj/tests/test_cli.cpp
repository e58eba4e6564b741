#include "cli.hpp"

#include "wkit/errors.hpp"
#include "wkit/shuffle.hpp"
#include "wkit/welement.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <cstdlib>
#include <sstream>

using nlohmann::json;
using wkit::cli::kExitFailure;
using wkit::cli::kExitOk;
using wkit::cli::kExitUsage;

namespace {

struct Outcome {
    int status;
    std::string out;
    std::string err;
};

Outcome run(const std::vector<std::string>& args)
{
    std::ostringstream out;
    std::ostringstream err;
    int status = wkit::cli::run(args, out, err);
    return {status, out.str(), err.str()};
}

json run_json(std::vector<std::string> args, int expected_status = kExitOk)
{
    args.insert(args.begin(), "--json");
    Outcome o = run(args);
    EXPECT_EQ(o.status, expected_status) << o.err;
    return json::parse(o.out);
}

class ThreadsEnv {
public:
    explicit ThreadsEnv(const char* value) { ::setenv("WKIT_THREADS", value, 1); }
    ~ThreadsEnv() { ::unsetenv("WKIT_THREADS"); }
};

} // namespace

TEST(Cli, BracketExamples)
{
    Outcome graded = run({"bracket", "--kind", "graded", "z^2*D^3", "z^3*D^2"});
    EXPECT_EQ(graded.status, kExitOk);
    EXPECT_EQ(graded.out, "5*z^5*D^4\n");
    Outcome classical = run({"bracket", "z*D", "z*D"});
    EXPECT_EQ(classical.out, "0\n");
}

TEST(Cli, JsonEnvelope)
{
    json j = run_json({"bracket", "--kind", "graded", "z^2*D^3", "z^3*D^2"});
    EXPECT_EQ(j["schema"], 1);
    EXPECT_EQ(j["command"], "bracket");
    EXPECT_EQ(j["inputs"]["kind"], "graded");
    EXPECT_EQ(j["inputs"]["x"], "z^2*D^3");
    EXPECT_EQ(j["result"]["element"], "5*z^5*D^4");
}

TEST(Cli, PrintedElementsReparse)
{
    json j = run_json({"bracket", "--kind", "deformed", "z*(D^2 + t)", "z^2*D^3"});
    std::string printed = j["result"]["element"];
    auto x = wkit::parse_welement(printed);
    EXPECT_EQ(x.to_string(), printed);
    Outcome again = run({"bracket", "--kind", "graded", printed, "z*D"});
    EXPECT_EQ(again.status, kExitOk);
}

TEST(Cli, UsageErrors)
{
    EXPECT_EQ(run({}).status, kExitUsage);
    EXPECT_EQ(run({"frobnicate"}).status, kExitUsage);
    EXPECT_EQ(run({"bracket", "z*D"}).status, kExitUsage);
    EXPECT_EQ(run({"bracket", "--kind", "weird", "z", "z"}).status, kExitUsage);
    EXPECT_EQ(run({"bracket", "z*D +", "z"}).status, kExitUsage);
    EXPECT_EQ(run({"kac", "1-1", "--dim", "1", "--q", "7"}).status, kExitUsage);
    EXPECT_EQ(run({"nminus", "--type", "B3"}).status, kExitUsage);
    EXPECT_EQ(run({"char", "--which", "grW", "--wmax", "2", "--qmin", "0", "--qmax", "2", "--convention", "x"}).status,
              kExitUsage);
    EXPECT_EQ(run({"--help"}).status, kExitOk);
}

TEST(Cli, ComputationalFailures)
{
    Outcome big = run({"kac", "1-1,1-1,1-1", "--dim", "3", "--q", "5"});
    EXPECT_EQ(big.status, kExitFailure);
    EXPECT_NE(big.err.find("error"), std::string::npos);
    json j = run_json({"kac", "1-1,1-1,1-1", "--dim", "3", "--q", "5"}, kExitFailure);
    EXPECT_TRUE(j.contains("error"));
    EXPECT_EQ(j["command"], "kac");

    json bad = run_json({"shuffle", "x", "x", "--kernel", "(x+t1)/(x)(x)"}, kExitFailure);
    EXPECT_TRUE(bad.contains("error"));
    Outcome wrong = run({"yangian-check", "--model", "shuffle", "--bound", "1", "--kernel", "(x+t1)(x+t2)/(x)"});
    EXPECT_EQ(wrong.status, kExitFailure);
}

TEST(Cli, YangianCheck)
{
    json j = run_json({"yangian-check", "--model", "w", "--bound", "2"});
    EXPECT_EQ(j["result"]["all_pass"], true);
    EXPECT_EQ(j["result"]["sign_variant"], "plus");
    EXPECT_EQ(j["result"]["cells"].size(), 9u + 27u);
}

TEST(Cli, ShuffleProduct)
{
    Outcome o = run({"shuffle", "x", "x"});
    EXPECT_EQ(o.status, kExitOk);
    EXPECT_NE(o.out.find("@2"), std::string::npos);
    json j = run_json({"shuffle", "--op", "commutator", "x", "1@1"});
    EXPECT_EQ(j["result"]["degree"], 2);
    json jc = run_json({"shuffle", "1@1", "1@1"});
    auto product = wkit::parse_shuffle_element(jc["result"]["element"].get<std::string>(), 2);
    EXPECT_EQ(product, wkit::parse_shuffle_element("2*(x1 - x2)^2 - 2*(t1^2 + t1*t2 + t2^2)"));
}

TEST(Cli, KacAndNMinus)
{
    json k = run_json({"kac", "1-1,1-1", "--dim", "2", "--q", "2"});
    EXPECT_EQ(k["result"]["count"], 40);
    EXPECT_EQ(k["result"]["euler_form"], -4);
    json kr = run_json({"kac", "1->2,1->2", "--dim", "1,1", "--q", "3"});
    EXPECT_EQ(kr["result"]["count"], 4);
    json n = run_json({"nminus", "--type", "E6", "--mmax", "1", "--dim", "1,1,1,1,1,1"});
    EXPECT_EQ(n["result"]["roots"].size(), 36u);
    EXPECT_EQ(n["result"]["root_multiplicity"], 1);
    EXPECT_EQ(n["result"]["checks"]["jacobi"], true);
}

TEST(Cli, CharacterRowsStartAtWeightZero)
{
    json j = run_json({"char", "--which", "bps_undeformed", "--wmax", "3", "--qmin", "-2", "--qmax", "2"});
    EXPECT_EQ(j["result"]["convention"], "plain");
    EXPECT_EQ(j["result"]["t_exponents"].front(), 0);
    EXPECT_EQ(j["result"]["dimensions"].size(), 4u);
    json d = run_json({"char", "--which", "grW", "--wmax", "2", "--qmin", "-2", "--qmax", "2"});
    EXPECT_EQ(d["result"]["convention"], "doubled");
    EXPECT_EQ(d["result"]["t_exponents"].back(), 4);
}

TEST(Cli, PbwCheck)
{
    EXPECT_EQ(run({"pbw-check", "--wmax", "3", "--qmin", "-6", "--qmax", "4"}).status, kExitOk);
    EXPECT_EQ(run({"pbw-check", "--wmax", "3", "--qmin", "-6", "--qmax", "4", "--no-hu"}).status, kExitOk);
}

TEST(Cli, Determinism)
{
    const std::vector<std::string> args{"--json", "yangian-check", "--model", "shuffle", "--bound", "2"};
    Outcome first = run(args);
    Outcome second = run(args);
    EXPECT_EQ(first.out, second.out);
    Outcome four;
    {
        ThreadsEnv env("4");
        four = run(args);
    }
    EXPECT_EQ(first.out, four.out);
    const std::vector<std::string> kac{"--json", "kac", "1-1,1-1", "--dim", "2", "--q", "3"};
    Outcome k1 = run(kac);
    ThreadsEnv env("3");
    EXPECT_EQ(run(kac).out, k1.out);
}

TEST(Cli, RejectsBadThreadCount)
{
    ThreadsEnv env("zero");
    EXPECT_EQ(run({"bracket", "z", "z"}).status, kExitUsage);
    EXPECT_THROW(wkit::cli::threads_from_environment(), wkit::ParseError);
}
