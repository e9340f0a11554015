#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "padiceq/cli.hpp"
#include "padiceq/json_io.hpp"

namespace padiceq {
namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "padiceq");
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(PADICEQ_TEST_DATA_DIR) + "/" + name; }
std::string job(const std::string& name) { return std::string(PADICEQ_JOBS_DIR) + "/" + name; }

TEST(CliCertifyTest, StandardBasis) {
  const auto r = run({"certify", data("standard_basis_p3.json")});
  EXPECT_EQ(r.code, cli::kOk) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["verdict"], "certified");
  EXPECT_EQ(j["gamma"], "0");
}

TEST(CliCertifyTest, Pair) {
  const auto r = run({"certify", data("pair_p5.json")});
  EXPECT_EQ(r.code, cli::kOk) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["gamma"], "5^1");
  EXPECT_EQ(j["trace_S2"], "68/25");
}

TEST(CliCertifyTest, NotEquiangular) {
  const auto r = run({"certify", data("bad_norm_p5.json")});
  EXPECT_EQ(r.code, cli::kNotEquiangular);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["condition_i"], false);
}

TEST(CliCertifyTest, InputErrorsNameTheField) {
  const auto malformed = run({"certify", data("malformed_p5.json")});
  EXPECT_EQ(malformed.code, cli::kInputError);
  EXPECT_NE(malformed.err.find("vectors[1][1]"), std::string::npos) << malformed.err;
  EXPECT_TRUE(malformed.out.empty());

  const auto ragged = run({"certify", data("ragged_p5.json")});
  EXPECT_EQ(ragged.code, cli::kInputError);
  EXPECT_NE(ragged.err.find("vectors[1]"), std::string::npos) << ragged.err;

  const auto unknown = run({"certify", data("unknown_field_p5.json")});
  EXPECT_EQ(unknown.code, cli::kInputError);
  EXPECT_NE(unknown.err.find("colour"), std::string::npos) << unknown.err;

  EXPECT_EQ(run({"certify", data("does_not_exist.json")}).code, cli::kInputError);
}

TEST(CliCertifyTest, RoundTripReverifies) {
  for (const char* name : {"pair_p5.json", "standard_basis_p3.json", "bad_norm_p5.json"}) {
    const auto r = run({"certify", data(name)});
    const Certificate parsed = certificate_from_json(Json::parse(r.out));
    const Certificate again = certify(parsed.config);
    EXPECT_EQ(parsed.verdict, again.verdict);
    EXPECT_EQ(parsed.certified, again.certified);
    EXPECT_EQ(parsed.bounds, again.bounds);
    EXPECT_EQ(to_json(again).dump(2) + "\n", r.out);
  }
}

TEST(CliBoundTest, Examples) {
  const auto pair = run({"bound", "--p", "5", "--n", "2", "--d", "2", "--gamma", "5^1"});
  EXPECT_EQ(pair.code, cli::kOk) << pair.err;
  EXPECT_NE(pair.out.find("padic-relative\t5^0\t5^2\t<\ttrue"), std::string::npos) << pair.out;

  const auto equal = run({"bound", "--p", "3", "--n", "6", "--d", "6", "--gamma", "0"});
  EXPECT_EQ(equal.code, cli::kOk);
  EXPECT_NE(equal.out.find("\t=\ttrue"), std::string::npos) << equal.out;

  const auto classical = run({"bound", "--classical", "--d", "7", "--gamma2", "1/9", "--n", "28"});
  EXPECT_EQ(classical.code, cli::kOk) << classical.err;
  EXPECT_NE(classical.out.find("classical-relative\t56/9\t56/9\t="), std::string::npos) << classical.out;

  const auto fails = run({"bound", "--p", "5", "--n", "1", "--d", "5", "--gamma", "0"});
  EXPECT_EQ(fails.code, cli::kBoundFails);

  EXPECT_EQ(run({"bound", "--p", "5", "--n", "2", "--d", "2", "--gamma", "3^1"}).code, cli::kInputError);
  EXPECT_EQ(run({"bound", "--p", "5", "--n", "2", "--d", "2", "--gamma", "five"}).code, cli::kInputError);
  EXPECT_EQ(run({"bound", "--p", "6", "--n", "2", "--d", "2", "--gamma", "0"}).code, cli::kInputError);
  EXPECT_EQ(run({"bound", "--p", "5", "--n", "2", "--d", "2", "--gamma", "5^1", "--a", "0"}).code,
            cli::kInputError);
}

TEST(CliSearchTest, AcceptanceSweepIsWorkerIndependent) {
  const auto one = run({"search", job("acceptance_sweep.json"), "--workers", "1"});
  const auto three = run({"search", job("acceptance_sweep.json"), "--workers", "3"});
  EXPECT_EQ(one.code, cli::kOk) << one.err;
  EXPECT_EQ(one.out, three.out);
  EXPECT_EQ(one.out.rfind("p\td\tgamma\tn_max\tbound_rhs\tholds\n", 0), 0u);
}

TEST(CliSearchTest, EmptySpace) {
  const auto r = run({"search", job("empty_space.json")});
  EXPECT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_NE(r.out.find("no candidates"), std::string::npos) << r.out;
}

TEST(CliSearchTest, FaultInjection) {
  const auto r = run({"search", job("fault_injection.json")});
  EXPECT_EQ(r.code, cli::kCounterexample);
  EXPECT_NE(r.err.find("COUNTEREXAMPLE"), std::string::npos) << r.err;
}

TEST(CliTest, VersionAndUsage) {
  const auto v = run({"version"});
  EXPECT_EQ(v.code, cli::kOk);
  EXPECT_EQ(v.out, "padiceq 0.1.0\n");
  EXPECT_EQ(run({}).code, cli::kInputError);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kInputError);
}

}  // namespace
}  // namespace padiceq
