#include <doctest.h>

#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

#include "permfix/cli.hpp"

using namespace permfix;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "permfix");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

json result_of(const Run& r) { return json::parse(r.out).at("result"); }

}  // namespace

TEST_CASE("mult") {
  const Run all = run({"mult", "--lambda", "4,1", "--r", "1", "--alg", "all"});
  REQUIRE(all.code == kExitOk);
  const json doc = json::parse(all.out);
  CHECK(doc.at("schema_version") == 1);
  CHECK(doc.at("config").at("lambda") == "4,1");
  CHECK(doc.at("result").at("value") == "1");
  CHECK(doc.at("result").at("agree") == true);
  CHECK(doc.at("result").at("algorithms").size() == 4);

  CHECK(result_of(run({"mult", "--lambda", "3", "--r", "2", "--alg", "oracle"})).at("value") == "2");
  CHECK(result_of(run({"mult", "--lambda", "2,2", "--r", "1"})).at("value") == "0");
}

TEST_CASE("mult validation errors") {
  CHECK(run({"mult", "--lambda", "1,2"}).code == kExitValidation);
  CHECK(run({"mult", "--lambda", "3,3", "--r", "4", "--alg", "ding"}).code == kExitValidation);
  CHECK(run({"mult", "--lambda", "8", "--r", "1", "--alg", "oracle"}).code == kExitValidation);
  CHECK(run({"mult", "--lambda", "3", "--alg", "bogus"}).code == kExitValidation);
  CHECK(run({"mult"}).code == kExitValidation);
  CHECK(run({}).code == kExitValidation);
  CHECK(run({"frobnicate"}).code == kExitValidation);
  CHECK(run({"--precision", "32", "mult", "--lambda", "3"}).code == kExitValidation);
  CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("moments") {
  const json random = result_of(run({"moments", "commutator-random", "--n", "10", "--r-max", "3"}));
  CHECK(random.at("moments").size() == 3);
  const json fixed = result_of(run({"moments", "commutator-fixed", "--n", "8", "--x", "8", "--r-max", "2"}));
  CHECK(fixed.at("moments").at(0).at("value") == json{{"num", "8"}, {"den", "7"}});
  const json walk = result_of(run({"moments", "walk", "--n", "1000", "--i", "2", "--c", "0", "--r-max", "2"}));
  CHECK(std::stod(walk.at("moments").at(0).at("value").get<std::string>()) == doctest::Approx(2.0).epsilon(0.01));
  CHECK(run({"moments", "commutator-fixed", "--n", "8", "--x", "3,3"}).code == kExitValidation);
  CHECK(run({"moments", "commutator-fixed", "--n", "8", "--x", "x"}).code == kExitValidation);
  CHECK(run({"moments", "walk", "--n", "10", "--i", "2"}).code == kExitValidation);
  CHECK(run({"moments", "walk", "--n", "10", "--i", "11", "--k", "3"}).code == kExitValidation);
}

TEST_CASE("csv output") {
  const Run csv = run({"--format", "csv", "moments", "commutator-random", "--n", "5", "--r-max", "2"});
  REQUIRE(csv.code == kExitOk);
  CHECK(csv.out.rfind("r,value,reference,formula\n", 0) == 0);
  CHECK(csv.out.find("\n1,5/4,1,") != std::string::npos);
  const Run mult = run({"mult", "--format", "csv", "--lambda", "4,1", "--r", "2", "--alg", "skew"});
  CHECK(mult.out == "algorithm,value\nskew,3\n");
}

TEST_CASE("simulate is deterministic for a seed") {
  const std::vector<std::string> args{"simulate", "--model", "walk", "--n", "50", "--i", "3",
                                      "--k", "100", "--samples", "2e4", "--seed", "7"};
  const Run a = run(args);
  REQUIRE(a.code == kExitOk);
  const Run b = run(args);
  CHECK(result_of(a) == result_of(b));
  std::vector<std::string> threaded = args;
  threaded.insert(threaded.begin(), {"--threads", "3"});
  CHECK(result_of(run(threaded)).at("histogram") == result_of(a).at("histogram"));

  const json comm = result_of(run({"simulate", "--model", "commutator", "--n", "5", "--samples", "1e5"}));
  CHECK(comm.at("moments").at(0).at("within_4_sigma") == true);
  CHECK(run({"simulate", "--model", "uniform", "--n", "20", "--samples", "1.5"}).code == kExitValidation);
  CHECK(run({"simulate", "--model", "uniform", "--n", "20", "--samples", "0"}).code == kExitValidation);
  const json uniform = result_of(run({"simulate", "--model", "uniform", "--n", "20", "--samples", "1e5"}));
  CHECK(uniform.at("tv_to_poisson").get<double>() < 0.02);
}

TEST_CASE("ratio and dist") {
  const json r = result_of(run({"ratio", "--lambda", "4,1", "--i", "2"}));
  CHECK(r.at("ratio") == json{{"num", "1"}, {"den", "2"}});
  const json scan = result_of(run({"ratio", "--i", "2", "--t", "1", "--n-list", "50,100,200"}));
  CHECK(scan.at("non_increasing") == true);
  CHECK(run({"ratio", "--lambda", "4,1", "--i", "9"}).code == kExitValidation);

  const json walk = result_of(run({"dist", "walk", "--n", "3", "--i", "2", "--k", "1"}));
  CHECK(walk.at("probabilities").at(1) == json{{"num", "1"}, {"den", "1"}});
  const json comm = result_of(run({"dist", "commutator", "--n", "3"}));
  CHECK(comm.at("probabilities").at(3) == json{{"num", "1"}, {"den", "2"}});
  CHECK(run({"dist", "walk", "--n", "12", "--i", "2", "--k", "1"}).code == kExitValidation);
}

TEST_CASE("verify reports per-gate lines") {
  const Run v = run({"verify", "identities"});
  CHECK(v.code == kExitOk);
  std::istringstream lines(v.out);
  std::string line;
  int gates = 0;
  bool summary = false;
  while (std::getline(lines, line)) {
    const json doc = json::parse(line);
    if (doc.contains("gate")) {
      ++gates;
      CHECK(doc.at("passed") == true);
    }
    if (doc.contains("summary")) summary = doc.at("summary").at("passed") == true;
  }
  CHECK(gates >= 5);
  CHECK(summary);
  CHECK(run({"verify", "nonsense"}).code == kExitValidation);
}
