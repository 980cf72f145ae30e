#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "heisverma/cli.hpp"
#include "heisverma/realize.hpp"
#include "heisverma/serialize.hpp"

using namespace heisverma;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "heisverma");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(int(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

// Compares against tests/golden/<name>; HEISVERMA_UPDATE_GOLDEN=1 rewrites it.
void check_golden(const std::string& name, const std::string& text) {
  const std::string path = std::string(HEISVERMA_GOLDEN_DIR) + "/" + name;
  if (std::getenv("HEISVERMA_UPDATE_GOLDEN")) {
    std::ofstream(path) << text;
    return;
  }
  std::ifstream f(path);
  REQUIRE_MESSAGE(f.good(), "missing golden file " << path);
  std::stringstream expected;
  expected << f.rdbuf();
  CHECK(expected.str() == text);
}

}  // namespace

TEST_CASE("lambda parsing") {
  RunConfig cfg;
  parse_lambda("-1,-2", cfg);
  CHECK_FALSE(cfg.generic);
  CHECK(cfg.l1 == Rational(-1));
  CHECK(cfg.l2 == Rational(-2));
  parse_lambda("1/2,-7/3", cfg);
  CHECK(cfg.l2 == Rational(-7, 3));
  parse_lambda("generic", cfg);
  CHECK(cfg.generic);
  CHECK_THROWS_AS(parse_lambda("1", cfg), std::invalid_argument);
  CHECK_THROWS(parse_lambda("a,b", cfg));
}

TEST_CASE("exit codes") {
  CHECK(run({"verify", "--n", "4", "--r", "1", "--lambda", "0,0", "--m-max", "2"}).code == kExitMatch);
  CHECK(run({"verify", "--n", "4", "--r", "2"}).code == kExitUsage);
  CHECK(run({"classify", "--n", "4", "--r", "1"}).code == kExitUsage);  // needs a rational lambda
  CHECK(run({"solve", "--lambda", "1,"}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"realize", "--format", "yaml"}).code == kExitUsage);
  CHECK(run({"conjecture", "--n", "3", "--r", "1"}).code == kExitUsage);
  CHECK(run({"conjecture", "--n", "3", "--a", "2", "--lambda", "0,0"}).code == kExitUsage);
  const Run ok = run({"conjecture", "--n", "3", "--a", "2"});
  CHECK(ok.code == kExitMatch);
  CHECK(ok.out.find("verdict: true") != std::string::npos);
  CHECK(run({"examples", "--n", "3", "--a", "1"}).code == kExitMatch);
  CHECK(run({"realize", "--help"}).code == kExitMatch);
}

TEST_CASE("realize warns for small n but still prints") {
  const Run r = run({"realize", "--n", "1"});
  CHECK(r.code == kExitMatch);
  CHECK(r.err.find("warning") != std::string::npos);
  CHECK(r.out.find("pi_hat(c) = -z") != std::string::npos);
}

TEST_CASE("JSON reports carry the schema version and parse back") {
  const Run r = run({"realize", "--n", "2", "--lambda", "1/2,0", "--format", "json"});
  REQUIRE(r.code == kExitMatch);
  const Json j = Json::parse(r.out);
  CHECK(j.at("schema_version") == kSchemaVersion);
  const Realization real(2, ParamScalar(Rational(1, 2)), ParamScalar(0));
  const auto& basis = canonical_basis(2);
  REQUIRE(j.at("operators").size() == basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const Json& op = j.at("operators")[k];
    CHECK(lie_from_json(op.at("element")) == basis[k]);
    CHECK(weyl_from_json(op.at("pi")) == real.pi(k));
    CHECK(weyl_from_json(op.at("pi_hat")) == real.pi_hat(k));
  }
  const Json v = Json::parse(run({"verify", "--n", "3", "--lambda", "-1,-2", "--format", "json"}).out);
  CHECK(v.at("status") == "match");
  CHECK(v.at("mismatches").empty());
}

TEST_CASE("realize at lambda = 0 carries the constant n + 1 in pi(h1)") {
  const Run r = run({"realize", "--n", "3", "--lambda", "0,0"});
  REQUIRE(r.code == kExitMatch);
  const auto line = r.out.substr(r.out.find("pi(h1) = "));
  CHECK(line.substr(0, line.find('\n')).ends_with("+4"));
  CHECK(run({"realize", "--n", "3"}).out.find("pi_hat(c) = -z\n") != std::string::npos);
}

TEST_CASE("verify reports the quadratic r = 0 vector") {
  const Json v =
      Json::parse(run({"verify", "--n", "3", "--r", "0", "--lambda", "-1,-2", "--m-max", "2", "--format", "json"}).out);
  REQUIRE(v.at("examples").size() == 1);
  const Json& ex = v.at("examples")[0];
  CHECK(ex.at("singular") == true);
  CHECK(ex.at("in_oracle_span") == true);
  CHECK(ex.at("polynomial_text") == "x1*y1+x2*y2+x3*y3-1/2*z");
  CHECK(poly_from_json(ex.at("polynomial")).str() == "x1*y1+x2*y2+x3*y3-1/2*z");
}

TEST_CASE("every structured value in a report parses back") {
  const Json s = Json::parse(run({"solve", "--n", "3", "--lambda", "-1,-2", "--format", "json"}).out);
  for (const auto& slice : s.at("slices"))
    for (const auto& b : slice.at("basis")) {
      CHECK(poly_from_json(b.at("polynomial")).str() == b.at("text").get<std::string>());
      CHECK(pbw_from_json(b.at("pbw")).str() == b.at("pbw_text").get<std::string>());
    }
  const Json e = Json::parse(run({"examples", "--n", "3", "--a", "1", "--format", "json"}).out);
  for (const auto& ex : e.at("examples")) {
    CHECK(pbw_from_json(ex.at("pbw")).str() == ex.at("pbw_text").get<std::string>());
    CHECK(poly_from_json(ex.at("polynomial")).str() == ex.at("polynomial_text").get<std::string>());
  }
  const Json c = Json::parse(run({"conjecture", "--n", "3", "--a", "2", "--format", "json"}).out);
  CHECK(pbw_from_json(c.at("pbw")).str() == c.at("pbw_text").get<std::string>());
  CHECK(poly_from_json(c.at("polynomial")).str() == c.at("polynomial_text").get<std::string>());
}

TEST_CASE("output file") {
  const std::string path = "test_cli_output.json";
  CHECK(run({"classify", "--n", "4", "--r", "1", "--lambda", "0,0", "--format", "json", "--output", path}).code == 0);
  std::ifstream f(path);
  const Json j = Json::parse(f);
  CHECK(j.at("command") == "classify");
  CHECK_FALSE(j.at("components").empty());
}

TEST_CASE("golden text reports") {
  check_golden("realize_n2.txt", run({"realize", "--n", "2"}).out);
  check_golden("classify_n4_r1.txt", run({"classify", "--n", "4", "--r", "1", "--lambda", "0,0", "--m-max", "3"}).out);
  check_golden("solve_n3_r0.txt", run({"solve", "--n", "3", "--lambda", "-1,-2", "--m-max", "2"}).out);
  check_golden("conjecture_n3_a2.txt", run({"conjecture", "--n", "3", "--a", "2"}).out);
}
