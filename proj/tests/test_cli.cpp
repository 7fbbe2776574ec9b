#include "doctest.h"

#include <sstream>

#include "cyclebetti/cli.hpp"
#include "json.hpp"

using namespace cyclebetti;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("table of the triangle") {
  const auto r = run({"table", "(x1*x2, x2*x3, x1*x3)"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("    2: 3 2") != std::string::npos);
}

TEST_CASE("formula route on a large power") {
  const auto r = run({"table", "Jc(27,25)^4", "--route", "formula"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("  100: 27405 98658 136332 89181 27405 3654 378 27 1") != std::string::npos);
  CHECK(r.out.find("pd: 8") != std::string::npos);
  CHECK(r.out.find("reg: 100") != std::string::npos);
}

TEST_CASE("json output is stable") {
  const auto r = run({"table", "Jc(6,4)^2", "--format", "json", "--char", "2"});
  REQUIRE(r.code == kExitOk);
  const auto parsed = nlohmann::json::parse(r.out);
  CHECK(parsed.dump() + "\n" == r.out);
  CHECK(parsed["char"] == 2);
  CHECK(run({"table", "Jc(6,4)^2", "--format", "json", "--char", "2"}).out == r.out);
}

TEST_CASE("routes agree on a C family") {
  const auto oracle = run({"table", "J(5)*m(x1,x5)^2", "--format", "csv"});
  const auto rec = run({"table", "J(5)*m(x1,x5)^2", "--route", "recursion", "--format", "csv"});
  CHECK(oracle.code == kExitOk);
  CHECK(oracle.out == rec.out);
}

TEST_CASE("usage errors exit with 2") {
  const auto bad = run({"table", "Jc(5,3"});
  CHECK(bad.code == kExitUsage);
  CHECK(bad.err.find("position") != std::string::npos);
  const auto unsupported = run({"table", "J(6)*m(x1,x6)", "--route", "formula"});
  CHECK(unsupported.code == kExitUsage);
  CHECK(unsupported.err.find("oracle") != std::string::npos);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({"table", "I(5)", "--char", "4"}).code == kExitUsage);
  CHECK(run({"verify", "no-such-suite"}).code == kExitUsage);
}

TEST_CASE("lattice cap exits with 3") {
  CHECK(run({"--lattice-cap", "3", "table", "Jc(6,4)^2"}).code == kExitCapExceeded);
}

TEST_CASE("verify suites") {
  const auto split = run({"--no-timing", "verify", "splitting"});
  CHECK(split.code == kExitOk);
  std::istringstream lines(split.out);
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    const auto j = nlohmann::json::parse(line);
    CHECK(j["status"] == "match");
    CHECK(j["millis"] == 0);
    ++count;
  }
  CHECK(count > 0);
  CHECK(run({"--no-timing", "verify", "splitting"}).out == split.out);
  CHECK(run({"verify", "delta-edge"}).code == kExitOk);
  CHECK(run({"suites"}).out.find("f-coefficients") != std::string::npos);
}

TEST_CASE("a crafted non-splitting exits with 1") {
  const auto r = run({"--no-timing", "split", "(x1^2, x1*x2, x2^2)", "(x1*x2)", "(x1^2, x2^2)"});
  CHECK(r.code == kExitMismatch);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["status"] == "mismatch");
  CHECK(j["witness"]["j"] == 4);
  CHECK(run({"split", "(x1, x2)", "(x1)", "(x2)"}).code == kExitOk);
}

TEST_CASE("gf and pd") {
  CHECK(run({"gf", "--n", "3", "--t", "2", "--imax", "3"}).out == "0: 6\n1: 6\n2: 1\n3: 0\n");
  CHECK(run({"pd", "Jc(5,3)^2", "--route", "recursive"}).out == "pd: 4\n");
  CHECK(run({"pd", "Jc(5,3)^2", "--route", "closed"}).out == "pd: 4\nreg: 6\n");
  CHECK(run({"pd", "Jc(5,3)^2", "--route", "oracle"}).out == "pd: 4\nreg: 6\n");
}

TEST_CASE("strict delta changes the recursion table") {
  const auto strict = run({"--strict-delta", "table", "m(x1,x4)^2", "--route", "recursion", "--format", "csv"});
  CHECK(strict.out.find("0,2,4") != std::string::npos);
  const auto plain = run({"table", "m(x1,x4)^2", "--route", "recursion", "--format", "csv"});
  CHECK(plain.out.find("0,2,3") != std::string::npos);
}

TEST_CASE("help exits with 0") {
  CHECK(run({"--help"}).code == kExitOk);
}
