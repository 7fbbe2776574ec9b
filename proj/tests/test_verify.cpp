#include "doctest.h"

#include "cyclebetti/errors.hpp"
#include "cyclebetti/families.hpp"
#include "cyclebetti/verify.hpp"
#include "json.hpp"

using namespace cyclebetti;

namespace {

MonomialIdeal ideal(std::size_t ambient, std::vector<Monomial> gens) {
  return MonomialIdeal::from_generators(ambient, std::move(gens));
}

}  // namespace

TEST_CASE("splitting of a pair of variables") {
  const auto P = ideal(2, {Monomial{1, 0}, Monomial{0, 1}});
  const auto report = check_splitting(P, ideal(2, {Monomial{1, 0}}), ideal(2, {Monomial{0, 1}}));
  CHECK(report.status == Status::Match);
  CHECK_FALSE(report.witness);
}

TEST_CASE("splitting requires P = I + J") {
  const auto P = ideal(2, {Monomial{1, 0}, Monomial{0, 1}});
  CHECK_THROWS_AS(check_splitting(P, ideal(2, {Monomial{1, 0}}), ideal(2, {Monomial{0, 2}})), InvalidParameter);
}

TEST_CASE("family splittings hold") {
  const auto e = e_splitting(4, 0, 1);
  CHECK(check_splitting(e.whole, e.first, e.second).status == Status::Match);
  const auto a = a_splitting(5, 1, 2);
  CHECK(check_splitting(a.whole, a.first, a.second).status == Status::Match);
  const auto m = m_chain_splitting(4, 1, 1, 0);
  CHECK(check_splitting(m.whole, m.first, m.second).status == Status::Match);
  const auto nc = n_chain_splitting(5, 1, 1, 1);
  CHECK(check_splitting(nc.whole, nc.first, nc.second).status == Status::Match);
}

TEST_CASE("a decomposition that is not a Betti splitting") {
  const auto P = ideal(2, {Monomial{2, 0}, Monomial{1, 1}, Monomial{0, 2}});
  const auto report =
      check_splitting(P, ideal(2, {Monomial{1, 1}}), ideal(2, {Monomial{2, 0}, Monomial{0, 2}}));
  REQUIRE(report.status == Status::Mismatch);
  REQUIRE(report.witness);
  CHECK(report.witness->quantity == "beta");
  CHECK(report.witness->i == 1);
  CHECK(report.witness->j == 4);
  CHECK(report.witness->lhs == 0);
  CHECK(report.witness->rhs == 1);
}

TEST_CASE("cross validation over a small box") {
  RangeSpec spec;
  spec.family = SweepFamily::CycleN1;
  spec.add_box(3, 5, 0, 0, 1, 3);
  spec.routes = {{SweepRoute::Kind::Oracle, 2}, {SweepRoute::Kind::ClosedForm},
                 {SweepRoute::Kind::Recursion}, {SweepRoute::Kind::GeneratingFunction}};
  spec.threads = 2;
  const auto reports = cross_validate(spec);
  CHECK_FALSE(reports.empty());
  CHECK(all_match(reports));
  for (const auto& r : reports) CHECK(r.status != Status::Mismatch);
}

TEST_CASE("cross validation of B") {
  RangeSpec spec;
  spec.family = SweepFamily::B;
  spec.add_box(3, 5, 0, 2, 0, 2);
  spec.routes = {{SweepRoute::Kind::Recursion}, {SweepRoute::Kind::ClosedForm}, {SweepRoute::Kind::Oracle}};
  CHECK(all_match(cross_validate(spec)));

  spec.routes = {{SweepRoute::Kind::Recursion}, {SweepRoute::Kind::GeneratingFunction}};
  CHECK_THROWS_AS(cross_validate(spec), UnsupportedRoute);
}

TEST_CASE("range spec parsing") {
  const auto spec = parse_range_spec(
      R"({"family": "cycle_n2", "n": [4, 5], "t": [1, 2], "routes": ["oracle", "closed_form"], "primes": [2, 3], "threads": 3})");
  CHECK(spec.family == SweepFamily::CycleN2);
  CHECK(spec.tuples.size() == 4);
  CHECK(spec.threads == 3);
  REQUIRE(spec.routes.size() == 3);
  CHECK(spec.routes[0].prime == 2);
  CHECK(spec.routes[1].prime == 3);
  CHECK(spec.routes[2].kind == SweepRoute::Kind::ClosedForm);
  CHECK(all_match(cross_validate(spec)));

  const auto listed = parse_range_spec(R"({"family": "B", "tuples": [[4, 1, 1]], "routes": ["recursion", "closed_form"]})");
  CHECK(listed.tuples == std::vector<ParamTuple>{{4, 1, 1}});
  CHECK_THROWS(parse_range_spec("{"));
  CHECK_THROWS(parse_range_spec(R"({"family": "nope", "routes": ["oracle"]})"));
}

TEST_CASE("report serialisation") {
  VerificationReport report;
  report.case_ = {"cycle_n1", {{"n", 4}, {"t", 2}}, "oracle(p=2)/closed_form", ""};
  report.status = Status::Mismatch;
  report.witness = Witness{"beta", 1, std::nullopt, 5, 6};
  report.millis = 12.5;
  const auto line = to_json_line(report, false);
  CHECK(line == to_json_line(report, false));
  CHECK(line.find('\n') == std::string::npos);
  const auto parsed = nlohmann::json::parse(line);
  CHECK(parsed["status"] == "mismatch");
  CHECK(parsed["case"]["params"]["n"] == 4);
  CHECK(parsed["witness"]["lhs"] == "5");
  CHECK(parsed["millis"] == 0);
  CHECK(nlohmann::json::parse(to_json_line(report))["millis"] == 12.5);
}

TEST_CASE("unit tuples are skipped") {
  RangeSpec spec;
  spec.family = SweepFamily::CycleN1;
  spec.tuples = {{4, 0, 0}};
  spec.routes = {{SweepRoute::Kind::Oracle}, {SweepRoute::Kind::ClosedForm}};
  const auto reports = cross_validate(spec);
  REQUIRE(reports.size() == 1);
  CHECK(reports[0].status == Status::Skipped);
}
