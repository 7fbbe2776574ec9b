#include "doctest.h"

#include "cyclebetti/errors.hpp"
#include "cyclebetti/expression.hpp"
#include "cyclebetti/families.hpp"
#include "cyclebetti/oracle.hpp"
#include "cyclebetti/table_format.hpp"
#include "json.hpp"
#include "support.hpp"

using namespace cyclebetti;
using testing_support::Rng;

TEST_CASE("parse and evaluate the family atoms") {
  const auto jc = parse_ideal("Jc(5,3)^2");
  CHECK(jc.ambient() == 5);
  CHECK(evaluate(jc) == ideal_power(build_family(family::PathCycle{5, 3}), 2));

  const auto b = parse_ideal("J(6)^2 * I(6)");
  CHECK(evaluate(b) == build_family(family::B{6, 2, 1}));
  const auto rb = recognize(b);
  REQUIRE(rb);
  CHECK(rb->kind == RecognizedFamily::Kind::B);
  CHECK(rb->n == 6);
  CHECK(rb->s == 2);
  CHECK(rb->t == 1);

  const auto c = recognize(parse_ideal("m(x1,x6)^3"));
  REQUIRE(c);
  CHECK(c->kind == RecognizedFamily::Kind::C);
  CHECK(c->s == 0);
  CHECK(c->t == 3);
  CHECK(evaluate(parse_ideal("m(x1,x6)^3")) == build_family(family::C{6, 0, 3}));
}

TEST_CASE("literal ideals, precedence and associativity") {
  const auto lit = evaluate(parse_ideal("(x1*x2^2, x3, x3*x1)"));
  CHECK(lit.size() == 2);
  CHECK(lit.ambient() == 3);
  CHECK(to_string(lit) == "(x3, x1*x2^2)");

  CHECK(parse_ideal("(x1) + (x2) * (x3)") == parse_ideal("(x1) + ((x2) * (x3))"));
  CHECK(parse_ideal("(x1) * (x2)^2") == parse_ideal("(x1) * ((x2)^2)"));
  CHECK(parse_ideal("(x1) + (x2) & (x3)") == parse_ideal("((x1) + (x2)) & (x3)"));
  CHECK(to_string(parse_ideal("((x1) + (x2)) * (x3)")) == "((x1) + (x2))*(x3)");
  CHECK(evaluate(parse_ideal("(x1, x2) & (x2, x3)")) == evaluate(parse_ideal("(x2, x1*x3)")));
  CHECK(evaluate(parse_ideal("(1) + (x2)")).is_unit());
  CHECK_THROWS_AS(parse_ideal("(1)"), ParseError);
}

TEST_CASE("parse errors carry a position") {
  try {
    parse_ideal("Jc(5,3");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 6);
  }
  CHECK_THROWS_AS(parse_ideal("Jc(6,2) + (x7)"), ParseError);
  CHECK_THROWS_AS(parse_ideal("I(5) + J(6)"), ParseError);
  CHECK_THROWS_AS(parse_ideal("(x1) ^"), ParseError);
  CHECK_THROWS_AS(parse_ideal(""), ParseError);
  CHECK_THROWS_AS(parse_ideal("(x1) $"), ParseError);
}

TEST_CASE("recognition") {
  auto kind_of = [](const std::string& text) { return recognize(parse_ideal(text)); };
  const auto n1 = kind_of("Jc(7,6)^3");
  REQUIRE(n1);
  CHECK(n1->kind == RecognizedFamily::Kind::N1Power);
  CHECK(n1->t == 3);
  const auto n2 = kind_of("Jc(7,5)^2");
  REQUIRE(n2);
  CHECK(n2->kind == RecognizedFamily::Kind::B);
  CHECK(n2->s == 0);
  CHECK(n2->t == 2);
  const auto js = kind_of("J(7)^4");
  REQUIRE(js);
  CHECK(js->s == 4);
  CHECK(js->t == 0);
  const auto swapped = kind_of("m(x1,x5)^2 * J(5)");
  REQUIRE(swapped);
  CHECK(swapped->kind == RecognizedFamily::Kind::C);
  CHECK(swapped->s == 1);
  CHECK(swapped->t == 2);
  CHECK_FALSE(kind_of("Jc(7,3)^2"));
  CHECK_FALSE(kind_of("(x1*x2)"));
  CHECK_FALSE(kind_of("I(5) + J(5)"));
  CHECK_FALSE(kind_of("m(x1,x3) + (x5)"));
}

namespace {

std::string random_expression(Rng& rng, int depth) {
  if (depth == 0 || rng.range(0, 2) == 0) {
    switch (rng.range(0, 4)) {
      case 0: return "Jc(6," + std::to_string(rng.range(2, 6)) + ")";
      case 1: return "I(6)";
      case 2: return "J(6)";
      case 3: return "m(x" + std::to_string(rng.range(1, 3)) + ",x" + std::to_string(rng.range(4, 6)) + ")";
      default: return "(x" + std::to_string(rng.range(1, 6)) + "^" + std::to_string(rng.range(1, 3)) + ", x2*x5)";
    }
  }
  const std::string a = random_expression(rng, depth - 1);
  switch (rng.range(0, 4)) {
    case 0: return a + " + " + random_expression(rng, depth - 1);
    case 1: return a + " & " + random_expression(rng, depth - 1);
    case 2: return a + " * " + random_expression(rng, depth - 1);
    case 3: return "(" + a + ")^" + std::to_string(rng.range(1, 3));
    default: return "(" + a + ")";
  }
}

}  // namespace

TEST_CASE("property: printing then parsing returns the same tree") {
  Rng rng(7);
  for (int k = 0; k < 400; ++k) {
    const std::string text = random_expression(rng, 4);
    const auto expr = parse_ideal(text);
    const std::string printed = to_string(expr);
    CAPTURE(text);
    CAPTURE(printed);
    const auto again = parse_ideal(printed);
    CHECK(again == expr);
    CHECK(to_string(again) == printed);
  }
}

TEST_CASE("table formats") {
  const auto triangle = evaluate(parse_ideal("(x1*x2, x2*x3, x1*x3)"));
  const auto table = graded_betti(triangle);
  const TableContext ctx{3, 32003};
  const auto text = emit_betti_table(table, TableFormat::Text, ctx);
  CHECK(text.find("    2: 3 2") != std::string::npos);
  CHECK(text.find("pd: 1") != std::string::npos);
  CHECK(text.find("reg: 2") != std::string::npos);

  const auto json = nlohmann::json::parse(emit_betti_table(table, TableFormat::Json, ctx));
  CHECK(json["ambient"] == 3);
  CHECK(json["char"] == 32003);
  CHECK(json["pd"] == 1);
  CHECK(json["entries"].size() == 2);
  CHECK(json["entries"][1]["value"] == "2");

  CHECK(emit_betti_table(table, TableFormat::Csv, ctx) == "i,j,value\n0,2,3\n1,3,2\n");
  CHECK_THROWS_AS(emit_betti_table(GradedBettiTable{}, TableFormat::Text), InvalidParameter);
  CHECK(parse_table_format("csv") == TableFormat::Csv);
  CHECK_THROWS(parse_table_format("xml"));
}
