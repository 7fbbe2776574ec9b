#include "cyclebetti/routes.hpp"

#include "cyclebetti/errors.hpp"
#include "cyclebetti/families.hpp"
#include "cyclebetti/formulas.hpp"
#include "cyclebetti/recursion.hpp"

namespace cyclebetti {

namespace {

using Kind = RecognizedFamily::Kind;

bool is_unit(const RecognizedFamily& f) {
  switch (f.kind) {
    case Kind::N1Power: return f.t == 0;
    case Kind::B: return f.n == 2 || f.s + f.t == 0;
    case Kind::C: return f.s + f.t == 0 || (f.t == 0 && f.n == 2);
  }
  return false;
}

std::string applicable(const RecognizedFamily& f) {
  switch (f.kind) {
    case Kind::N1Power: return "oracle, formula, recursion";
    case Kind::B: return "oracle, formula, recursion";
    case Kind::C: return f.t == 0 ? "oracle, formula, recursion" : "oracle, recursion";
  }
  return "oracle";
}

}  // namespace

std::string route_name(TotalsRoute route) {
  switch (route) {
    case TotalsRoute::ClosedForm: return "closed_form";
    case TotalsRoute::Recursion: return "recursion";
    case TotalsRoute::GeneratingFunction: return "gf";
  }
  return "?";
}

std::string describe(const RecognizedFamily& f) {
  const std::string n = std::to_string(f.n);
  switch (f.kind) {
    case Kind::N1Power: return "Jc(" + n + "," + std::to_string(f.n - 1) + ")^" + std::to_string(f.t);
    case Kind::B: return "J(" + n + ")^" + std::to_string(f.s) + "*I(" + n + ")^" + std::to_string(f.t);
    case Kind::C: return "J(" + n + ")^" + std::to_string(f.s) + "*m(x1,x" + n + ")^" + std::to_string(f.t);
  }
  return "?";
}

int generator_degree(const RecognizedFamily& f) {
  switch (f.kind) {
    case Kind::N1Power: return (f.n - 1) * f.t;
    case Kind::B: return (f.n - 2) * (f.s + f.t);
    case Kind::C: return (f.n - 2) * f.s + f.t;
  }
  return 0;
}

MonomialIdeal family_ideal(const RecognizedFamily& f) {
  switch (f.kind) {
    case Kind::N1Power: return ideal_power(cycle_n1_ideal(f.n), static_cast<std::uint64_t>(f.t));
    case Kind::B: return build_family(family::B{f.n, f.s, f.t});
    case Kind::C: return build_family(family::C{f.n, f.s, f.t});
  }
  throw InternalFault("unknown family");
}

std::vector<BigInt> family_totals(const RecognizedFamily& f, TotalsRoute route, bool strict_delta) {
  if (f.n < 2 || f.s < 0 || f.t < 0) throw InvalidParameter("family parameters out of range: " + describe(f));
  if (is_unit(f)) throw InvalidParameter(describe(f) + " is the unit ideal and has no Betti table here");

  auto value = [&](int i) -> BigInt {
    switch (route) {
      case TotalsRoute::ClosedForm:
        if (f.kind == Kind::N1Power) return beta_closed(f.n, f.t, i, ClosedKind::FullCycleN1);
        if (f.kind == Kind::B) return p_value(f.n, f.s, f.t, i);
        if (f.t == 0) return beta_closed(f.n, f.s, i, ClosedKind::OmittedJn);
        break;
      case TotalsRoute::Recursion:
        if (f.kind == Kind::N1Power) return e_rec(f.n, 0, f.t, i);
        return bc_rec(f.n, f.s, f.t, i, f.kind == Kind::B ? Which::B : Which::C, strict_delta);
      case TotalsRoute::GeneratingFunction:
        if (f.kind == Kind::N1Power) return gf_coefficient(f.n, f.t, i);
        break;
    }
    throw UnsupportedRoute("no " + route_name(route) + " route for " + describe(f) +
                           "; applicable routes: " + applicable(f));
  };

  // pd never exceeds the number of variables.
  std::vector<BigInt> totals;
  for (int i = 0; i <= f.n + 1; ++i) {
    BigInt v = value(i);
    if (v < 0) throw InternalFault("negative Betti number from the " + route_name(route) + " route");
    totals.push_back(std::move(v));
  }
  while (!totals.empty() && totals.back() == 0) totals.pop_back();
  return totals;
}

TableRoute parse_table_route(const std::string& name) {
  if (name == "oracle") return TableRoute::Oracle;
  if (name == "formula") return TableRoute::Formula;
  if (name == "recursion") return TableRoute::Recursion;
  throw InvalidParameter("unknown route '" + name + "' (oracle, formula, recursion)");
}

GradedBettiTable oracle_table(const MonomialIdeal& ideal, const OracleOptions& options) {
  if (ideal.is_unit()) {
    GradedBettiTable unit;
    unit.add(0, 0, 1);
    return unit;
  }
  if (ideal.is_zero()) return {};
  return graded_betti(ideal, options);
}

GradedBettiTable compute_table(const IdealExpression& expr, TableRoute route, const RouteOptions& options) {
  if (route == TableRoute::Oracle) {
    const MonomialIdeal ideal = evaluate(expr);
    if (ideal.is_zero() || ideal.is_unit()) {
      throw InvalidParameter("the " + std::string(ideal.is_zero() ? "zero" : "unit") +
                             " ideal has no Betti table here");
    }
    return graded_betti(ideal, options.oracle);
  }
  const auto family = recognize(expr);
  const std::string name = route == TableRoute::Formula ? "formula" : "recursion";
  if (!family) {
    throw UnsupportedRoute("the " + name + " route covers only J_{n,n-1}^t, J_n^s I_n^t and J_n^s (x1,xn)^t; " +
                           "applicable routes for '" + to_string(expr) + "': oracle");
  }
  const auto totals = family_totals(*family, route == TableRoute::Formula ? TotalsRoute::ClosedForm
                                                                            : TotalsRoute::Recursion,
                                    options.strict_delta);
  return GradedBettiTable::linear(totals, generator_degree(*family));
}

}  // namespace cyclebetti
