#pragma once

// Computing a Betti table by one of several independent routes.

#include <stdexcept>
#include <string>
#include <vector>

#include "cyclebetti/bigint.hpp"
#include "cyclebetti/expression.hpp"
#include "cyclebetti/oracle.hpp"

namespace cyclebetti {

/// The requested route does not cover the input; the message lists the
/// routes that do.
class UnsupportedRoute : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class TotalsRoute { ClosedForm, Recursion, GeneratingFunction };

std::string route_name(TotalsRoute route);

/// Total Betti numbers beta_0..beta_pd of a recognized family, without
/// constructing the ideal. Throws UnsupportedRoute when the route has no
/// formula for the family and InvalidParameter for the unit ideal.
std::vector<BigInt> family_totals(const RecognizedFamily& family, TotalsRoute route, bool strict_delta = false);

/// Degree of the minimal generators, i.e. the row of a linear resolution.
int generator_degree(const RecognizedFamily& family);

MonomialIdeal family_ideal(const RecognizedFamily& family);

std::string describe(const RecognizedFamily& family);

enum class TableRoute { Oracle, Formula, Recursion };

TableRoute parse_table_route(const std::string& name);

struct RouteOptions {
  OracleOptions oracle;
  bool strict_delta = false;
};

/// The formula and recursion routes produce totals, placed on the single
/// linear strand that the families are known to have.
GradedBettiTable compute_table(const IdealExpression& expr, TableRoute route, const RouteOptions& options = {});

/// The unit ideal resolves as S itself: beta_{0,0} = 1.
GradedBettiTable oracle_table(const MonomialIdeal& ideal, const OracleOptions& options);

}  // namespace cyclebetti
