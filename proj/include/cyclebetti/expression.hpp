#pragma once

// Ideal expressions:
//
//   expr   := term (('+' | '&') term)*
//   term   := factor ('*' factor)*
//   factor := atom ('^' uint)?
//   atom   := Jc(n,m) | I(n) | J(n) | m(var, ...) | '(' mono, ... ')' | '(' expr ')'
//
// '+' is the ideal sum and '&' the intersection. A literal monomial is a
// '*'-separated product of powers of variables x1, x2, ..., or 1.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cyclebetti/monomial.hpp"

namespace cyclebetti {

enum class ExprKind { PathCycle, IdealI, IdealJ, Variables, Literal, Power, Product, Sum, Intersection };

/// A literal monomial as (1-based variable, exponent) factors; empty means 1.
using LiteralMonomial = std::vector<std::pair<int, std::uint64_t>>;

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  ExprKind kind = ExprKind::Literal;
  /// PathCycle: (n, m); IdealI/IdealJ: (n, 0).
  int n = 0;
  int m = 0;
  /// Variables: 1-based indices.
  std::vector<int> variables;
  std::vector<LiteralMonomial> literal;
  std::uint64_t exponent = 0;
  ExprPtr lhs;
  ExprPtr rhs;
};

bool operator==(const Expr& a, const Expr& b);

class IdealExpression {
 public:
  IdealExpression(ExprPtr root, int ambient) : root_(std::move(root)), ambient_(ambient) {}

  const Expr& root() const { return *root_; }
  int ambient() const noexcept { return ambient_; }

  friend bool operator==(const IdealExpression& a, const IdealExpression& b) {
    return a.ambient_ == b.ambient_ && *a.root_ == *b.root_;
  }

 private:
  ExprPtr root_;
  int ambient_;
};

/// Throws ParseError with the offending character offset.
IdealExpression parse_ideal(const std::string& text);

/// Canonical text with the fewest parentheses that parse back to the same tree.
std::string to_string(const IdealExpression& expr);

MonomialIdeal evaluate(const IdealExpression& expr);

/// Expressions whose Betti numbers have a closed form or a recursion.
struct RecognizedFamily {
  enum class Kind {
    /// J_{n,n-1}^t.
    N1Power,
    /// J_n^s I_n^t ("n-2" notation); includes J_{n,n-2}^t and I(n)^t.
    B,
    /// J_n^s (x1, xn)^t.
    C,
  };
  Kind kind;
  int n;
  int s;
  int t;
};

std::optional<RecognizedFamily> recognize(const IdealExpression& expr);

}  // namespace cyclebetti
