#include "cyclebetti/expression.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "cyclebetti/errors.hpp"
#include "cyclebetti/families.hpp"

namespace cyclebetti {

bool operator==(const Expr& a, const Expr& b) {
  if (a.kind != b.kind || a.n != b.n || a.m != b.m || a.variables != b.variables ||
      a.literal != b.literal || a.exponent != b.exponent) {
    return false;
  }
  auto same = [](const ExprPtr& x, const ExprPtr& y) {
    if (!x || !y) return !x && !y;
    return *x == *y;
  };
  return same(a.lhs, b.lhs) && same(a.rhs, b.rhs);
}

namespace {

constexpr int kMaxIndex = 1 << 14;

struct Located {
  ExprPtr expr;
  std::size_t position;
};

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  IdealExpression parse() {
    skip_space();
    if (pos_ == text_.size()) fail("empty expression");
    ExprPtr root = expr();
    skip_space();
    if (pos_ != text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return IdealExpression(root, infer_ambient());
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }
  [[noreturn]] void fail_at(const std::string& message, std::size_t at) const { throw ParseError(message, at); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::uint64_t number() {
    skip_space();
    const std::size_t start = pos_;
    std::uint64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const auto digit = static_cast<std::uint64_t>(text_[pos_] - '0');
      if (v > (std::numeric_limits<std::uint32_t>::max() - digit) / 10) fail_at("number too large", start);
      v = v * 10 + digit;
      ++pos_;
    }
    if (pos_ == start) fail("expected a number");
    return v;
  }

  int index_number() {
    const std::size_t start = pos_;
    const std::uint64_t v = number();
    if (v > static_cast<std::uint64_t>(kMaxIndex)) fail_at("index too large", start);
    return static_cast<int>(v);
  }

  int variable() {
    skip_space();
    const std::size_t start = pos_;
    if (pos_ >= text_.size() || text_[pos_] != 'x') fail("expected a variable x<k>");
    ++pos_;
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      fail("expected a variable index");
    }
    const int k = index_number();
    if (k < 1) fail_at("variable indices start at 1", start);
    note_variable(k, start);
    return k;
  }

  void note_variable(int k, std::size_t at) {
    if (k > max_variable_) {
      max_variable_ = k;
      max_variable_pos_ = at;
    }
  }

  void note_ambient(int n, std::size_t at) {
    if (declared_ambient_ == 0) {
      declared_ambient_ = n;
    } else if (declared_ambient_ != n) {
      fail_at("ambient conflict: " + std::to_string(n) + " variables here, " +
                  std::to_string(declared_ambient_) + " elsewhere",
              at);
    }
  }

  int infer_ambient() const {
    if (declared_ambient_ == 0) {
      if (max_variable_ == 0) fail_at("cannot infer the number of variables", 0);
      return max_variable_;
    }
    if (max_variable_ > declared_ambient_) {
      fail_at("variable x" + std::to_string(max_variable_) + " out of range for " +
                  std::to_string(declared_ambient_) + " variables",
              max_variable_pos_);
    }
    return declared_ambient_;
  }

  ExprPtr binary(ExprKind kind, ExprPtr lhs, ExprPtr rhs) {
    auto e = std::make_shared<Expr>();
    e->kind = kind;
    e->lhs = std::move(lhs);
    e->rhs = std::move(rhs);
    return e;
  }

  ExprPtr expr() {
    ExprPtr lhs = term();
    while (true) {
      if (peek('+')) {
        ++pos_;
        lhs = binary(ExprKind::Sum, lhs, term());
      } else if (peek('&')) {
        ++pos_;
        lhs = binary(ExprKind::Intersection, lhs, term());
      } else {
        return lhs;
      }
    }
  }

  ExprPtr term() {
    ExprPtr lhs = factor();
    while (peek('*')) {
      ++pos_;
      lhs = binary(ExprKind::Product, lhs, factor());
    }
    return lhs;
  }

  ExprPtr factor() {
    ExprPtr base = atom();
    if (peek('^')) {
      ++pos_;
      auto e = std::make_shared<Expr>();
      e->kind = ExprKind::Power;
      e->exponent = number();
      e->lhs = std::move(base);
      return e;
    }
    return base;
  }

  bool at_word(const char* word) {
    skip_space();
    const std::string w(word);
    if (text_.compare(pos_, w.size(), w) != 0) return false;
    std::size_t after = pos_ + w.size();
    while (after < text_.size() && std::isspace(static_cast<unsigned char>(text_[after]))) ++after;
    return after < text_.size() && text_[after] == '(';
  }

  ExprPtr atom() {
    skip_space();
    const std::size_t start = pos_;
    if (pos_ >= text_.size()) fail("unexpected end of input");
    auto e = std::make_shared<Expr>();
    if (at_word("Jc")) {
      pos_ += 2;
      expect('(');
      e->kind = ExprKind::PathCycle;
      e->n = index_number();
      expect(',');
      e->m = index_number();
      expect(')');
      if (e->m < 2 || e->m > e->n) fail_at("Jc(n,m) needs 2 <= m <= n", start);
      note_ambient(e->n, start);
      return e;
    }
    if (at_word("I") || at_word("J")) {
      e->kind = text_[pos_] == 'I' ? ExprKind::IdealI : ExprKind::IdealJ;
      ++pos_;
      expect('(');
      e->n = index_number();
      expect(')');
      if (e->n < 2) fail_at("I(n) and J(n) need n >= 2", start);
      note_ambient(e->n, start);
      return e;
    }
    if (at_word("m")) {
      ++pos_;
      expect('(');
      e->kind = ExprKind::Variables;
      e->variables.push_back(variable());
      while (peek(',')) {
        ++pos_;
        e->variables.push_back(variable());
      }
      expect(')');
      return e;
    }
    if (text_[pos_] == '(') {
      ++pos_;
      skip_space();
      if (pos_ < text_.size() && (text_[pos_] == 'x' || std::isdigit(static_cast<unsigned char>(text_[pos_])))) {
        e->kind = ExprKind::Literal;
        e->literal.push_back(monomial());
        while (peek(',')) {
          ++pos_;
          e->literal.push_back(monomial());
        }
        expect(')');
        return e;
      }
      ExprPtr inner = expr();
      expect(')');
      return inner;
    }
    fail("expected Jc(..), I(..), J(..), m(..) or '('");
  }

  LiteralMonomial monomial() {
    skip_space();
    LiteralMonomial out;
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const std::size_t start = pos_;
      if (number() != 1) fail_at("the only numeric monomial is 1", start);
      return out;
    }
    while (true) {
      const int k = variable();
      std::uint64_t power = 1;
      if (peek('^')) {
        ++pos_;
        power = number();
      }
      out.emplace_back(k, power);
      if (!peek('*')) break;
      ++pos_;
    }
    return out;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  int declared_ambient_ = 0;
  int max_variable_ = 0;
  std::size_t max_variable_pos_ = 0;
};

constexpr int kAtomLevel = 4;

int level(const Expr& e) {
  switch (e.kind) {
    case ExprKind::Sum:
    case ExprKind::Intersection: return 1;
    case ExprKind::Product: return 2;
    case ExprKind::Power: return 3;
    default: return kAtomLevel;
  }
}

std::string literal_text(const LiteralMonomial& mono) {
  if (mono.empty()) return "1";
  std::string out;
  for (std::size_t k = 0; k < mono.size(); ++k) {
    if (k) out += '*';
    out += 'x' + std::to_string(mono[k].first);
    if (mono[k].second != 1) out += '^' + std::to_string(mono[k].second);
  }
  return out;
}

std::string print(const Expr& e, int min_level) {
  std::string body;
  switch (e.kind) {
    case ExprKind::PathCycle: body = "Jc(" + std::to_string(e.n) + "," + std::to_string(e.m) + ")"; break;
    case ExprKind::IdealI: body = "I(" + std::to_string(e.n) + ")"; break;
    case ExprKind::IdealJ: body = "J(" + std::to_string(e.n) + ")"; break;
    case ExprKind::Variables:
      body = "m(";
      for (std::size_t k = 0; k < e.variables.size(); ++k) {
        if (k) body += ",";
        body += "x" + std::to_string(e.variables[k]);
      }
      body += ")";
      break;
    case ExprKind::Literal:
      body = "(";
      for (std::size_t k = 0; k < e.literal.size(); ++k) {
        if (k) body += ", ";
        body += literal_text(e.literal[k]);
      }
      body += ")";
      break;
    case ExprKind::Power: body = print(*e.lhs, kAtomLevel) + "^" + std::to_string(e.exponent); break;
    case ExprKind::Product: body = print(*e.lhs, 2) + "*" + print(*e.rhs, 3); break;
    case ExprKind::Sum: body = print(*e.lhs, 1) + " + " + print(*e.rhs, 2); break;
    case ExprKind::Intersection: body = print(*e.lhs, 1) + " & " + print(*e.rhs, 2); break;
  }
  return level(e) < min_level ? "(" + body + ")" : body;
}

MonomialIdeal eval(const Expr& e, std::size_t n) {
  switch (e.kind) {
    case ExprKind::PathCycle: return path_ideal_cycle(e.n, e.m);
    case ExprKind::IdealI: return short_path_ideals(e.n).I;
    case ExprKind::IdealJ: return short_path_ideals(e.n).J;
    case ExprKind::Variables: {
      std::vector<Monomial> gens;
      for (int v : e.variables) gens.push_back(Monomial::variable(n, static_cast<std::size_t>(v - 1)));
      return MonomialIdeal::from_generators(n, std::move(gens));
    }
    case ExprKind::Literal: {
      std::vector<Monomial> gens;
      for (const auto& mono : e.literal) {
        Monomial g(n);
        for (const auto& [v, power] : mono) {
          if (power >= kMaxExponent) throw InvalidParameter("exponent exceeds 2^31");
          g = g * Monomial::variable(n, static_cast<std::size_t>(v - 1), static_cast<Exponent>(power));
        }
        gens.push_back(std::move(g));
      }
      return MonomialIdeal::from_generators(n, std::move(gens));
    }
    case ExprKind::Power: return ideal_power(eval(*e.lhs, n), e.exponent);
    case ExprKind::Product: return ideal_product(eval(*e.lhs, n), eval(*e.rhs, n));
    case ExprKind::Sum: return ideal_sum(eval(*e.lhs, n), eval(*e.rhs, n));
    case ExprKind::Intersection: return ideal_intersection(eval(*e.lhs, n), eval(*e.rhs, n));
  }
  throw InternalFault("unknown expression kind");
}

/// (base, exponent) for `base` or `base^k`.
std::pair<const Expr*, std::uint64_t> split_power(const Expr& e) {
  if (e.kind == ExprKind::Power) return {e.lhs.get(), e.exponent};
  return {&e, 1};
}

bool fits_int(std::uint64_t v) { return v <= static_cast<std::uint64_t>(std::numeric_limits<int>::max()); }

}  // namespace

IdealExpression parse_ideal(const std::string& text) { return Parser(text).parse(); }

std::string to_string(const IdealExpression& expr) { return print(expr.root(), 1); }

MonomialIdeal evaluate(const IdealExpression& expr) {
  return eval(expr.root(), static_cast<std::size_t>(expr.ambient()));
}

std::optional<RecognizedFamily> recognize(const IdealExpression& expr) {
  using Kind = RecognizedFamily::Kind;
  const int n = expr.ambient();
  const Expr& root = expr.root();

  auto single = [&](const Expr& e) -> std::optional<RecognizedFamily> {
    const auto [base, k] = split_power(e);
    if (!fits_int(k)) return std::nullopt;
    const int power = static_cast<int>(k);
    switch (base->kind) {
      case ExprKind::PathCycle:
        if (base->m == base->n - 1) return RecognizedFamily{Kind::N1Power, n, 0, power};
        if (base->m == base->n - 2) return RecognizedFamily{Kind::B, n, 0, power};
        return std::nullopt;
      case ExprKind::IdealI: return RecognizedFamily{Kind::B, n, 0, power};
      case ExprKind::IdealJ: return RecognizedFamily{Kind::B, n, power, 0};
      case ExprKind::Variables: {
        std::vector<int> vars = base->variables;
        std::sort(vars.begin(), vars.end());
        vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
        if (n >= 3 && vars == std::vector<int>{1, n}) return RecognizedFamily{Kind::C, n, 0, power};
        return std::nullopt;
      }
      default: return std::nullopt;
    }
  };

  if (root.kind != ExprKind::Product) return single(root);
  const auto left = single(*root.lhs);
  const auto right = single(*root.rhs);
  if (!left || !right) return std::nullopt;
  // J(n)^s times I(n)^t or m(x1,xn)^t, in either order. J(n)^s is tagged
  // as B with t = 0 by `single`.
  const Expr* lbase = split_power(*root.lhs).first;
  const Expr* rbase = split_power(*root.rhs).first;
  auto is_j = [](const Expr* e) { return e->kind == ExprKind::IdealJ; };
  auto is_t_side = [](const Expr* e, const RecognizedFamily& f) {
    return (e->kind == ExprKind::IdealI && f.kind == Kind::B) || f.kind == Kind::C;
  };
  if (is_j(lbase) && is_t_side(rbase, *right)) return RecognizedFamily{right->kind, n, left->s, right->t};
  if (is_j(rbase) && is_t_side(lbase, *left)) return RecognizedFamily{left->kind, n, right->s, left->t};
  return std::nullopt;
}

}  // namespace cyclebetti
