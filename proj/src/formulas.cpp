#include "cyclebetti/formulas.hpp"

#include <algorithm>
#include <vector>

#include "cyclebetti/errors.hpp"

namespace cyclebetti {

namespace {

constexpr long long kPascalRows = 192;

const std::vector<std::vector<BigInt>>& pascal() {
  static const std::vector<std::vector<BigInt>> rows = [] {
    std::vector<std::vector<BigInt>> r(kPascalRows);
    for (long long a = 0; a < kPascalRows; ++a) {
      auto& row = r[static_cast<std::size_t>(a)];
      row.resize(static_cast<std::size_t>(a + 1), BigInt(1));
      for (long long b = 1; b < a; ++b) {
        const auto& prev = r[static_cast<std::size_t>(a - 1)];
        row[static_cast<std::size_t>(b)] =
            prev[static_cast<std::size_t>(b - 1)] + prev[static_cast<std::size_t>(b)];
      }
    }
    return r;
  }();
  return rows;
}

long long floor_half(long long x) { return x >= 0 ? x / 2 : -((-x + 1) / 2); }

/// Dense power series in x, y, z truncated at (X, Y, Z) inclusive.
class Series3 {
 public:
  Series3(int X, int Y, int Z)
      : X_(X), Y_(Y), Z_(Z),
        c_(static_cast<std::size_t>((X + 1) * (Y + 1) * (Z + 1)), BigInt(0)) {}

  BigInt& at(int a, int b, int c) { return c_[index(a, b, c)]; }
  const BigInt& at(int a, int b, int c) const { return c_[index(a, b, c)]; }

  friend Series3 operator*(const Series3& p, const Series3& q) {
    struct Term { int a, b, c; const BigInt* v; };
    std::vector<Term> sparse;
    for (int a = 0; a <= q.X_; ++a)
      for (int b = 0; b <= q.Y_; ++b)
        for (int c = 0; c <= q.Z_; ++c)
          if (q.at(a, b, c) != 0) sparse.push_back({a, b, c, &q.at(a, b, c)});

    Series3 out(p.X_, p.Y_, p.Z_);
    for (int a = 0; a <= p.X_; ++a)
      for (int b = 0; b <= p.Y_; ++b)
        for (int c = 0; c <= p.Z_; ++c) {
          const BigInt& u = p.at(a, b, c);
          if (u == 0) continue;
          for (const Term& term : sparse) {
            if (a + term.a <= p.X_ && b + term.b <= p.Y_ && c + term.c <= p.Z_) {
              out.at(a + term.a, b + term.b, c + term.c) += u * *term.v;
            }
          }
        }
    return out;
  }

  Series3& operator+=(const Series3& q) {
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += q.c_[k];
    return *this;
  }

  /// 1 + u + u^2 + ... for a series u without constant term.
  Series3 geometric() const {
    Series3 sum(X_, Y_, Z_);
    Series3 term(X_, Y_, Z_);
    term.at(0, 0, 0) = 1;
    // u has no constant term, so u^k vanishes once k exceeds X + Y + Z.
    for (int k = 0; k <= X_ + Y_ + Z_; ++k) {
      sum += term;
      term = term * *this;
    }
    return sum;
  }

 private:
  std::size_t index(int a, int b, int c) const {
    return static_cast<std::size_t>((a * (Y_ + 1) + b) * (Z_ + 1) + c);
  }

  int X_, Y_, Z_;
  std::vector<BigInt> c_;
};

}  // namespace

BigInt binom(long long a, long long b) {
  if (a < 0 || b < 0 || b > a) return 0;
  if (a < kPascalRows) return pascal()[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
  b = std::min(b, a - b);
  BigInt r = 1;
  for (long long k = 1; k <= b; ++k) {
    r *= a - b + k;
    r /= k;
  }
  return r;
}

BigInt beta_closed(int n, int t, int i, ClosedKind kind) {
  if (n < 2) throw InvalidParameter("closed Betti formula needs n >= 2");
  if (t < 0 || i < 0) return 0;
  switch (kind) {
    case ClosedKind::FullCycleN1:
      return binom(n - 1, i) * binom(n + t - i - 1, t - i);
    case ClosedKind::OmittedJn:
      return binom(n - 2, i) * binom(n + t - i - 2, t - i);
  }
  return 0;
}

PValue p_parts(int n, int s, int t, int i) {
  if (n < 2) throw InvalidParameter("p(n,s,t,i) needs n >= 2");
  const long long N = n, S = s, T = t, I = i;
  const long long k = N / 2;
  PValue out;
  for (long long j = 0; j <= floor_half(I); ++j) {
    out.plus += binom(N, I - 2 * j) *
                (binom(N + S + T - 1 - I + j, N - 1) - binom(N + S - 1 - I + j, N - 1));
  }
  const bool odd = N % 2 == 1;
  const long long top = odd ? floor_half(I - 1) : floor_half(I);
  for (long long j = 0; j <= top; ++j) {
    const long long lower = odd ? I - 1 - 2 * j : I - 2 * j;
    out.minus += binom(N, lower) * (binom(S + T + k - 1 - j, N - 1) - binom(S + k - 1 - j, N - 1));
  }
  out.constant = binom(N - 2, I) * binom(N + S - I - 2, N - 2);
  return out;
}

BigInt p_value(int n, int s, int t, int i) { return p_parts(n, s, t, i).value(); }

PdReg pd_reg_closed(int n, int s, int t, PowerKind kind) {
  if (n < 2) throw InvalidParameter("pd/reg formulas need n >= 2");
  if (t < 1) throw InvalidParameter("pd/reg formulas need t >= 1");
  if (kind == PowerKind::N1Power) return {std::min(n - 1, t), (n - 1) * t};
  if (s < 0) throw InvalidParameter("pd/reg formulas need s >= 0");
  const int cap = n % 2 == 1 ? n - 1 : n - 2;
  return {std::min(cap, 2 * (s + t)), (s + t) * (n - 2)};
}

GfTable::GfTable(int n_max, int t_max, int i_max)
    : n_max_(n_max), t_max_(t_max), i_max_(i_max) {
  if (n_max < 2 || t_max < 0 || i_max < 0) throw InvalidParameter("generating function table bounds");
  const int X = n_max - 2;
  const int t = t_max;
  const int i = i_max;
  Series3 u(X, t, i);  // x + y + xyz
  if (X >= 1) u.at(1, 0, 0) = 1;
  if (t >= 1) u.at(0, 1, 0) = 1;
  if (X >= 1 && t >= 1 && i >= 1) u.at(1, 1, 1) = 1;

  Series3 y_only(X, t, i);  // y
  if (t >= 1) y_only.at(0, 1, 0) = 1;

  Series3 numerator(X, t, i);  // 1 + yz
  numerator.at(0, 0, 0) = 1;
  if (t >= 1 && i >= 1) numerator.at(0, 1, 1) = 1;

  const Series3 phi = numerator * y_only.geometric() * u.geometric();
  coefficients_.reserve(static_cast<std::size_t>((X + 1) * (t + 1) * (i + 1)));
  for (int a = 0; a <= X; ++a)
    for (int b = 0; b <= t; ++b)
      for (int c = 0; c <= i; ++c) coefficients_.push_back(phi.at(a, b, c));
}

BigInt GfTable::at(int n, int t, int i) const {
  if (n < 2 || n > n_max_ || t > t_max_ || i > i_max_) {
    throw InvalidParameter("generating function coefficient outside the expanded range");
  }
  if (t < 0 || i < 0) return 0;
  return coefficients_[static_cast<std::size_t>(((n - 2) * (t_max_ + 1) + t) * (i_max_ + 1) + i)];
}

BigInt gf_coefficient(int n, int t, int i) {
  if (n < 2) throw InvalidParameter("generating function starts at n = 2");
  if (t < 0 || i < 0) return 0;
  return GfTable(n, t, i).at(n, t, i);
}

}  // namespace cyclebetti
