#pragma once

// Closed-form Betti numbers of powers of path ideals of cycles.

#include <utility>
#include <vector>

#include "cyclebetti/bigint.hpp"

namespace cyclebetti {

/// binom(a, b) with the counting convention: 0 unless 0 <= b <= a.
BigInt binom(long long a, long long b);

enum class ClosedKind {
  /// beta_i(J_{n,n-1}^t) = binom(n-1, i) binom(n+t-i-1, t-i).
  FullCycleN1,
  /// beta_i(J_n^t) = binom(n-2, i) binom(n+t-i-2, t-i), J_n the (n-2)-path
  /// ideal with one generator omitted.
  OmittedJn,
};

/// t = 0 is accepted and gives the unit ideal (1 at i = 0).
BigInt beta_closed(int n, int t, int i, ClosedKind kind);

/// The three parts of p(n,s,t,i); value() = plus - minus + constant.
struct PValue {
  BigInt plus;
  BigInt minus;
  BigInt constant;
  BigInt value() const { return plus - minus + constant; }
};

/// Closed form for beta_i(J_n^s I_n^t) in "n-2" notation. The result is
/// signed and never clamped; a negative value means a bug upstream.
PValue p_parts(int n, int s, int t, int i);
BigInt p_value(int n, int s, int t, int i);

enum class PowerKind {
  /// J_{n,n-1}^t; s is ignored.
  N1Power,
  /// J_n^s I_n^t in "n-2" notation (J_{n,n-2}^t at s = 0).
  N2Power,
};

struct PdReg {
  int pd = 0;
  int reg = 0;
  friend bool operator==(const PdReg&, const PdReg&) = default;
};

PdReg pd_reg_closed(int n, int s, int t, PowerKind kind);

/// Coefficient of x^{n-2} y^t z^i in (1 + yz) / ((1 - y)(1 - x - y - xyz)).
BigInt gf_coefficient(int n, int t, int i);

/// All coefficients up to (n_max, t_max, i_max) from a single expansion.
class GfTable {
 public:
  GfTable(int n_max, int t_max, int i_max);
  BigInt at(int n, int t, int i) const;

 private:
  int n_max_, t_max_, i_max_;
  std::vector<BigInt> coefficients_;
};

}  // namespace cyclebetti
