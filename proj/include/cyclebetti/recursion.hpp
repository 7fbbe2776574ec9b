#pragma once

// Recursive routes for the Betti numbers of the cycle path-ideal families.
//
//   e(n,s,t,i) = beta_i(I_{n-1}^s I_n^t)   ("n-1" notation)
//   b(n,s,t,i) = beta_i(J_n^s I_n^t)       ("n-2" notation)
//   c(n,s,t,i) = beta_i(J_n^s (x1,xn)^t)
//
// Values with a negative s, t or i are 0.

#include <cstdint>
#include <shared_mutex>
#include <unordered_map>

#include "cyclebetti/bigint.hpp"
#include "cyclebetti/families.hpp"

namespace cyclebetti {

enum class Route : std::uint8_t { E, B, C };

class RecursionEngine {
 public:
  /// `strict_delta` evaluates the c-recursion with the literal Delta(0,t)
  /// count (t+1 copies of (0,0)) instead of the chain-derived one.
  explicit RecursionEngine(bool strict_delta = false) : strict_delta_(strict_delta) {}

  RecursionEngine(const RecursionEngine&) = delete;
  RecursionEngine& operator=(const RecursionEngine&) = delete;

  BigInt e(int n, int s, int t, int i);
  BigInt b(int n, int s, int t, int i);
  BigInt c(int n, int s, int t, int i);

  bool strict_delta() const noexcept { return strict_delta_; }
  void clear();
  std::size_t memo_size() const;

 private:
  static std::uint64_t key(Route route, int n, int s, int t, int i);
  bool lookup(std::uint64_t k, BigInt& out) const;
  BigInt store(std::uint64_t k, BigInt value);

  BigInt b_tilde(int n, int s, int t, int i) { return b(n, s, t, i) + b(n, s, t, i - 1); }
  BigInt c_tilde(int n, int s, int t, int i) { return c(n, s, t, i) + c(n, s, t, i - 1); }

  bool strict_delta_;
  mutable std::shared_mutex mutex_;
  std::unordered_map<std::uint64_t, BigInt> memo_;
};

/// Shared engines, one per Delta convention.
RecursionEngine& default_engine(bool strict_delta = false);

BigInt e_rec(int n, int s, int t, int i);

enum class Which { B, C };
BigInt bc_rec(int n, int s, int t, int i, Which which, bool strict_delta = false);

/// Multiset union of Delta(a,b) over (a,b) in Lambda(s,t); s >= 0, t >= 1.
IndexPairMultiset expand_b_support(int s, int t);

enum class ResidualKind { SelfRec1, SelfRec2, PRec1, PRec2 };

/// Left minus right side of the self-recurrence; 0 when it holds.
/// Needs n >= 4, s >= 0, and t >= 2 for the Rec2 kinds. The Rec1 kinds
/// relate (s+1, 1) to (s, 1) and ignore t.
BigInt residual_check(ResidualKind kind, int n, int s, int t, int i);

/// pd(J_n^s I_n^t) by recursion on n - 2; n >= 2, s >= 0, t >= 1.
int pd_recursive(int n, int s, int t);

}  // namespace cyclebetti
