#include "cyclebetti/recursion.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <string>
#include <tuple>

#include "cyclebetti/errors.hpp"
#include "cyclebetti/formulas.hpp"

namespace cyclebetti {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw InvalidParameter(message);
}

BigInt checked(BigInt value, const char* route, int n, int s, int t, int i) {
  if (value < 0) {
    throw InternalFault(std::string(route) + "(" + std::to_string(n) + "," + std::to_string(s) + "," +
                        std::to_string(t) + "," + std::to_string(i) + ") evaluated negative");
  }
  return value;
}

}  // namespace

std::uint64_t RecursionEngine::key(Route route, int n, int s, int t, int i) {
  auto field = [](int v) { return static_cast<std::uint64_t>(static_cast<std::uint16_t>(v)); };
  return static_cast<std::uint64_t>(route) << 60 | field(n) << 45 | field(s) << 30 | field(t) << 15 | field(i);
}

bool RecursionEngine::lookup(std::uint64_t k, BigInt& out) const {
  std::shared_lock lock(mutex_);
  auto it = memo_.find(k);
  if (it == memo_.end()) return false;
  out = it->second;
  return true;
}

BigInt RecursionEngine::store(std::uint64_t k, BigInt value) {
  std::unique_lock lock(mutex_);
  memo_.try_emplace(k, value);
  return value;
}

void RecursionEngine::clear() {
  std::unique_lock lock(mutex_);
  memo_.clear();
}

std::size_t RecursionEngine::memo_size() const {
  std::shared_lock lock(mutex_);
  return memo_.size();
}

namespace {

void require_key_range(int n, int s, int t, int i) {
  require(n >= 2, "recursion needs n >= 2");
  require(n < (1 << 14) && s < (1 << 14) && t < (1 << 14) && i < (1 << 14),
          "recursion parameters exceed the memo key range");
}

}  // namespace

BigInt RecursionEngine::e(int n, int s, int t, int i) {
  require_key_range(n, s, t, i);
  if (s < 0 || t < 0 || i < 0) return 0;
  if (n == 2) {
    if (i == 0) return t + 1;
    if (i == 1) return t;
    return 0;
  }
  const std::uint64_t k = key(Route::E, n, s, t, i);
  BigInt value;
  if (lookup(k, value)) return value;
  if (t == 0) {
    value = e(n - 1, 0, s, i);
  } else {
    value = e(n, s, 0, i) + e(n, s + 1, t - 1, i) + e(n, s, 0, i - 1);
  }
  return store(k, checked(std::move(value), "e", n, s, t, i));
}

BigInt RecursionEngine::b(int n, int s, int t, int i) {
  require_key_range(n, s, t, i);
  if (s < 0 || t < 0 || i < 0) return 0;
  if (n == 2) return i == 0 ? 1 : 0;
  if (t == 0) return beta_closed(n, s, i, ClosedKind::OmittedJn);
  const std::uint64_t k = key(Route::B, n, s, t, i);
  BigInt value;
  if (lookup(k, value)) return value;
  value = b(n - 1, s + t, 0, i);
  for (const auto& [pair, mult] : index_set(s, t, IndexSetKind::Lambda)) {
    value += c_tilde(n - 1, pair.a, pair.b, i) * mult;
  }
  return store(k, checked(std::move(value), "b", n, s, t, i));
}

BigInt RecursionEngine::c(int n, int s, int t, int i) {
  require_key_range(n, s, t, i);
  if (s < 0 || t < 0 || i < 0) return 0;
  if (n == 2) {
    if (i == 0) return t + 1;
    if (i == 1) return t;
    return 0;
  }
  if (t == 0) return beta_closed(n, s, i, ClosedKind::OmittedJn);
  const std::uint64_t k = key(Route::C, n, s, t, i);
  BigInt value;
  if (lookup(k, value)) return value;
  const auto convention = strict_delta_ ? DeltaConvention::Literal : DeltaConvention::ChainDerived;
  value = b(n - 1, s, 0, i);
  for (const auto& [pair, mult] : index_set(s, t, IndexSetKind::Delta, convention)) {
    value += b_tilde(n - 1, pair.a, pair.b, i) * mult;
  }
  return store(k, checked(std::move(value), "c", n, s, t, i));
}

RecursionEngine& default_engine(bool strict_delta) {
  static RecursionEngine chain(false);
  static RecursionEngine literal(true);
  return strict_delta ? literal : chain;
}

BigInt e_rec(int n, int s, int t, int i) { return default_engine().e(n, s, t, i); }

BigInt bc_rec(int n, int s, int t, int i, Which which, bool strict_delta) {
  RecursionEngine& engine = default_engine(strict_delta);
  return which == Which::B ? engine.b(n, s, t, i) : engine.c(n, s, t, i);
}

IndexPairMultiset expand_b_support(int s, int t) {
  require(s >= 0 && t >= 1, "expand_b_support needs s >= 0, t >= 1");
  IndexPairMultiset out;
  for (const auto& [pair, mult] : index_set(s, t, IndexSetKind::Lambda)) {
    out.add(index_set(pair.a, pair.b, IndexSetKind::Delta), mult);
  }
  return out;
}

namespace {

template <class F>
BigInt tilde(F&& f, int n, int s, int t, int i) {
  return f(n, s, t, i) + f(n, s, t, i - 1);
}

template <class F>
BigInt dbtilde(F&& f, int n, int s, int t, int i) {
  return f(n, s, t, i) + 2 * f(n, s, t, i - 1) + f(n, s, t, i - 2);
}

template <class F>
BigInt rec1_residual(F&& f, int n, int s, int i) {
  BigInt rhs = f(n, s, 1, i) + f(n - 1, s + 2, 0, i) - f(n - 1, s + 1, 0, i) + tilde(f, n - 2, s + 1, 0, i) +
               dbtilde(f, n - 2, 0, 0, i);
  for (int j = 0; j <= s; ++j) rhs += dbtilde(f, n - 2, j, 1, i);
  return f(n, s + 1, 1, i) - rhs;
}

template <class F>
BigInt rec2_residual(F&& f, int n, int s, int t, int i) {
  BigInt rhs = 0;
  if (s <= t) {
    for (int j = 0; j <= s; ++j) rhs += dbtilde(f, n - 2, 0, j, i);
  } else {
    for (int j = 0; j <= t - 1; ++j) rhs += dbtilde(f, n - 2, 0, j, i);
    rhs += (s - t + 1) * dbtilde(f, n - 2, 0, t, i);
    for (int l = 1; l <= s - t; ++l) {
      rhs += (s - t + 1 - l) * (dbtilde(f, n - 2, l, t, i) - dbtilde(f, n - 2, l, t - 1, i));
    }
  }
  return f(n, s, t, i) - f(n, s + 1, t - 1, i) - rhs;
}

}  // namespace

BigInt residual_check(ResidualKind kind, int n, int s, int t, int i) {
  require(n >= 4, "self-recurrences need n >= 4");
  require(s >= 0, "self-recurrences need s >= 0");
  const bool second = kind == ResidualKind::SelfRec2 || kind == ResidualKind::PRec2;
  if (second) require(t >= 2, "the second self-recurrence needs t >= 2");

  auto b = [](int n_, int s_, int t_, int i_) { return default_engine().b(n_, s_, t_, i_); };
  // p is extended by 0 to negative arguments, as b is.
  auto p = [](int n_, int s_, int t_, int i_) -> BigInt {
    if (s_ < 0 || t_ < 0 || i_ < 0) return 0;
    return p_value(n_, s_, t_, i_);
  };
  switch (kind) {
    case ResidualKind::SelfRec1: return rec1_residual(b, n, s, i);
    case ResidualKind::SelfRec2: return rec2_residual(b, n, s, t, i);
    case ResidualKind::PRec1: return rec1_residual(p, n, s, i);
    case ResidualKind::PRec2: return rec2_residual(p, n, s, t, i);
  }
  return 0;
}

namespace {

int pd_recursive_impl(int n, int s, int t, std::map<std::tuple<int, int, int>, int>& memo) {
  if (n == 2) return 0;
  if (n == 3) return 2;
  const auto k = std::make_tuple(n, s, t);
  if (auto it = memo.find(k); it != memo.end()) return it->second;
  int q = -1;
  for (const auto& [pair, mult] : expand_b_support(s, t)) {
    if (mult == 0) continue;
    // J_{n-2}^u has a linear resolution of length min(n-4, u).
    const int sub = pair.b == 0 ? std::min(n - 4, pair.a) : pd_recursive_impl(n - 2, pair.a, pair.b, memo);
    q = std::max(q, sub);
  }
  const int value = std::max(std::min(n - 3, s + t), q + 2);
  memo.emplace(k, value);
  return value;
}

}  // namespace

int pd_recursive(int n, int s, int t) {
  require(n >= 2, "pd_recursive needs n >= 2");
  require(s >= 0 && t >= 1, "pd_recursive needs s >= 0, t >= 1");
  std::map<std::tuple<int, int, int>, int> memo;
  return pd_recursive_impl(n, s, t, memo);
}

}  // namespace cyclebetti
