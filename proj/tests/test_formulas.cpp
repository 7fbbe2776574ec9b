#include "doctest.h"

#include "cyclebetti/errors.hpp"
#include "cyclebetti/formulas.hpp"
#include "support.hpp"

using namespace cyclebetti;
using testing_support::ref_binom;
using testing_support::Rng;

namespace {

long long floor_div2(long long x) { return x >= 0 ? x / 2 : -((-x + 1) / 2); }

/// The s = 0 formula for beta_i of powers of the (n-2)-path ideal, written
/// out separately for odd and even n.
BigInt n2_power_formula(int n, int t, int i) {
  const long long k = n / 2;
  BigInt v = 0;
  for (long long j = 0; j <= floor_div2(i); ++j) v += ref_binom(n, i - 2 * j) * ref_binom(n + t - 1 - i + j, n - 1);
  if (n % 2 == 1) {
    for (long long j = 0; j <= floor_div2(i - 1); ++j) v -= ref_binom(n, i - 1 - 2 * j) * ref_binom(t + k - 1 - j, n - 1);
  } else {
    for (long long j = 0; j <= floor_div2(i); ++j) v -= ref_binom(n, i - 2 * j) * ref_binom(t + k - 1 - j, n - 1);
  }
  return v;
}

}  // namespace

TEST_CASE("binomial coefficients") {
  CHECK(binom(5, 2) == 10);
  CHECK(binom(3, -1) == 0);
  CHECK(binom(2, 5) == 0);
  CHECK(binom(-1, 2) == 0);
  CHECK(binom(0, 0) == 1);
  CHECK(binom(103, 26) == ref_binom(103, 26));
  CHECK(binom(103, 26).str() == "1691326122665939594170812");
  for (long long a = 185; a <= 200; ++a)
    for (long long b = 0; b <= a; b += 7) CHECK(binom(a, b) == ref_binom(a, b));
  CHECK(binom(300, 150) == binom(299, 149) + binom(299, 150));
}

TEST_CASE("closed forms for J_{n,n-1}^t and J_n^s") {
  CHECK(beta_closed(3, 1, 0, ClosedKind::FullCycleN1) == 3);
  CHECK(beta_closed(3, 1, 1, ClosedKind::FullCycleN1) == 2);
  for (int n = 2; n <= 9; ++n)
    for (int t = 1; t <= 6; ++t)
      for (int i = std::min(n - 1, t) + 1; i <= n + 3; ++i) CHECK(beta_closed(n, t, i, ClosedKind::FullCycleN1) == 0);
  CHECK(beta_closed(4, 1, 0, ClosedKind::OmittedJn) == 3);
  CHECK(beta_closed(4, 1, 1, ClosedKind::OmittedJn) == 2);
  CHECK(beta_closed(4, 1, 2, ClosedKind::OmittedJn) == 0);
  CHECK(beta_closed(5, 0, 0, ClosedKind::FullCycleN1) == 1);
  CHECK(beta_closed(5, 3, -1, ClosedKind::FullCycleN1) == 0);
  CHECK_THROWS_AS(beta_closed(1, 1, 0, ClosedKind::FullCycleN1), InvalidParameter);
}

TEST_CASE("p(n,s,t,i)") {
  for (int s = 0; s <= 4; ++s)
    for (int t = 0; t <= 4; ++t)
      for (int i = -2; i <= 5; ++i) CHECK(p_value(2, s, t, i) == (i == 0 ? 1 : 0));
  CHECK(p_value(3, 1, 1, 0) == 5);
  // p(3,s,t,0) = t(t+1)/2 + (s+1)t + (s+1)
  for (int s = 0; s <= 6; ++s)
    for (int t = 0; t <= 6; ++t) CHECK(p_value(3, s, t, 0) == t * (t + 1) / 2 + (s + 1) * t + (s + 1));

  const std::vector<long long> row{27405, 98658, 136332, 89181, 27405, 3654, 378, 27, 1};
  for (int i = 0; i < 9; ++i) CHECK(p_value(27, 0, 4, i) == row[static_cast<std::size_t>(i)]);
  CHECK(p_value(27, 0, 4, 9) == 0);

  const PValue parts = p_parts(5, 1, 2, 2);
  CHECK(parts.value() == parts.plus - parts.minus + parts.constant);
  CHECK(parts.value() == p_value(5, 1, 2, 2));
  CHECK_THROWS_AS(p_value(1, 0, 1, 0), InvalidParameter);
}

TEST_CASE("p at s = 0 matches the separate odd and even formulas") {
  for (int n = 3; n <= 14; ++n)
    for (int t = 0; t <= 8; ++t)
      for (int i = 0; i <= n + 2; ++i) CHECK(p_value(n, 0, t, i) == n2_power_formula(n, t, i));
}

TEST_CASE("p at t = 0 is the J_n^s closed form") {
  for (int n = 3; n <= 12; ++n)
    for (int s = 1; s <= 8; ++s)
      for (int i = 0; i <= n + 2; ++i) CHECK(p_value(n, s, 0, i) == beta_closed(n, s, i, ClosedKind::OmittedJn));
}

TEST_CASE("pd and reg closed forms") {
  CHECK(pd_reg_closed(5, 0, 2, PowerKind::N1Power) == PdReg{2, 8});
  CHECK(pd_reg_closed(5, 7, 2, PowerKind::N1Power) == PdReg{2, 8});
  CHECK(pd_reg_closed(5, 0, 2, PowerKind::N2Power) == PdReg{4, 6});
  CHECK(pd_reg_closed(6, 0, 2, PowerKind::N2Power) == PdReg{4, 8});
  CHECK(pd_reg_closed(27, 0, 4, PowerKind::N2Power) == PdReg{8, 100});
  CHECK_THROWS_AS(pd_reg_closed(5, 0, 0, PowerKind::N2Power), InvalidParameter);
}

TEST_CASE("generating function coefficients") {
  for (int t = 0; t <= 6; ++t) {
    CHECK(gf_coefficient(2, t, 0) == t + 1);
    CHECK(gf_coefficient(2, t, 1) == t);
  }
  CHECK(gf_coefficient(3, 1, 1) == 2);
  CHECK(gf_coefficient(3, -1, 1) == 0);
  const GfTable table(8, 6, 9);
  for (int n = 2; n <= 8; ++n)
    for (int t = 0; t <= 6; ++t)
      for (int i = 0; i <= 9; ++i) {
        CHECK(table.at(n, t, i) == beta_closed(n, t, i, ClosedKind::FullCycleN1));
        // Three-term recurrence in the coefficients.
        if (n >= 3 && t >= 1) {
          CHECK(table.at(n, t, i) ==
                table.at(n, t - 1, i) + table.at(n - 1, t, i) + (i >= 1 ? table.at(n - 1, t - 1, i - 1) : BigInt(0)));
        }
      }
  CHECK(table.at(5, 3, 2) == gf_coefficient(5, 3, 2));
  CHECK_THROWS_AS(table.at(9, 0, 0), InvalidParameter);
  CHECK_THROWS_AS(gf_coefficient(1, 0, 0), InvalidParameter);
}

TEST_CASE("property: the four binomial identities on random triples") {
  Rng rng(2024);
  for (int k = 0; k < 1000; ++k) {
    const int n = rng.range(0, 60);
    const int m = rng.range(0, 60);
    const int s = rng.range(0, 60);
    CHECK(binom(n + 1, s + 1) == binom(n, s) + binom(n, s + 1));
    if (n >= 2) CHECK(binom(n - 2, m - 2) + 2 * binom(n - 2, m - 1) + binom(n - 2, m) == binom(n, m));
    BigInt plain = 0;
    BigInt weighted = 0;
    for (int j = 0; j <= s; ++j) {
      plain += binom(n + j, m);
      weighted += j * binom(n + j, m);
    }
    CHECK(plain == binom(n + s + 1, m + 1) - binom(n, m + 1));
    CHECK(weighted == s * binom(n + s + 1, m + 1) - binom(n + s + 1, m + 2) + binom(n + 1, m + 2));
  }
}
