#include "doctest.h"

#include "cyclebetti/errors.hpp"
#include "cyclebetti/families.hpp"

using namespace cyclebetti;

namespace {

Monomial x(std::size_t n, std::size_t k) { return Monomial::variable(n, k - 1); }

MonomialIdeal ideal(std::size_t n, std::vector<Monomial> gens) {
  return MonomialIdeal::from_generators(n, std::move(gens));
}

IndexPairMultiset multiset(std::initializer_list<std::pair<IndexPair, std::uint64_t>> items) {
  IndexPairMultiset out;
  for (const auto& [p, m] : items) out.add(p, m);
  return out;
}

}  // namespace

TEST_CASE("path ideals of cycles") {
  CHECK(to_string(path_ideal_cycle(5, 3)) == "(x1*x2*x3, x1*x2*x5, x1*x4*x5, x2*x3*x4, x3*x4*x5)");
  CHECK(path_ideal_cycle(5, 5).size() == 1);
  CHECK(path_ideal_cycle(3, 2) == ideal(3, {x(3, 1) * x(3, 2), x(3, 2) * x(3, 3), x(3, 1) * x(3, 3)}));
  for (int n = 3; n <= 9; ++n) CHECK(path_ideal_cycle(n, n - 1).size() == static_cast<std::size_t>(n));
  CHECK_THROWS_AS(path_ideal_cycle(4, 1), InvalidParameter);
  CHECK_THROWS_AS(path_ideal_cycle(4, 5), InvalidParameter);
}

TEST_CASE("I_n and J_n in n-2 notation") {
  const auto four = short_path_ideals(4);
  CHECK(four.I == path_ideal_cycle(4, 2));
  CHECK(four.J.size() == 3);
  CHECK_FALSE(four.J.contains(x(4, 2) * x(4, 3)));
  const auto two = short_path_ideals(2);
  CHECK(two.I.is_unit());
  CHECK(two.J.is_unit());
  const auto three = short_path_ideals(3);
  CHECK(three.I == ideal(3, {x(3, 1), x(3, 2), x(3, 3)}));
  CHECK(three.J == ideal(3, {x(3, 1), x(3, 3)}));
  const auto five = short_path_ideals(5);
  CHECK(five.I.size() == 5);
  CHECK(five.J.size() == 4);
  CHECK(five.I.initial_degree() == 3);
  CHECK_THROWS_AS(short_path_ideals(1), InvalidParameter);
  // Embedded copy keeps x1..x4 and adds x5.
  CHECK(short_path_ideals(4, 5).J == extend_ambient(four.J, 5));
}

TEST_CASE("I_n in n-1 notation") {
  CHECK(cycle_n1_ideal(1).is_unit());
  CHECK(cycle_n1_ideal(2) == ideal(2, {x(2, 1), x(2, 2)}));
  CHECK(cycle_n1_ideal(5) == path_ideal_cycle(5, 4));
}

TEST_CASE("named families") {
  CHECK(build_family(family::B{4, 0, 1}) == short_path_ideals(4).I);
  CHECK(build_family(family::B{5, 2, 0}) == ideal_power(short_path_ideals(5).J, 2));
  for (int t = 1; t <= 4; ++t) {
    const auto c = build_family(family::C{5, 0, t});
    CHECK(c.size() == static_cast<std::size_t>(t + 1));
    CHECK(c == ideal_power(ideal(5, {x(5, 1), x(5, 5)}), static_cast<std::uint64_t>(t)));
  }
  CHECK(build_family(family::PathCycle{6, 3}) == path_ideal_cycle(6, 3));
  CHECK(describe(family::B{4, 1, 2}) == "B(4,1,2)");
  CHECK_THROWS_AS(build_family(family::B{4, -1, 0}), InvalidParameter);
}

TEST_CASE("K and L components") {
  const std::size_t n = 4;
  const Monomial f1 = x(n, 1) * x(n, 2);
  const Monomial f2 = x(n, 2) * x(n, 3);
  CHECK(decomposition_component(4, 1, 1, 1, Component::K) == ideal(n, {f1, f2}));
  CHECK(decomposition_component(4, 0, 2, 1, Component::L) == ideal(n, {x(n, 1)}));
  CHECK(decomposition_component(4, 2, 1, 3, Component::K).is_unit());
  CHECK_THROWS_AS(decomposition_component(4, 1, 1, 3, Component::K), InvalidParameter);
}

TEST_CASE("B and C decompose along powers of x_n") {
  for (int n = 3; n <= 6; ++n) {
    const auto amb = static_cast<std::size_t>(n);
    const auto Jprev = short_path_ideals(n - 1, n).J;
    for (int s = 0; s <= 2; ++s)
      for (int t = 0; t <= 2; ++t) {
        MonomialIdeal b = MonomialIdeal::zero(amb);
        MonomialIdeal c = MonomialIdeal::zero(amb);
        for (int d = 0; d <= s + t; ++d) {
          const Monomial xd = pow(x(amb, amb), static_cast<std::uint64_t>(d));
          const auto K = decomposition_component(n, s, t, d, Component::K);
          b = ideal_sum(b, ideal_product(xd, ideal_product(K, ideal_power(Jprev, static_cast<std::uint64_t>(d)))));
          c = ideal_sum(c, ideal_product(xd, decomposition_component(n, s, t, d, Component::L)));
        }
        CHECK(b == build_family(family::B{n, s, t}));
        CHECK(c == build_family(family::C{n, s, t}));
      }
  }
}

TEST_CASE("f_1 + x_1 J_{n-1} = x_1 I_{n-1}") {
  for (int n = 4; n <= 8; ++n) {
    const auto amb = static_cast<std::size_t>(n);
    const auto prev = short_path_ideals(n - 1, n);
    Monomial f1(amb);
    for (int k = 1; k <= n - 2; ++k) f1 = f1 * x(amb, static_cast<std::size_t>(k));
    CHECK(ideal_sum(ideal(amb, {f1}), ideal_product(x(amb, 1), prev.J)) == ideal_product(x(amb, 1), prev.I));
  }
}

TEST_CASE("chains") {
  for (int n = 3; n <= 6; ++n)
    for (int s = 0; s <= 2; ++s)
      for (int t = 0; t <= 2; ++t) {
        if (s + t > 3) continue;
        CHECK(chain_ideal(n, s, t, 0, Chain::M) == build_family(family::B{n, s, t}));
        CHECK(chain_ideal(n, s, t, 0, Chain::N) == build_family(family::C{n, s, t}));
        const auto Jprev = short_path_ideals(n - 1, n).J;
        CHECK(chain_ideal(n, s, t, s + t, Chain::M) ==
              ideal_power(Jprev, static_cast<std::uint64_t>(s + t)));
        const Monomial xn = x(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
        for (int j = 0; j < s + t; ++j) {
          const auto m = m_chain_splitting(n, s, t, j);
          CHECK(m.whole == ideal_sum(m.first, m.second));
          CHECK(ideal_intersection(m.first, m.second) == ideal_product(xn, m.first));
          const auto c = n_chain_splitting(n, s, t, j);
          CHECK(c.whole == ideal_sum(c.first, c.second));
          CHECK(ideal_intersection(c.first, c.second) == ideal_product(xn, c.first));
        }
      }
  CHECK_THROWS_AS(chain_ideal(4, 1, 1, 3, Chain::M), InvalidParameter);
}

TEST_CASE("splittings of E and A") {
  for (int n = 3; n <= 6; ++n)
    for (int s = 0; s <= 2; ++s)
      for (int t = 1; t <= 2; ++t) {
        const Monomial xn = x(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
        for (const auto& split : {e_splitting(n, s, t), a_splitting(n, s, t)}) {
          CHECK(split.whole == ideal_sum(split.first, split.second));
          CHECK(ideal_intersection(split.first, split.second) == ideal_product(xn, split.first));
        }
      }
  // I_4 = (f1) + x4 I_3 at s = 0, t = 1.
  const auto e = e_splitting(4, 0, 1);
  CHECK(e.whole == path_ideal_cycle(4, 3));
  CHECK(e.whole.size() == 4);
}

TEST_CASE("index sets") {
  CHECK(index_set(2, 2, IndexSetKind::Lambda) == multiset({{{0, 2}, 1}, {{1, 2}, 1}, {{2, 2}, 1}, {{3, 1}, 1}}));
  CHECK(index_set(0, 2, IndexSetKind::Delta) == multiset({{{0, 0}, 2}}));
  CHECK(index_set(0, 2, IndexSetKind::Delta, DeltaConvention::Literal) == multiset({{{0, 0}, 3}}));
  CHECK(index_set(0, 1, IndexSetKind::Delta) == multiset({{{0, 0}, 1}}));
  CHECK(index_set(2, 1, IndexSetKind::Gamma) == multiset({{{0, 0}, 1}, {{0, 1}, 1}, {{1, 1}, 1}}));
  CHECK(index_set(3, 1, IndexSetKind::Delta) == multiset({{{0, 0}, 1}, {{0, 1}, 1}, {{1, 1}, 1}, {{2, 1}, 1}}));
  CHECK(index_set(2, 4, IndexSetKind::Delta) == multiset({{{0, 0}, 1}, {{0, 1}, 1}, {{0, 2}, 3}, {{1, 1}, 1}}));
  CHECK_THROWS_AS(index_set(1, 0, IndexSetKind::Lambda), InvalidParameter);
  CHECK_THROWS_AS(index_set(1, 0, IndexSetKind::Delta), InvalidParameter);
  CHECK(to_string(multiset({{{0, 0}, 2}, {{1, 1}, 1}})) == "{(0,0)^2, (1,1)}");

  for (int s = 0; s <= 8; ++s)
    for (int t = 1; t <= 8; ++t) {
      CHECK(index_set(s, t, IndexSetKind::Lambda).total() == static_cast<std::uint64_t>(s + t));
      CHECK(index_set(s, t, IndexSetKind::Delta).total() == static_cast<std::uint64_t>(s + t));
      const auto gamma = index_set(s, t, IndexSetKind::Gamma);
      for (const auto& [ab, m] : index_set(s, t, IndexSetKind::Lambda)) {
        for (const auto& [uv, k] : index_set(ab.a, ab.b, IndexSetKind::Delta)) CHECK(gamma.contains(uv));
      }
    }
}
