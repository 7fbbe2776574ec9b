#pragma once

// Seeded generators and small independent reference computations for tests.

#include <cstdint>
#include <vector>

#include "cyclebetti/bigint.hpp"
#include "cyclebetti/monomial.hpp"

namespace testing_support {

/// SplitMix64; deterministic across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [lo, hi].
  int range(int lo, int hi) { return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1)); }

 private:
  std::uint64_t state_;
};

inline cyclebetti::Monomial random_monomial(Rng& rng, std::size_t ambient, int max_exp) {
  std::vector<cyclebetti::Exponent> e(ambient);
  for (auto& x : e) x = static_cast<cyclebetti::Exponent>(rng.range(0, max_exp));
  return cyclebetti::Monomial(std::move(e));
}

/// Nonzero, non-unit ideal with up to `max_gens` generators.
inline cyclebetti::MonomialIdeal random_ideal(Rng& rng, std::size_t ambient, int max_gens, int max_exp) {
  while (true) {
    std::vector<cyclebetti::Monomial> gens;
    const int k = rng.range(1, max_gens);
    for (int g = 0; g < k; ++g) gens.push_back(random_monomial(rng, ambient, max_exp));
    auto ideal = cyclebetti::MonomialIdeal::from_generators(ambient, std::move(gens));
    if (!ideal.is_unit()) return ideal;
  }
}

/// All monomials of `ambient` variables with every exponent <= bound.
inline std::vector<cyclebetti::Monomial> box(std::size_t ambient, int bound) {
  std::vector<cyclebetti::Monomial> out;
  std::vector<cyclebetti::Exponent> e(ambient, 0);
  while (true) {
    out.emplace_back(e);
    std::size_t k = 0;
    while (k < ambient && e[k] == static_cast<cyclebetti::Exponent>(bound)) e[k++] = 0;
    if (k == ambient) break;
    ++e[k];
  }
  return out;
}

/// Exact binomial coefficient by the multiplicative formula, 0 outside 0 <= b <= a.
inline cyclebetti::BigInt ref_binom(long long a, long long b) {
  if (a < 0 || b < 0 || b > a) return 0;
  cyclebetti::BigInt r = 1;
  for (long long k = 1; k <= b; ++k) r = r * (a - b + k) / k;
  return r;
}

}  // namespace testing_support
