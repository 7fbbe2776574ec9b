#pragma once

// Exact monomial and monomial-ideal arithmetic.
//
// A MonomialIdeal always holds its minimal generating set in canonical
// order (total degree ascending, then exponent vectors descending, so
// x1 sorts before x2), which makes structural equality ideal equality.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace cyclebetti {

using Exponent = std::uint32_t;

/// Largest exponent accepted; anything above is rejected instead of wrapping.
inline constexpr std::uint64_t kMaxExponent = std::uint64_t{1} << 31;

class Monomial {
 public:
  Monomial() = default;

  /// The unit monomial 1 in `ambient` variables.
  explicit Monomial(std::size_t ambient);
  explicit Monomial(std::vector<Exponent> exponents);
  Monomial(std::initializer_list<Exponent> exponents);

  /// x_{index+1}^power in `ambient` variables (index is 0-based).
  static Monomial variable(std::size_t ambient, std::size_t index, Exponent power = 1);

  std::size_t ambient() const noexcept { return exps_.size(); }
  std::span<const Exponent> exponents() const noexcept { return exps_; }
  Exponent operator[](std::size_t k) const { return exps_[k]; }
  std::uint64_t degree() const noexcept { return degree_; }
  bool is_unit() const noexcept { return degree_ == 0; }

  /// Indices k with exponent > 0.
  std::vector<std::size_t> support() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

  /// Canonical order: lower degree first, then larger exponent vector first.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

 private:
  std::vector<Exponent> exps_;
  std::uint64_t degree_ = 0;
};

bool divides(const Monomial& a, const Monomial& b);
Monomial lcm_of(const Monomial& a, const Monomial& b);
Monomial gcd_of(const Monomial& a, const Monomial& b);
Monomial operator*(const Monomial& a, const Monomial& b);
Monomial pow(const Monomial& m, std::uint64_t power);

/// `x1^2*x3`; the unit monomial prints as `1`.
std::string to_string(const Monomial& m);
std::ostream& operator<<(std::ostream& os, const Monomial& m);

class MonomialIdeal {
 public:
  MonomialIdeal() = default;

  /// The zero ideal of the ring with `ambient` variables.
  explicit MonomialIdeal(std::size_t ambient) : ambient_(ambient) {}

  static MonomialIdeal unit(std::size_t ambient);
  static MonomialIdeal zero(std::size_t ambient) { return MonomialIdeal(ambient); }

  /// Minimal-generator constructor; accepts any (possibly redundant) list.
  static MonomialIdeal from_generators(std::size_t ambient, std::vector<Monomial> gens);

  std::size_t ambient() const noexcept { return ambient_; }
  const std::vector<Monomial>& generators() const noexcept { return gens_; }
  std::size_t size() const noexcept { return gens_.size(); }
  bool is_zero() const noexcept { return gens_.empty(); }
  bool is_unit() const noexcept { return gens_.size() == 1 && gens_.front().is_unit(); }

  bool contains(const Monomial& m) const;
  /// Every generator of `other` lies in this ideal.
  bool contains(const MonomialIdeal& other) const;

  /// Smallest generator degree; 0 for the unit ideal. Throws on the zero ideal.
  std::uint64_t initial_degree() const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;
  friend MonomialIdeal minimalize(std::vector<Monomial> gens, std::size_t ambient);

 private:
  std::size_t ambient_ = 0;
  std::vector<Monomial> gens_;
};

/// Removes non-minimal generators and duplicates, then sorts canonically.
/// The ambient is taken from the generators; an empty list yields the zero
/// ideal of `ambient`.
MonomialIdeal minimalize(std::vector<Monomial> gens, std::size_t ambient = 0);

MonomialIdeal ideal_product(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal ideal_power(const MonomialIdeal& a, std::uint64_t power);
MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal ideal_intersection(const MonomialIdeal& a, const MonomialIdeal& b);
bool ideal_equals(const MonomialIdeal& a, const MonomialIdeal& b);

/// m * I.
MonomialIdeal ideal_product(const Monomial& m, const MonomialIdeal& a);

/// Re-embeds an ideal into a ring with at least as many variables,
/// keeping x_1..x_k verbatim.
MonomialIdeal extend_ambient(const MonomialIdeal& a, std::size_t ambient);

/// `(x1*x2, x2*x3)`; the zero ideal prints as `(0)`.
std::string to_string(const MonomialIdeal& ideal);
std::ostream& operator<<(std::ostream& os, const MonomialIdeal& ideal);

}  // namespace cyclebetti
