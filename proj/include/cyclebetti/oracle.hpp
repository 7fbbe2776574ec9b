#pragma once

// Ground-truth Betti numbers of an arbitrary monomial ideal.
//
// beta_{i,b}(I) = dim H~_{i-1}(K^b(I); GF(p)) where K^b(I) is the upper
// Koszul simplicial complex {squarefree tau : x^{b-tau} in I}, and only
// multidegrees b in the lcm lattice of I can contribute.

#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "cyclebetti/bigint.hpp"
#include "cyclebetti/monomial.hpp"

namespace cyclebetti {

inline constexpr std::size_t kDefaultLatticeCap = 200000;
inline constexpr std::uint64_t kDefaultPrime = 32003;

bool is_prime(std::uint64_t p);

/// Joins of nonempty subsets of the minimal generators, in canonical order.
class LcmLattice {
 public:
  explicit LcmLattice(std::vector<Monomial> elements) : elements_(std::move(elements)) {}

  const std::vector<Monomial>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool contains(const Monomial& m) const;

 private:
  std::vector<Monomial> elements_;
};

/// Throws InvalidParameter on the zero or unit ideal, ResourceCapExceeded
/// once more than `cap` elements have been produced.
LcmLattice lcm_lattice(const MonomialIdeal& ideal, std::size_t cap = kDefaultLatticeCap);

using Face = std::vector<std::size_t>;

/// A downward-closed family of faces grouped by dimension. Slot 0 holds the
/// empty face (dimension -1) when present; a void complex has no slots.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  SimplicialComplex(std::vector<std::size_t> vertices, std::vector<std::vector<Face>> by_dim);

  const std::vector<std::size_t>& vertices() const noexcept { return vertices_; }
  bool is_void() const noexcept { return faces_.empty(); }
  /// Largest face dimension; -2 for the void complex.
  int dimension() const noexcept { return static_cast<int>(faces_.size()) - 2; }
  /// Faces of dimension `dim` (>= -1), sorted.
  const std::vector<Face>& faces(int dim) const;
  std::size_t face_count(int dim) const;
  std::size_t total_faces() const;

 private:
  std::vector<std::size_t> vertices_;
  std::vector<std::vector<Face>> faces_;
};

SimplicialComplex upper_koszul(const MonomialIdeal& ideal, const Monomial& b);

/// Rank of a dense matrix over GF(p); entries must already be reduced mod p.
std::size_t rank_mod_p(std::vector<std::vector<std::uint32_t>> rows, std::uint64_t p);

/// dims[k] = dim H~_{k-1}(complex; GF(p)) for k = 0..dimension()+1.
/// The void complex yields an empty vector.
std::vector<std::uint64_t> homology_dims(const SimplicialComplex& complex, std::uint64_t p);

class GradedBettiTable {
 public:
  using Key = std::pair<int, int>;  // (i, j)

  void add(int i, int j, const BigInt& value);
  BigInt at(int i, int j) const;
  BigInt total(int i) const;
  /// total(0), ..., total(pd()).
  std::vector<BigInt> totals() const;
  /// Largest i with a nonzero entry; -1 when empty.
  int pd() const;
  /// Largest j - i over nonzero entries; throws on an empty table.
  int reg() const;
  /// Smallest j - i over nonzero entries; throws on an empty table.
  int min_row() const;
  bool empty() const noexcept { return entries_.empty(); }
  /// All nonzero entries lie on the single row j - i = d.
  bool is_linear(int d) const;

  const std::map<Key, BigInt>& entries() const noexcept { return entries_; }

  /// Totals placed on the row j - i = degree, as for an ideal with a linear
  /// resolution generated in `degree`.
  static GradedBettiTable linear(const std::vector<BigInt>& totals, int degree);

  friend bool operator==(const GradedBettiTable&, const GradedBettiTable&) = default;

 private:
  std::map<Key, BigInt> entries_;
};

struct OracleOptions {
  std::uint64_t prime = kDefaultPrime;
  std::size_t lattice_cap = kDefaultLatticeCap;
  /// Worker threads for the per-multidegree homology; results do not depend
  /// on this value.
  unsigned threads = 1;
};

GradedBettiTable graded_betti(const MonomialIdeal& ideal, const OracleOptions& options = {});

}  // namespace cyclebetti
