#pragma once

// Constructors for the path-ideal families of cycles and the auxiliary
// ideals that appear in their Betti splittings.
//
// Two notations coexist:
//  * "n-1" notation: I_n = J_{n,n-1}, the cyclic (n-1)-products; I_1 is the
//    unit ideal and I_2 = (x1, x2).
//  * "n-2" notation: f_i the cyclic (n-2)-products, I_n = (f_1..f_n),
//    J_n = I_n without f_2; I_2 = J_2 is the unit ideal.
// Smaller-index ideals (I_{n-1}, J_{n-1}) are embedded in the n-variable
// ring on x1..x_{n-1} verbatim.

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "cyclebetti/monomial.hpp"

namespace cyclebetti {

struct IndexPair {
  int a = 0;
  int b = 0;
  friend auto operator<=>(const IndexPair&, const IndexPair&) = default;
};

/// Finite multiset of nonnegative integer pairs.
class IndexPairMultiset {
 public:
  using Storage = std::map<IndexPair, std::uint64_t>;

  void add(IndexPair p, std::uint64_t multiplicity = 1);
  void add(const IndexPairMultiset& other, std::uint64_t scale = 1);

  std::uint64_t count(IndexPair p) const;
  bool contains(IndexPair p) const { return count(p) > 0; }
  /// Sum of multiplicities.
  std::uint64_t total() const;
  std::size_t distinct() const { return counts_.size(); }
  std::vector<IndexPair> support() const;

  Storage::const_iterator begin() const { return counts_.begin(); }
  Storage::const_iterator end() const { return counts_.end(); }

  friend bool operator==(const IndexPairMultiset&, const IndexPairMultiset&) = default;

 private:
  Storage counts_;
};

std::string to_string(const IndexPairMultiset& set);

namespace family {
struct PathCycle { int n; int m; };
/// I_n = J_{n,n-2}.
struct CycleI { int n; };
/// J_n: I_n without the generator f_2 = x_2...x_{n-1}.
struct OmittedJ { int n; };
/// J_n^s I_n^t ("n-2" notation).
struct B { int n; int s; int t; };
/// J_n^s (x_1, x_n)^t.
struct C { int n; int s; int t; };
/// J_{n-1}^s J_n^t.
struct A { int n; int s; int t; };
/// I_{n-1}^s I_n^t in "n-1" notation.
struct E { int n; int s; int t; };
/// x_n-graded components of B (K_d) and C (L_d).
struct K { int n; int s; int t; int d; };
struct L { int n; int s; int t; int d; };
/// Chain ideals with M_0 = B and N_0 = C.
struct M { int n; int s; int t; int j; };
struct N { int n; int s; int t; int j; };
}  // namespace family

using FamilyKind = std::variant<family::PathCycle, family::CycleI, family::OmittedJ,
                                family::B, family::C, family::A, family::E, family::K,
                                family::L, family::M, family::N>;

std::string describe(const FamilyKind& kind);

/// J_{n,m}: the n cyclic products x_i..x_{i+m-1}. Requires 2 <= m <= n.
MonomialIdeal path_ideal_cycle(int n, int m);

struct ShortPathIdeals {
  MonomialIdeal I;
  MonomialIdeal J;
};

/// (I_n, J_n) in "n-2" notation, in `ambient` variables (default n).
ShortPathIdeals short_path_ideals(int n, int ambient = 0);

/// I_n in "n-1" notation, in `ambient` variables (default max(n,1)).
MonomialIdeal cycle_n1_ideal(int n, int ambient = 0);

MonomialIdeal build_family(const FamilyKind& kind);

enum class Component { K, L };
enum class Chain { M, N };

MonomialIdeal decomposition_component(int n, int s, int t, int d, Component which);
MonomialIdeal chain_ideal(int n, int s, int t, int j, Chain which);

enum class IndexSetKind { Lambda, Delta, Gamma };

/// How Delta(0, t) is counted: the chain of x_n-graded components gives t
/// copies of (0,0); the literal two-case listing gives t+1.
enum class DeltaConvention { ChainDerived, Literal };

IndexPairMultiset index_set(int s, int t, IndexSetKind kind,
                            DeltaConvention convention = DeltaConvention::ChainDerived);

/// P = I + J with named parts, used by the splitting audits.
struct SplitTriple {
  MonomialIdeal whole;
  MonomialIdeal first;
  MonomialIdeal second;
};

/// I_{n-1}^s I_n^t = I_{n-1}^s (f_1^t) + x_n I_{n-1}^{s+1} I_n^{t-1}, t >= 1.
SplitTriple e_splitting(int n, int s, int t);
/// J_{n-1}^s J_n^t = J_{n-1}^s (f_1^t) + x_n J_{n-1}^{s+1} J_n^{t-1}, t >= 1.
SplitTriple a_splitting(int n, int s, int t);
/// M_j = K_j J_{n-1}^j + x_n M_{j+1}, 0 <= j < s+t.
SplitTriple m_chain_splitting(int n, int s, int t, int j);
/// N_j = L_j + x_n N_{j+1}, 0 <= j < s+t.
SplitTriple n_chain_splitting(int n, int s, int t, int j);

}  // namespace cyclebetti
