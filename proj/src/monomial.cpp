#include "cyclebetti/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "cyclebetti/errors.hpp"

namespace cyclebetti {

namespace {

void require_same_ambient(std::size_t a, std::size_t b, const char* op) {
  if (a != b) {
    throw AmbientMismatch(std::string(op) + ": ambient " + std::to_string(a) + " vs " +
                          std::to_string(b));
  }
}

Exponent checked_exponent(std::uint64_t value) {
  if (value > kMaxExponent) {
    throw InvalidParameter("exponent " + std::to_string(value) + " exceeds 2^31");
  }
  return static_cast<Exponent>(value);
}

}  // namespace

Monomial::Monomial(std::size_t ambient) : exps_(ambient, 0) {}

Monomial::Monomial(std::vector<Exponent> exponents) : exps_(std::move(exponents)) {
  for (Exponent e : exps_) {
    checked_exponent(e);
    degree_ += e;
  }
}

Monomial::Monomial(std::initializer_list<Exponent> exponents)
    : Monomial(std::vector<Exponent>(exponents)) {}

Monomial Monomial::variable(std::size_t ambient, std::size_t index, Exponent power) {
  if (index >= ambient) {
    throw InvalidParameter("variable index " + std::to_string(index + 1) + " outside ambient " +
                           std::to_string(ambient));
  }
  std::vector<Exponent> e(ambient, 0);
  e[index] = power;
  return Monomial(std::move(e));
}

std::vector<std::size_t> Monomial::support() const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < exps_.size(); ++k) {
    if (exps_[k] > 0) out.push_back(k);
  }
  return out;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
  if (auto c = a.exps_.size() <=> b.exps_.size(); c != 0) return c;
  // Larger exponent vector first: x1 < x2 in canonical order.
  return b.exps_ <=> a.exps_;
}

bool divides(const Monomial& a, const Monomial& b) {
  require_same_ambient(a.ambient(), b.ambient(), "divides");
  if (a.degree() > b.degree()) return false;
  for (std::size_t k = 0; k < a.ambient(); ++k) {
    if (a[k] > b[k]) return false;
  }
  return true;
}

Monomial lcm_of(const Monomial& a, const Monomial& b) {
  require_same_ambient(a.ambient(), b.ambient(), "lcm");
  std::vector<Exponent> e(a.ambient());
  for (std::size_t k = 0; k < e.size(); ++k) e[k] = std::max(a[k], b[k]);
  return Monomial(std::move(e));
}

Monomial gcd_of(const Monomial& a, const Monomial& b) {
  require_same_ambient(a.ambient(), b.ambient(), "gcd");
  std::vector<Exponent> e(a.ambient());
  for (std::size_t k = 0; k < e.size(); ++k) e[k] = std::min(a[k], b[k]);
  return Monomial(std::move(e));
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  require_same_ambient(a.ambient(), b.ambient(), "product");
  std::vector<Exponent> e(a.ambient());
  for (std::size_t k = 0; k < e.size(); ++k) {
    e[k] = checked_exponent(std::uint64_t{a[k]} + b[k]);
  }
  return Monomial(std::move(e));
}

Monomial pow(const Monomial& m, std::uint64_t power) {
  std::vector<Exponent> e(m.ambient());
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (m[k] != 0 && power > kMaxExponent / m[k]) {
      throw InvalidParameter("exponent overflow in monomial power");
    }
    e[k] = checked_exponent(std::uint64_t{m[k]} * power);
  }
  return Monomial(std::move(e));
}

std::string to_string(const Monomial& m) {
  std::string out;
  for (std::size_t k = 0; k < m.ambient(); ++k) {
    if (m[k] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(k + 1);
    if (m[k] != 1) out += '^' + std::to_string(m[k]);
  }
  return out.empty() ? "1" : out;
}

std::ostream& operator<<(std::ostream& os, const Monomial& m) { return os << to_string(m); }

MonomialIdeal MonomialIdeal::unit(std::size_t ambient) {
  MonomialIdeal out(ambient);
  out.gens_.emplace_back(ambient);
  return out;
}

MonomialIdeal MonomialIdeal::from_generators(std::size_t ambient, std::vector<Monomial> gens) {
  for (const auto& g : gens) require_same_ambient(ambient, g.ambient(), "ideal");
  return minimalize(std::move(gens), ambient);
}

bool MonomialIdeal::contains(const Monomial& m) const {
  require_same_ambient(ambient_, m.ambient(), "membership");
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return divides(g, m); });
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
  require_same_ambient(ambient_, other.ambient_, "containment");
  return std::all_of(other.gens_.begin(), other.gens_.end(),
                     [&](const Monomial& g) { return contains(g); });
}

std::uint64_t MonomialIdeal::initial_degree() const {
  if (gens_.empty()) throw InvalidParameter("initial degree of the zero ideal");
  return gens_.front().degree();
}

MonomialIdeal minimalize(std::vector<Monomial> gens, std::size_t ambient) {
  if (!gens.empty()) ambient = gens.front().ambient();
  for (const auto& g : gens) require_same_ambient(ambient, g.ambient(), "minimalize");

  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  // Sorted by degree, so any proper divisor of gens[k] precedes it.
  std::vector<Monomial> kept;
  kept.reserve(gens.size());
  for (auto& m : gens) {
    bool redundant = std::any_of(kept.begin(), kept.end(),
                                 [&](const Monomial& g) { return divides(g, m); });
    if (!redundant) kept.push_back(std::move(m));
  }

  MonomialIdeal out(ambient);
  out.gens_ = std::move(kept);
  return out;
}

MonomialIdeal ideal_product(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ambient(a.ambient(), b.ambient(), "ideal product");
  std::vector<Monomial> gens;
  gens.reserve(a.size() * b.size());
  for (const auto& g : a.generators()) {
    for (const auto& h : b.generators()) gens.push_back(g * h);
  }
  return minimalize(std::move(gens), a.ambient());
}

MonomialIdeal ideal_product(const Monomial& m, const MonomialIdeal& a) {
  require_same_ambient(m.ambient(), a.ambient(), "ideal product");
  std::vector<Monomial> gens;
  gens.reserve(a.size());
  for (const auto& g : a.generators()) gens.push_back(m * g);
  return minimalize(std::move(gens), a.ambient());
}

MonomialIdeal ideal_power(const MonomialIdeal& a, std::uint64_t power) {
  MonomialIdeal result = MonomialIdeal::unit(a.ambient());
  MonomialIdeal base = a;
  // Square-and-multiply keeps intermediate generator sets small.
  while (power > 0) {
    if (power & 1U) result = ideal_product(result, base);
    power >>= 1U;
    if (power > 0) base = ideal_product(base, base);
  }
  return result;
}

MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ambient(a.ambient(), b.ambient(), "ideal sum");
  std::vector<Monomial> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return minimalize(std::move(gens), a.ambient());
}

MonomialIdeal ideal_intersection(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ambient(a.ambient(), b.ambient(), "ideal intersection");
  std::vector<Monomial> gens;
  gens.reserve(a.size() * b.size());
  for (const auto& g : a.generators()) {
    for (const auto& h : b.generators()) gens.push_back(lcm_of(g, h));
  }
  return minimalize(std::move(gens), a.ambient());
}

bool ideal_equals(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ambient(a.ambient(), b.ambient(), "ideal equality");
  return a == b;
}

MonomialIdeal extend_ambient(const MonomialIdeal& a, std::size_t ambient) {
  if (ambient < a.ambient()) {
    throw InvalidParameter("cannot shrink ambient from " + std::to_string(a.ambient()) + " to " +
                           std::to_string(ambient));
  }
  std::vector<Monomial> gens;
  for (const auto& g : a.generators()) {
    std::vector<Exponent> e(g.exponents().begin(), g.exponents().end());
    e.resize(ambient, 0);
    gens.emplace_back(std::move(e));
  }
  return minimalize(std::move(gens), ambient);
}

std::string to_string(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) return "(0)";
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < ideal.size(); ++k) {
    if (k) os << ", ";
    os << ideal.generators()[k];
  }
  os << ')';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const MonomialIdeal& ideal) {
  return os << to_string(ideal);
}

}  // namespace cyclebetti
