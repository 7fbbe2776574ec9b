#include "cyclebetti/families.hpp"

#include <algorithm>
#include <sstream>

#include "cyclebetti/errors.hpp"

namespace cyclebetti {

void IndexPairMultiset::add(IndexPair p, std::uint64_t multiplicity) {
  if (multiplicity == 0) return;
  counts_[p] += multiplicity;
}

void IndexPairMultiset::add(const IndexPairMultiset& other, std::uint64_t scale) {
  for (const auto& [p, c] : other) add(p, c * scale);
}

std::uint64_t IndexPairMultiset::count(IndexPair p) const {
  auto it = counts_.find(p);
  return it == counts_.end() ? 0 : it->second;
}

std::uint64_t IndexPairMultiset::total() const {
  std::uint64_t sum = 0;
  for (const auto& [p, c] : counts_) sum += c;
  return sum;
}

std::vector<IndexPair> IndexPairMultiset::support() const {
  std::vector<IndexPair> out;
  for (const auto& [p, c] : counts_) out.push_back(p);
  return out;
}

std::string to_string(const IndexPairMultiset& set) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [p, c] : set) {
    if (!first) os << ", ";
    first = false;
    os << '(' << p.a << ',' << p.b << ')';
    if (c != 1) os << '^' << c;
  }
  os << '}';
  return os.str();
}

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw InvalidParameter(message);
}

/// x_{first+1} * ... * x_{first+length} with indices taken mod `cycle`.
Monomial cyclic_product(std::size_t ambient, int cycle, int first, int length) {
  std::vector<Exponent> e(ambient, 0);
  for (int k = 0; k < length; ++k) e[static_cast<std::size_t>((first + k) % cycle)] += 1;
  return Monomial(std::move(e));
}

/// All n cyclic products of `length` consecutive variables, `length` >= 1.
MonomialIdeal cyclic_products(std::size_t ambient, int n, int length) {
  std::vector<Monomial> gens;
  for (int i = 0; i < n; ++i) gens.push_back(cyclic_product(ambient, n, i, length));
  return minimalize(std::move(gens), ambient);
}

std::size_t resolve_ambient(int n, int ambient) {
  int a = ambient == 0 ? n : ambient;
  require(a >= n && a >= 1, "ambient " + std::to_string(a) + " smaller than " + std::to_string(n));
  return static_cast<std::size_t>(a);
}

Monomial var(std::size_t ambient, int index1) {
  return Monomial::variable(ambient, static_cast<std::size_t>(index1 - 1));
}

MonomialIdeal principal(const Monomial& m) {
  return MonomialIdeal::from_generators(m.ambient(), {m});
}

/// f_1 = x_1..x_{n-2} and f_2 = x_2..x_{n-1} of the "n-2" notation.
Monomial f1_of(std::size_t ambient, int n) { return cyclic_product(ambient, n, 0, n - 2); }
Monomial f2_of(std::size_t ambient, int n) { return cyclic_product(ambient, n, 1, n - 2); }

void require_chain_params(int n, int s, int t, int d, const char* what) {
  require(n >= 3, std::string(what) + ": n must be >= 3");
  require(s >= 0 && t >= 0, std::string(what) + ": s, t must be >= 0");
  require(d >= 0 && d <= s + t, std::string(what) + ": index must lie in [0, s+t]");
}

MonomialIdeal power(const MonomialIdeal& I, int e) {
  return ideal_power(I, static_cast<std::uint64_t>(e));
}

/// M_{s+t}, ..., M_0 (index j at position j) or the N chain likewise.
std::vector<MonomialIdeal> chain(int n, int s, int t, Chain which) {
  const auto amb = static_cast<std::size_t>(n);
  const MonomialIdeal Jprev = short_path_ideals(n - 1, n).J;
  const Monomial xn = var(amb, n);
  std::vector<MonomialIdeal> out(static_cast<std::size_t>(s + t + 1));
  for (int j = s + t; j >= 0; --j) {
    MonomialIdeal part = which == Chain::M
                             ? ideal_product(decomposition_component(n, s, t, j, Component::K),
                                             power(Jprev, j))
                             : decomposition_component(n, s, t, j, Component::L);
    const auto idx = static_cast<std::size_t>(j);
    out[idx] = j == s + t ? std::move(part)
                          : ideal_sum(part, ideal_product(xn, out[idx + 1]));
  }
  return out;
}

}  // namespace

std::string describe(const FamilyKind& kind) {
  std::ostringstream os;
  std::visit(
      [&](const auto& f) {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, family::PathCycle>) {
          os << "Jc(" << f.n << ',' << f.m << ')';
        } else if constexpr (std::is_same_v<T, family::CycleI>) {
          os << "I(" << f.n << ')';
        } else if constexpr (std::is_same_v<T, family::OmittedJ>) {
          os << "J(" << f.n << ')';
        } else if constexpr (std::is_same_v<T, family::B>) {
          os << "B(" << f.n << ',' << f.s << ',' << f.t << ')';
        } else if constexpr (std::is_same_v<T, family::C>) {
          os << "C(" << f.n << ',' << f.s << ',' << f.t << ')';
        } else if constexpr (std::is_same_v<T, family::A>) {
          os << "A(" << f.n << ',' << f.s << ',' << f.t << ')';
        } else if constexpr (std::is_same_v<T, family::E>) {
          os << "E(" << f.n << ',' << f.s << ',' << f.t << ')';
        } else if constexpr (std::is_same_v<T, family::K>) {
          os << "K(" << f.n << ',' << f.s << ',' << f.t << ',' << f.d << ')';
        } else if constexpr (std::is_same_v<T, family::L>) {
          os << "L(" << f.n << ',' << f.s << ',' << f.t << ',' << f.d << ')';
        } else if constexpr (std::is_same_v<T, family::M>) {
          os << "M(" << f.n << ',' << f.s << ',' << f.t << ',' << f.j << ')';
        } else {
          os << "N(" << f.n << ',' << f.s << ',' << f.t << ',' << f.j << ')';
        }
      },
      kind);
  return os.str();
}

MonomialIdeal path_ideal_cycle(int n, int m) {
  require(n >= 2, "path ideal: n must be >= 2");
  require(m >= 2 && m <= n, "path ideal: m must satisfy 2 <= m <= n");
  return cyclic_products(static_cast<std::size_t>(n), n, m);
}

ShortPathIdeals short_path_ideals(int n, int ambient) {
  require(n >= 2, "short path ideals: n must be >= 2");
  const std::size_t amb = resolve_ambient(n, ambient);
  if (n == 2) return {MonomialIdeal::unit(amb), MonomialIdeal::unit(amb)};
  std::vector<Monomial> all;
  std::vector<Monomial> without_f2;
  for (int i = 0; i < n; ++i) {
    Monomial f = cyclic_product(amb, n, i, n - 2);
    if (i != 1) without_f2.push_back(f);
    all.push_back(std::move(f));
  }
  return {minimalize(std::move(all), amb), minimalize(std::move(without_f2), amb)};
}

MonomialIdeal cycle_n1_ideal(int n, int ambient) {
  require(n >= 1, "cycle ideal: n must be >= 1");
  const std::size_t amb = resolve_ambient(n, ambient);
  if (n == 1) return MonomialIdeal::unit(amb);
  return cyclic_products(amb, n, n - 1);
}

MonomialIdeal build_family(const FamilyKind& kind) {
  return std::visit(
      [](const auto& f) -> MonomialIdeal {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, family::PathCycle>) {
          return path_ideal_cycle(f.n, f.m);
        } else if constexpr (std::is_same_v<T, family::CycleI>) {
          return short_path_ideals(f.n).I;
        } else if constexpr (std::is_same_v<T, family::OmittedJ>) {
          return short_path_ideals(f.n).J;
        } else if constexpr (std::is_same_v<T, family::K>) {
          return decomposition_component(f.n, f.s, f.t, f.d, Component::K);
        } else if constexpr (std::is_same_v<T, family::L>) {
          return decomposition_component(f.n, f.s, f.t, f.d, Component::L);
        } else if constexpr (std::is_same_v<T, family::M>) {
          return chain_ideal(f.n, f.s, f.t, f.j, Chain::M);
        } else if constexpr (std::is_same_v<T, family::N>) {
          return chain_ideal(f.n, f.s, f.t, f.j, Chain::N);
        } else {
          require(f.s >= 0 && f.t >= 0, describe(f) + ": s, t must be >= 0");
          if constexpr (std::is_same_v<T, family::B>) {
            const auto ideals = short_path_ideals(f.n);
            return ideal_product(power(ideals.J, f.s), power(ideals.I, f.t));
          } else if constexpr (std::is_same_v<T, family::C>) {
            const auto ideals = short_path_ideals(f.n);
            const auto amb = static_cast<std::size_t>(f.n);
            auto x1xn = MonomialIdeal::from_generators(amb, {var(amb, 1), var(amb, f.n)});
            return ideal_product(power(ideals.J, f.s), power(x1xn, f.t));
          } else if constexpr (std::is_same_v<T, family::A>) {
            require(f.n >= 3, describe(f) + ": n must be >= 3");
            const auto Jprev = short_path_ideals(f.n - 1, f.n).J;
            const auto Jn = short_path_ideals(f.n).J;
            return ideal_product(power(Jprev, f.s), power(Jn, f.t));
          } else {
            require(f.n >= 2, describe(f) + ": n must be >= 2");
            const auto Iprev = cycle_n1_ideal(f.n - 1, f.n);
            const auto In = cycle_n1_ideal(f.n);
            return ideal_product(power(Iprev, f.s), power(In, f.t));
          }
        }
      },
      kind);
}

MonomialIdeal decomposition_component(int n, int s, int t, int d, Component which) {
  if (which == Component::K) {
    require_chain_params(n, s, t, d, "K component");
    const auto amb = static_cast<std::size_t>(n);
    const Monomial f1 = f1_of(amb, n);
    const auto f1f2 = MonomialIdeal::from_generators(amb, {f1, f2_of(amb, n)});
    if (d <= std::min(t, s)) return ideal_product(pow(f1, s - d), power(f1f2, t));
    if (s < d && d <= t) return power(f1f2, t + s - d);
    if (t < d && d <= s) return ideal_product(pow(f1, s - d), power(f1f2, t));
    return power(f1f2, s + t - d);  // max{s,t} < d <= s+t
  }

  require_chain_params(n, s, t, d, "L component");
  const auto amb = static_cast<std::size_t>(n);
  const Monomial f1 = f1_of(amb, n);
  const Monomial x1 = var(amb, 1);
  const MonomialIdeal Jprev = short_path_ideals(n - 1, n).J;
  // f_1 + x_1 J_{n-1}
  const MonomialIdeal shifted = ideal_sum(principal(f1), ideal_product(x1, Jprev));
  // The case split leaves d = max{s,t} uncovered by the strict inequalities;
  // the last case extends to it and agrees with the neighbouring cases there.
  if (d < std::min(s, t)) {
    return ideal_product(pow(f1, s - d) * pow(x1, t - d), power(shifted, d));
  }
  if (s <= d && d < t) return ideal_product(pow(x1, t - d), power(shifted, s));
  if (t <= d && d < s) {
    return ideal_product(pow(f1, s - d), ideal_product(power(Jprev, d - t), power(shifted, t)));
  }
  return ideal_product(power(Jprev, d - t), power(shifted, s + t - d));
}

MonomialIdeal chain_ideal(int n, int s, int t, int j, Chain which) {
  require_chain_params(n, s, t, j, which == Chain::M ? "M chain" : "N chain");
  return chain(n, s, t, which)[static_cast<std::size_t>(j)];
}

IndexPairMultiset index_set(int s, int t, IndexSetKind kind, DeltaConvention convention) {
  require(s >= 0 && t >= 0, "index set: s, t must be >= 0");
  IndexPairMultiset out;
  switch (kind) {
    case IndexSetKind::Lambda:
      require(t >= 1, "Lambda(s,t) requires t >= 1");
      for (int j = 0; j <= s; ++j) out.add({j, t});
      for (int j = 1; j <= t - 1; ++j) out.add({s + j, t - j});
      break;
    case IndexSetKind::Delta:
      require(t >= 1, "Delta(s,t) requires t >= 1");
      if (s <= t) {
        for (int v = 0; v < s; ++v) out.add({0, v});
        std::uint64_t top = static_cast<std::uint64_t>(t - s + 1);
        // At s = 0 the chain has only t steps, all contributing (0,0).
        if (s == 0 && convention == DeltaConvention::ChainDerived) top = static_cast<std::uint64_t>(t);
        out.add({0, s}, top);
        for (int u = 1; u <= s - 1; ++u) out.add({u, s - u});
      } else {
        for (int v = 0; v <= t; ++v) out.add({0, v});
        for (int u = 1; u <= s - t; ++u) out.add({u, t});
        for (int l = 1; l <= t - 1; ++l) out.add({s - t + l, t - l});
      }
      break;
    case IndexSetKind::Gamma: {
      const int r = (s + t) / 2;
      out.add({0, 0});
      for (int v = 1; v <= std::min(r, t); ++v) {
        for (int u = 0; u + 2 * v <= s + t; ++u) out.add({u, v});
      }
      break;
    }
  }
  return out;
}

SplitTriple e_splitting(int n, int s, int t) {
  require(n >= 3 && s >= 0 && t >= 1, "E splitting needs n >= 3, s >= 0, t >= 1");
  const auto amb = static_cast<std::size_t>(n);
  const MonomialIdeal Iprev = cycle_n1_ideal(n - 1, n);
  const MonomialIdeal In = cycle_n1_ideal(n);
  const Monomial f1 = cyclic_product(amb, n, 0, n - 1);
  SplitTriple out;
  out.whole = build_family(family::E{n, s, t});
  out.first = ideal_product(pow(f1, t), power(Iprev, s));
  out.second = ideal_product(var(amb, n), ideal_product(power(Iprev, s + 1), power(In, t - 1)));
  return out;
}

SplitTriple a_splitting(int n, int s, int t) {
  require(n >= 3 && s >= 0 && t >= 1, "A splitting needs n >= 3, s >= 0, t >= 1");
  const auto amb = static_cast<std::size_t>(n);
  const MonomialIdeal Jprev = short_path_ideals(n - 1, n).J;
  const MonomialIdeal Jn = short_path_ideals(n).J;
  SplitTriple out;
  out.whole = build_family(family::A{n, s, t});
  out.first = ideal_product(pow(f1_of(amb, n), t), power(Jprev, s));
  out.second = ideal_product(var(amb, n), ideal_product(power(Jprev, s + 1), power(Jn, t - 1)));
  return out;
}

SplitTriple m_chain_splitting(int n, int s, int t, int j) {
  require_chain_params(n, s, t, j, "M splitting");
  require(j < s + t, "M splitting: j must be < s+t");
  const auto amb = static_cast<std::size_t>(n);
  const auto ms = chain(n, s, t, Chain::M);
  const MonomialIdeal Jprev = short_path_ideals(n - 1, n).J;
  const auto idx = static_cast<std::size_t>(j);
  return {ms[idx],
          ideal_product(decomposition_component(n, s, t, j, Component::K), power(Jprev, j)),
          ideal_product(var(amb, n), ms[idx + 1])};
}

SplitTriple n_chain_splitting(int n, int s, int t, int j) {
  require_chain_params(n, s, t, j, "N splitting");
  require(j < s + t, "N splitting: j must be < s+t");
  const auto amb = static_cast<std::size_t>(n);
  const auto ns = chain(n, s, t, Chain::N);
  const auto idx = static_cast<std::size_t>(j);
  return {ns[idx], decomposition_component(n, s, t, j, Component::L),
          ideal_product(var(amb, n), ns[idx + 1])};
}

}  // namespace cyclebetti
