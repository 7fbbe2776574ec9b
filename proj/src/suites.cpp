#include "cyclebetti/suites.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <functional>
#include <map>
#include <random>

#include "cyclebetti/errors.hpp"
#include "cyclebetti/expression.hpp"
#include "cyclebetti/families.hpp"
#include "cyclebetti/formulas.hpp"
#include "cyclebetti/recursion.hpp"
#include "cyclebetti/routes.hpp"

namespace cyclebetti {

namespace {

using Clock = std::chrono::steady_clock;
using Params = std::vector<std::pair<std::string, long long>>;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

VerificationReport compare(CaseDescriptor d, const std::string& quantity, int i, const BigInt& lhs, const BigInt& rhs,
                           double millis = 0) {
  if (lhs == rhs) return {std::move(d), Status::Match, std::nullopt, millis};
  return {std::move(d), Status::Mismatch, Witness{quantity, i, std::nullopt, lhs, rhs}, millis};
}

/// Aggregates many scalar checks into one report carrying the first failure.
class Tally {
 public:
  explicit Tally(CaseDescriptor d) : d_(std::move(d)), start_(Clock::now()) {}

  void check(const std::string& quantity, int i, const BigInt& lhs, const BigInt& rhs, const Params& where) {
    if (lhs == rhs || witness_) return;
    witness_ = Witness{quantity, i, std::nullopt, lhs, rhs};
    where_ = where;
  }

  VerificationReport finish() {
    VerificationReport r{d_, witness_ ? Status::Mismatch : Status::Match, witness_, elapsed_ms(start_)};
    if (witness_) r.case_.params.insert(r.case_.params.end(), where_.begin(), where_.end());
    return r;
  }

 private:
  CaseDescriptor d_;
  Clock::time_point start_;
  std::optional<Witness> witness_;
  Params where_;
};

OracleOptions oracle_options(const SuiteOptions& o, std::uint64_t prime = kDefaultPrime) {
  OracleOptions out;
  out.prime = prime;
  out.lattice_cap = o.lattice_cap;
  out.threads = o.threads;
  return out;
}

std::vector<VerificationReport> example_row(const SuiteOptions&) {
  static const std::array<long long, 9> expected{27405, 98658, 136332, 89181, 27405, 3654, 378, 27, 1};
  const auto start = Clock::now();
  const GradedBettiTable table = compute_table(parse_ideal("Jc(27,25)^4"), TableRoute::Formula);
  const double millis = elapsed_ms(start);

  const CaseDescriptor base{"Jc(27,25)^4", {{"n", 27}, {"m", 25}, {"t", 4}}, "formula", ""};
  std::vector<VerificationReport> out;
  Tally row(CaseDescriptor{base.family, base.params, "formula/expected_row", "row 100"});
  for (int i = 0; i < static_cast<int>(expected.size()); ++i) {
    row.check("beta", i, table.at(i, i + 100), expected[static_cast<std::size_t>(i)], {});
  }
  row.check("entries", 0, static_cast<long long>(table.entries().size()), 9, {});
  out.push_back(row.finish());
  out.push_back(compare({base.family, base.params, "formula/pd", "min(n-1, 2t)"}, "pd", 0, table.pd(), 8, millis));
  out.push_back(compare({base.family, base.params, "formula/reg", ""}, "reg", 0, table.reg(), 100, millis));
  VerificationReport timing{{base.family, base.params, "formula/runtime", "under 1000 ms"},
                            millis < 1000 ? Status::Match : Status::Mismatch, std::nullopt, millis};
  if (millis >= 1000) timing.witness = Witness{"millis", 0, std::nullopt, static_cast<long long>(millis), 1000};
  out.push_back(timing);
  return out;
}

std::vector<VerificationReport> n1_oracle(const SuiteOptions& o) {
  RangeSpec spec;
  spec.family = SweepFamily::CycleN1;
  spec.add_box(3, 5, 0, 0, 1, 3);
  spec.tuples.push_back({6, 0, 1});
  spec.tuples.push_back({6, 0, 2});
  spec.routes = {{SweepRoute::Kind::ClosedForm}, {SweepRoute::Kind::Oracle, 2}, {SweepRoute::Kind::Oracle, 32003}};
  spec.threads = o.threads;
  spec.lattice_cap = o.lattice_cap;
  return cross_validate(spec);
}

std::vector<VerificationReport> n2_oracle(const SuiteOptions& o) {
  RangeSpec spec;
  spec.family = SweepFamily::CycleN2;
  spec.add_box(4, 6, 0, 0, 1, 2);
  spec.tuples.push_back({7, 0, 1});
  spec.routes = {{SweepRoute::Kind::ClosedForm}, {SweepRoute::Kind::Oracle, kDefaultPrime}};
  spec.threads = o.threads;
  spec.lattice_cap = o.lattice_cap;
  return cross_validate(spec);
}

std::vector<VerificationReport> main_identity(const SuiteOptions&) {
  std::vector<VerificationReport> out;
  for (int n = 2; n <= 12; ++n) {
    Tally tally({"B", {{"n", n}}, "recursion/closed_form", "s, t <= 8, i <= 2(s+t)+2"});
    for (int s = 0; s <= 8; ++s)
      for (int t = 0; t <= 8; ++t)
        for (int i = 0; i <= 2 * (s + t) + 2; ++i) {
          tally.check("beta", i, bc_rec(n, s, t, i, Which::B), p_value(n, s, t, i), {{"s", s}, {"t", t}});
        }
    out.push_back(tally.finish());
  }
  return out;
}

std::vector<VerificationReport> three_route(const SuiteOptions& o) {
  std::vector<VerificationReport> out;
  const int i_max = 10 + 8 + 2;
  const GfTable gf(10, 8, i_max);
  for (int n = 2; n <= 10; ++n) {
    Tally rec({"cycle_n1", {{"n", n}}, "recursion/closed_form", "t <= 8"});
    Tally gen({"cycle_n1", {{"n", n}}, "gf/closed_form", "t <= 8"});
    for (int t = 0; t <= 8; ++t)
      for (int i = 0; i <= i_max; ++i) {
        const BigInt closed = beta_closed(n, t, i, ClosedKind::FullCycleN1);
        rec.check("beta", i, e_rec(n, 0, t, i), closed, {{"t", t}});
        gen.check("beta", i, gf.at(n, t, i), closed, {{"t", t}});
      }
    out.push_back(rec.finish());
    out.push_back(gen.finish());
  }

  // pd and reg of the desk set against the oracle.
  RangeSpec spec;
  spec.family = SweepFamily::CycleN1;
  spec.add_box(3, 5, 0, 0, 1, 3);
  spec.tuples.push_back({6, 0, 1});
  spec.tuples.push_back({6, 0, 2});
  spec.routes = {{SweepRoute::Kind::Oracle, kDefaultPrime}};
  spec.threads = o.threads;
  spec.lattice_cap = o.lattice_cap;
  for (auto& r : cross_validate(spec)) {
    if (r.case_.routes.ends_with("/pd_reg_closed")) out.push_back(std::move(r));
  }
  return out;
}

VerificationReport intersection_identity(const SplitTriple& split, int n, CaseDescriptor d) {
  const auto start = Clock::now();
  const auto amb = static_cast<std::size_t>(n);
  const MonomialIdeal lhs = ideal_intersection(split.first, split.second);
  const MonomialIdeal rhs = ideal_product(Monomial::variable(amb, amb - 1), split.first);
  d.detail = to_string(split.first) + " & " + to_string(split.second) + " = x" + std::to_string(n) + " * first";
  if (ideal_equals(lhs, rhs)) return {std::move(d), Status::Match, std::nullopt, elapsed_ms(start)};
  return {std::move(d), Status::Mismatch,
          Witness{"generators", 0, std::nullopt, static_cast<long long>(lhs.size()), static_cast<long long>(rhs.size())},
          elapsed_ms(start)};
}

std::vector<VerificationReport> splitting(const SuiteOptions& o) {
  const OracleOptions opts = oracle_options(o);
  std::vector<VerificationReport> out;
  auto audit = [&](const SplitTriple& split, const std::string& family, Params params) {
    out.push_back(check_splitting(split.whole, split.first, split.second, opts,
                                  {family, params, "oracle(p=" + std::to_string(opts.prime) + ")/splitting", ""}));
    out.push_back(intersection_identity(split, static_cast<int>(params.front().second),
                                        {family, params, "ideal/intersection", ""}));
  };
  for (int n = 4; n <= 5; ++n) {
    for (int t = 1; t <= 3; ++t)
      for (int s = 0; s + t <= 3; ++s) {
        audit(e_splitting(n, s, t), "E", {{"n", n}, {"s", s}, {"t", t}});
        audit(a_splitting(n, s, t), "A", {{"n", n}, {"s", s}, {"t", t}});
      }
    for (int s = 0; s <= 2; ++s)
      for (int t = 0; t <= 2; ++t) {
        for (int j = 0; j < s + t; ++j) {
          audit(m_chain_splitting(n, s, t, j), "M", {{"n", n}, {"s", s}, {"t", t}, {"j", j}});
          audit(n_chain_splitting(n, s, t, j), "N", {{"n", n}, {"s", s}, {"t", t}, {"j", j}});
        }
        // The chains start at B and C.
        const auto start = Clock::now();
        const bool m_top = ideal_equals(chain_ideal(n, s, t, 0, Chain::M), build_family(family::B{n, s, t}));
        const bool n_top = ideal_equals(chain_ideal(n, s, t, 0, Chain::N), build_family(family::C{n, s, t}));
        out.push_back(compare({"M", {{"n", n}, {"s", s}, {"t", t}, {"j", 0}}, "ideal/chain_start", "M_0 = B"},
                              "equal", 0, m_top ? 1 : 0, 1, elapsed_ms(start)));
        out.push_back(compare({"N", {{"n", n}, {"s", s}, {"t", t}, {"j", 0}}, "ideal/chain_start", "N_0 = C"},
                              "equal", 0, n_top ? 1 : 0, 1, elapsed_ms(start)));
      }
  }
  return out;
}

std::vector<VerificationReport> residuals(const SuiteOptions& o) {
  std::vector<VerificationReport> out;
  std::mt19937_64 rng(o.seed);
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  const Params seed{{"seed", static_cast<long long>(o.seed)}};

  const std::array<std::pair<ResidualKind, const char*>, 4> kinds{{{ResidualKind::SelfRec1, "SelfRec1"},
                                                                   {ResidualKind::SelfRec2, "SelfRec2"},
                                                                   {ResidualKind::PRec1, "PRec1"},
                                                                   {ResidualKind::PRec2, "PRec2"}}};
  for (const auto& [kind, name] : kinds) {
    const bool second = kind == ResidualKind::SelfRec2 || kind == ResidualKind::PRec2;
    Tally tally({name, seed, "residual", "1000 random tuples"});
    for (int k = 0; k < 1000; ++k) {
      const int n = uniform(4, 12);
      const int s = uniform(0, 8);
      const int t = second ? uniform(2, 8) : 1;
      const int i = uniform(0, 2 * (s + t) + 2);
      tally.check("residual", i, residual_check(kind, n, s, t, i), 0, {{"n", n}, {"s", s}, {"t", t}});
    }
    out.push_back(tally.finish());
  }

  using Identity = std::function<std::pair<BigInt, BigInt>(int, int, int)>;
  const std::array<std::pair<const char*, Identity>, 4> identities{{
      {"pascal",
       [](int n, int m, int s) -> std::pair<BigInt, BigInt> {
         (void)m;
         return {binom(n + 1, s + 1), binom(n, s) + binom(n, s + 1)};
       }},
      {"vandermonde_2",
       [](int n, int m, int) -> std::pair<BigInt, BigInt> {
         return {binom(n - 2, m - 2) + 2 * binom(n - 2, m - 1) + binom(n - 2, m), binom(n, m)};
       }},
      {"hockey_stick",
       [](int n, int m, int s) -> std::pair<BigInt, BigInt> {
         BigInt lhs = 0;
         for (int j = 0; j <= s; ++j) lhs += binom(n + j, m);
         return {lhs, binom(n + s + 1, m + 1) - binom(n, m + 1)};
       }},
      {"weighted_hockey_stick",
       [](int n, int m, int s) -> std::pair<BigInt, BigInt> {
         BigInt lhs = 0;
         for (int j = 0; j <= s; ++j) lhs += j * binom(n + j, m);
         return {lhs, s * binom(n + s + 1, m + 1) - binom(n + s + 1, m + 2) + binom(n + 1, m + 2)};
       }},
  }};
  for (std::size_t k = 0; k < identities.size(); ++k) {
    const auto& [name, identity] = identities[k];
    Tally tally({std::string("binomial_") + name, seed, "identity", "1000 random triples <= 60"});
    for (int r = 0; r < 1000; ++r) {
      // The second identity shifts n down by 2, so n starts at 2 there.
      const int n = uniform(k == 1 ? 2 : 0, 60);
      const int m = uniform(0, 60);
      const int s = uniform(0, 60);
      const auto [lhs, rhs] = identity(n, m, s);
      tally.check("identity", 0, lhs, rhs, {{"n", n}, {"m", m}, {"s", s}});
    }
    out.push_back(tally.finish());
  }
  return out;
}

std::vector<VerificationReport> delta_edge(const SuiteOptions& o) {
  const int n = 4;
  const int t = 2;
  const auto start = Clock::now();
  const GradedBettiTable oracle = graded_betti(build_family(family::C{n, 0, t}), oracle_options(o));
  const Params params{{"n", n}, {"s", 0}, {"t", t}, {"i", 0}};
  std::vector<VerificationReport> out;
  out.push_back(compare({"C", params, "recursion/oracle", "chain-derived Delta(0,t)"}, "beta", 0,
                        bc_rec(n, 0, t, 0, Which::C, false), oracle.total(0), elapsed_ms(start)));
  out.push_back(compare({"C", params, "recursion(strict)/expected", "literal Delta(0,t) gives t+2"}, "beta", 0,
                        bc_rec(n, 0, t, 0, Which::C, true), t + 2, elapsed_ms(start)));
  out.push_back(compare({"C", params, "oracle/expected", "t+1"}, "beta", 0, oracle.total(0), t + 1, elapsed_ms(start)));
  return out;
}

std::vector<VerificationReport> f_coefficients(const SuiteOptions&) {
  std::vector<VerificationReport> out;
  Tally corner({"expand_b_support", {}, "multiplicity", "f(s+t-2, 1) = 1 for 2 <= s+t <= 12"});
  for (int total = 2; total <= 12; ++total)
    for (int t = 1; t <= total; ++t) {
      const int s = total - t;
      corner.check("f", 0, static_cast<long long>(expand_b_support(s, t).count({total - 2, 1})), 1,
                   {{"s", s}, {"t", t}});
    }
  out.push_back(corner.finish());

  Tally contain({"expand_b_support", {}, "support_in_gamma", "s, t <= 8"});
  for (int s = 0; s <= 8; ++s)
    for (int t = 1; t <= 8; ++t) {
      const auto gamma = index_set(s, t, IndexSetKind::Gamma);
      for (const auto& [pair, mult] : expand_b_support(s, t)) {
        if (mult == 0) continue;
        contain.check("in_gamma", 0, gamma.contains(pair) ? 1 : 0, 1,
                      {{"s", s}, {"t", t}, {"u", pair.a}, {"v", pair.b}});
      }
    }
  out.push_back(contain.finish());

  for (int n = 4; n <= 12; ++n) {
    Tally pd({"B", {{"n", n}}, "pd_recursive/pd_reg_closed", "s+t <= 8"});
    Tally support({"B", {{"n", n}}, "pd_recursive/p_value_support", "s+t <= 8"});
    for (int t = 1; t <= 8; ++t)
      for (int s = 0; s + t <= 8; ++s) {
        const int rec = pd_recursive(n, s, t);
        pd.check("pd", 0, rec, pd_reg_closed(n, s, t, PowerKind::N2Power).pd, {{"s", s}, {"t", t}});
        int top = -1;
        for (int i = 0; i <= n + 1; ++i) {
          if (p_value(n, s, t, i) != 0) top = i;
        }
        support.check("pd", 0, rec, top, {{"s", s}, {"t", t}});
      }
    out.push_back(pd.finish());
    out.push_back(support.finish());
  }
  return out;
}

using SuiteFn = std::vector<VerificationReport> (*)(const SuiteOptions&);

struct SuiteEntry {
  const char* name;
  const char* summary;
  SuiteFn run;
};

const std::vector<SuiteEntry>& registry() {
  static const std::vector<SuiteEntry> entries{
      {"example-row", "Jc(27,25)^4 by formula: row 100, pd 8, reg 100, under 1 s", example_row},
      {"n1-oracle", "J_{n,n-1}^t closed form vs oracle at p = 2 and 32003, linearity, pd/reg", n1_oracle},
      {"n2-oracle", "J_{n,n-2}^t closed form vs oracle, linearity, pd/reg", n2_oracle},
      {"main-identity", "b-recursion equals the closed form p for n <= 12, s, t <= 8", main_identity},
      {"three-route", "e-recursion, generating function and closed form agree; pd/reg vs oracle", three_route},
      {"splitting", "Betti splittings and intersection identities for E, A and the M/N chains", splitting},
      {"residuals", "self-recurrence residuals and binomial identities on seeded random inputs", residuals},
      {"delta-edge", "literal Delta(0,t) overcounts c(4,0,2,0); the chain-derived count matches the oracle",
       delta_edge},
      {"f-coefficients", "corner multiplicity, Gamma containment and recursive pd", f_coefficients},
  };
  return entries;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& e : registry()) out.emplace_back(e.name);
    return out;
  }();
  return names;
}

std::string suite_summary(const std::string& name) {
  if (name == "acceptance") return "every suite in order";
  for (const auto& e : registry()) {
    if (name == e.name) return e.summary;
  }
  throw InvalidParameter("unknown suite '" + name + "'");
}

std::vector<VerificationReport> run_suite(const std::string& name, const SuiteOptions& options) {
  if (name == "acceptance") {
    std::vector<VerificationReport> out;
    for (const auto& e : registry()) {
      auto part = e.run(options);
      out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    return out;
  }
  for (const auto& e : registry()) {
    if (name == e.name) return e.run(options);
  }
  std::string known;
  for (const auto& n : suite_names()) known += " " + n;
  throw InvalidParameter("unknown suite '" + name + "'; known:" + known + " acceptance");
}

}  // namespace cyclebetti
