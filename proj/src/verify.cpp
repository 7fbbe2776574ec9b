#include "cyclebetti/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <set>
#include <thread>

#include "json.hpp"

#include "cyclebetti/errors.hpp"
#include "cyclebetti/formulas.hpp"

namespace cyclebetti {

using json = nlohmann::ordered_json;

std::string to_string(Status status) {
  switch (status) {
    case Status::Match: return "match";
    case Status::Mismatch: return "mismatch";
    case Status::Skipped: return "skipped";
  }
  return "?";
}

std::string to_json_line(const VerificationReport& report, bool timing) {
  json doc;
  json c;
  c["family"] = report.case_.family;
  json params = json::object();
  for (const auto& [k, v] : report.case_.params) params[k] = v;
  c["params"] = std::move(params);
  c["routes"] = report.case_.routes;
  if (!report.case_.detail.empty()) c["detail"] = report.case_.detail;
  doc["case"] = std::move(c);
  doc["status"] = to_string(report.status);
  if (report.witness) {
    json w;
    w["quantity"] = report.witness->quantity;
    w["i"] = report.witness->i;
    if (report.witness->j) w["j"] = *report.witness->j;
    w["lhs"] = report.witness->lhs.str();
    w["rhs"] = report.witness->rhs.str();
    doc["witness"] = std::move(w);
  }
  doc["millis"] = timing ? report.millis : 0.0;
  return doc.dump();
}

bool all_match(const std::vector<VerificationReport>& reports) {
  return std::all_of(reports.begin(), reports.end(),
                     [](const VerificationReport& r) { return r.status != Status::Mismatch; });
}

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

VerificationReport mismatch(CaseDescriptor descriptor, Witness witness, double millis) {
  return {std::move(descriptor), Status::Mismatch, std::move(witness), millis};
}

}  // namespace

VerificationReport check_splitting(const MonomialIdeal& P, const MonomialIdeal& I, const MonomialIdeal& J,
                                   const OracleOptions& options, CaseDescriptor descriptor) {
  if (!ideal_equals(P, ideal_sum(I, J))) throw InvalidParameter("splitting check: P is not I + J");
  if (descriptor.family.empty()) descriptor.family = "splitting";
  if (descriptor.routes.empty()) descriptor.routes = "oracle(p=" + std::to_string(options.prime) + ")";
  if (descriptor.detail.empty()) descriptor.detail = to_string(P) + " = " + to_string(I) + " + " + to_string(J);

  const auto start = Clock::now();
  const GradedBettiTable tp = oracle_table(P, options);
  const GradedBettiTable ti = oracle_table(I, options);
  const GradedBettiTable tj = oracle_table(J, options);
  const GradedBettiTable tij = oracle_table(ideal_intersection(I, J), options);

  std::set<GradedBettiTable::Key> keys;
  for (const auto* t : {&tp, &ti, &tj}) {
    for (const auto& [k, v] : t->entries()) keys.insert(k);
  }
  for (const auto& [k, v] : tij.entries()) keys.insert({k.first + 1, k.second});
  for (const auto& [i, j] : keys) {
    const BigInt lhs = tp.at(i, j);
    const BigInt rhs = ti.at(i, j) + tj.at(i, j) + tij.at(i - 1, j);
    if (lhs != rhs) return mismatch(std::move(descriptor), {"beta", i, j, lhs, rhs}, elapsed_ms(start));
  }

  // An empty intersection table (zero ideal) contributes nothing.
  int pd = std::max(ti.pd(), tj.pd());
  if (!tij.empty()) pd = std::max(pd, tij.pd() + 1);
  if (tp.pd() != pd) return mismatch(std::move(descriptor), {"pd", 0, std::nullopt, tp.pd(), pd}, elapsed_ms(start));

  int reg = std::max(ti.reg(), tj.reg());
  if (!tij.empty()) reg = std::max(reg, tij.reg() - 1);
  if (tp.reg() != reg) {
    return mismatch(std::move(descriptor), {"reg", 0, std::nullopt, tp.reg(), reg}, elapsed_ms(start));
  }
  return {std::move(descriptor), Status::Match, std::nullopt, elapsed_ms(start)};
}

std::string to_string(SweepFamily family) {
  switch (family) {
    case SweepFamily::CycleN1: return "cycle_n1";
    case SweepFamily::CycleN2: return "cycle_n2";
    case SweepFamily::B: return "B";
  }
  return "?";
}

SweepFamily parse_sweep_family(const std::string& name) {
  if (name == "cycle_n1") return SweepFamily::CycleN1;
  if (name == "cycle_n2") return SweepFamily::CycleN2;
  if (name == "B") return SweepFamily::B;
  throw InvalidParameter("unknown sweep family '" + name + "' (cycle_n1, cycle_n2, B)");
}

std::string to_string(const SweepRoute& route) {
  switch (route.kind) {
    case SweepRoute::Kind::Oracle: return "oracle(p=" + std::to_string(route.prime) + ")";
    case SweepRoute::Kind::ClosedForm: return "closed_form";
    case SweepRoute::Kind::Recursion: return "recursion";
    case SweepRoute::Kind::GeneratingFunction: return "gf";
  }
  return "?";
}

void RangeSpec::add_box(int n_lo, int n_hi, int s_lo, int s_hi, int t_lo, int t_hi) {
  for (int n = n_lo; n <= n_hi; ++n)
    for (int s = s_lo; s <= s_hi; ++s)
      for (int t = t_lo; t <= t_hi; ++t) tuples.push_back({n, s, t});
}

RangeSpec parse_range_spec(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    throw InvalidParameter(std::string("sweep config: ") + e.what());
  }
  try {
    RangeSpec spec;
    spec.family = parse_sweep_family(doc.at("family").get<std::string>());
    auto range = [&](const char* key, int fallback) -> std::pair<int, int> {
      if (!doc.contains(key)) return {fallback, fallback};
      const auto& r = doc.at(key);
      if (r.is_number_integer()) return {r.get<int>(), r.get<int>()};
      if (!r.is_array() || r.size() != 2) throw InvalidParameter(std::string("sweep config: '") + key + "' must be [lo, hi]");
      return {r.at(0).get<int>(), r.at(1).get<int>()};
    };
    if (doc.contains("n")) {
      const auto [n_lo, n_hi] = range("n", 0);
      const auto [s_lo, s_hi] = range("s", 0);
      const auto [t_lo, t_hi] = range("t", 1);
      spec.add_box(n_lo, n_hi, s_lo, s_hi, t_lo, t_hi);
    }
    if (doc.contains("tuples")) {
      for (const auto& tup : doc.at("tuples")) {
        if (!tup.is_array() || tup.size() != 3) throw InvalidParameter("sweep config: tuples are [n, s, t]");
        spec.tuples.push_back({tup.at(0).get<int>(), tup.at(1).get<int>(), tup.at(2).get<int>()});
      }
    }
    std::vector<std::uint64_t> primes{kDefaultPrime};
    if (doc.contains("primes")) primes = doc.at("primes").get<std::vector<std::uint64_t>>();
    for (const auto& r : doc.at("routes")) {
      const std::string name = r.get<std::string>();
      if (name == "oracle") {
        for (auto p : primes) spec.routes.push_back({SweepRoute::Kind::Oracle, p});
      } else if (name == "closed_form") {
        spec.routes.push_back({SweepRoute::Kind::ClosedForm});
      } else if (name == "recursion") {
        spec.routes.push_back({SweepRoute::Kind::Recursion});
      } else if (name == "gf") {
        spec.routes.push_back({SweepRoute::Kind::GeneratingFunction});
      } else {
        throw InvalidParameter("sweep config: unknown route '" + name + "'");
      }
    }
    if (doc.contains("threads")) spec.threads = doc.at("threads").get<unsigned>();
    if (doc.contains("lattice_cap")) spec.lattice_cap = doc.at("lattice_cap").get<std::size_t>();
    return spec;
  } catch (const json::exception& e) {
    throw InvalidParameter(std::string("sweep config: ") + e.what());
  }
}

namespace {

RecognizedFamily as_family(SweepFamily family, const ParamTuple& p) {
  switch (family) {
    case SweepFamily::CycleN1:
      if (p.s != 0) throw InvalidParameter("cycle_n1 sweeps take s = 0");
      return {RecognizedFamily::Kind::N1Power, p.n, 0, p.t};
    case SweepFamily::CycleN2:
      if (p.s != 0) throw InvalidParameter("cycle_n2 sweeps take s = 0");
      return {RecognizedFamily::Kind::B, p.n, 0, p.t};
    case SweepFamily::B: return {RecognizedFamily::Kind::B, p.n, p.s, p.t};
  }
  throw InternalFault("unknown sweep family");
}

void require_applicable(SweepFamily family, const SweepRoute& route) {
  if (route.kind == SweepRoute::Kind::GeneratingFunction && family != SweepFamily::CycleN1) {
    throw UnsupportedRoute("the gf route applies only to cycle_n1; applicable routes: oracle, closed_form, recursion");
  }
  if (route.kind == SweepRoute::Kind::Oracle && !is_prime(route.prime)) {
    throw InvalidParameter("oracle route: " + std::to_string(route.prime) + " is not prime");
  }
}

std::optional<Witness> compare_totals(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
  const std::size_t len = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < len; ++i) {
    const BigInt x = i < a.size() ? a[i] : BigInt(0);
    const BigInt y = i < b.size() ? b[i] : BigInt(0);
    if (x != y) return Witness{"beta", static_cast<int>(i), std::nullopt, x, y};
  }
  return std::nullopt;
}

std::vector<VerificationReport> run_tuple(const RangeSpec& spec, const ParamTuple& p) {
  const RecognizedFamily fam = as_family(spec.family, p);
  const std::vector<std::pair<std::string, long long>> params{{"n", p.n}, {"s", p.s}, {"t", p.t}};
  const std::string family_name = to_string(spec.family);
  if (fam.s + fam.t == 0) {
    CaseDescriptor d{family_name, params, "", "unit ideal"};
    return {{std::move(d), Status::Skipped, std::nullopt, 0}};
  }

  struct RouteResult {
    std::vector<BigInt> totals;
    std::optional<GradedBettiTable> table;
    double millis = 0;
  };
  std::vector<RouteResult> results;
  std::optional<MonomialIdeal> ideal;
  for (const auto& route : spec.routes) {
    const auto start = Clock::now();
    RouteResult r;
    switch (route.kind) {
      case SweepRoute::Kind::Oracle: {
        if (!ideal) ideal = family_ideal(fam);
        OracleOptions opts;
        opts.prime = route.prime;
        opts.lattice_cap = spec.lattice_cap;
        r.table = graded_betti(*ideal, opts);
        r.totals = r.table->totals();
        break;
      }
      case SweepRoute::Kind::ClosedForm: r.totals = family_totals(fam, TotalsRoute::ClosedForm); break;
      case SweepRoute::Kind::Recursion: r.totals = family_totals(fam, TotalsRoute::Recursion); break;
      case SweepRoute::Kind::GeneratingFunction:
        r.totals = family_totals(fam, TotalsRoute::GeneratingFunction);
        break;
    }
    r.millis = elapsed_ms(start);
    results.push_back(std::move(r));
  }

  std::vector<VerificationReport> out;
  for (std::size_t k = 1; k < results.size(); ++k) {
    CaseDescriptor d{family_name, params, to_string(spec.routes[0]) + "/" + to_string(spec.routes[k]), ""};
    const auto w = compare_totals(results[0].totals, results[k].totals);
    out.push_back({std::move(d), w ? Status::Mismatch : Status::Match, w, results[0].millis + results[k].millis});
  }

  for (std::size_t k = 0; k < results.size(); ++k) {
    if (!results[k].table) continue;
    const GradedBettiTable& table = *results[k].table;
    const std::string oracle = to_string(spec.routes[k]);
    const int degree = generator_degree(fam);

    Status status = Status::Match;
    std::optional<Witness> w;
    for (const auto& [key, v] : table.entries()) {
      if (key.second - key.first != degree) {
        status = Status::Mismatch;
        w = Witness{"off_row_beta", key.first, key.second, v, 0};
        break;
      }
    }
    out.push_back({{family_name, params, oracle + "/linearity", "row " + std::to_string(degree)},
                   status, w, results[k].millis});

    if (fam.t >= 1) {
      const PdReg closed = pd_reg_closed(
          fam.n, fam.s, fam.t, fam.kind == RecognizedFamily::Kind::N1Power ? PowerKind::N1Power : PowerKind::N2Power);
      std::optional<Witness> pw;
      if (table.pd() != closed.pd) {
        pw = Witness{"pd", 0, std::nullopt, table.pd(), closed.pd};
      } else if (table.reg() != closed.reg) {
        pw = Witness{"reg", 0, std::nullopt, table.reg(), closed.reg};
      }
      out.push_back({{family_name, params, oracle + "/pd_reg_closed", ""},
                     pw ? Status::Mismatch : Status::Match, pw, results[k].millis});
    }
  }
  return out;
}

}  // namespace

std::vector<VerificationReport> cross_validate(const RangeSpec& spec) {
  if (spec.routes.empty()) throw InvalidParameter("cross_validate needs at least one route");
  for (const auto& r : spec.routes) require_applicable(spec.family, r);

  std::vector<ParamTuple> tuples = spec.tuples;
  std::sort(tuples.begin(), tuples.end());
  tuples.erase(std::unique(tuples.begin(), tuples.end()), tuples.end());

  std::vector<std::vector<VerificationReport>> per_tuple(tuples.size());
  const unsigned threads = std::max(1U, spec.threads);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t k = next++; k < tuples.size(); k = next++) {
      try {
        per_tuple[k] = run_tuple(spec, tuples[k]);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<VerificationReport> out;
  for (auto& reports : per_tuple) {
    for (auto& r : reports) out.push_back(std::move(r));
  }
  return out;
}

}  // namespace cyclebetti
