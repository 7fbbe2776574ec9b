#include "cyclebetti/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"

#include "cyclebetti/errors.hpp"
#include "cyclebetti/expression.hpp"
#include "cyclebetti/formulas.hpp"
#include "cyclebetti/recursion.hpp"
#include "cyclebetti/routes.hpp"
#include "cyclebetti/suites.hpp"
#include "cyclebetti/table_format.hpp"
#include "cyclebetti/verify.hpp"

namespace cyclebetti {

namespace {

struct GlobalFlags {
  unsigned threads = 1;
  std::size_t lattice_cap = kDefaultLatticeCap;
  bool strict_delta = false;
  std::uint64_t seed = SuiteOptions{}.seed;
  bool no_timing = false;
};

OracleOptions oracle_options(const GlobalFlags& g, std::uint64_t prime) {
  OracleOptions o;
  o.prime = prime;
  o.lattice_cap = g.lattice_cap;
  o.threads = g.threads;
  return o;
}

int emit_reports(const std::vector<VerificationReport>& reports, const GlobalFlags& g, std::ostream& out) {
  for (const auto& r : reports) out << to_json_line(r, !g.no_timing) << '\n';
  return all_match(reports) ? kExitOk : kExitMismatch;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidParameter("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int cmd_table(const std::string& text, const std::string& route, std::uint64_t prime, const std::string& format,
              const GlobalFlags& g, std::ostream& out) {
  const IdealExpression expr = parse_ideal(text);
  RouteOptions options;
  options.oracle = oracle_options(g, prime);
  options.strict_delta = g.strict_delta;
  const TableRoute r = parse_table_route(route);
  const TableFormat f = parse_table_format(format);
  const GradedBettiTable table = compute_table(expr, r, options);
  TableContext context;
  context.ambient = expr.ambient();
  if (r == TableRoute::Oracle) context.characteristic = prime;
  out << emit_betti_table(table, f, context);
  return kExitOk;
}

int cmd_verify(const std::string& target, const GlobalFlags& g, std::ostream& out) {
  const bool is_config = target.ends_with(".json") || std::filesystem::is_regular_file(target);
  if (is_config) {
    RangeSpec spec = parse_range_spec(read_file(target));
    if (g.threads > 1) spec.threads = g.threads;
    if (g.lattice_cap != kDefaultLatticeCap) spec.lattice_cap = g.lattice_cap;
    return emit_reports(cross_validate(spec), g, out);
  }
  SuiteOptions options;
  options.threads = g.threads;
  options.lattice_cap = g.lattice_cap;
  options.seed = g.seed;
  return emit_reports(run_suite(target, options), g, out);
}

int cmd_gf(int n, int t, int imax, std::ostream& out) {
  if (n < 2 || t < 0 || imax < 0) throw InvalidParameter("gf needs --n >= 2, --t >= 0, --imax >= 0");
  const GfTable table(n, t, imax);
  for (int i = 0; i <= imax; ++i) out << i << ": " << table.at(n, t, i).str() << '\n';
  return kExitOk;
}

int cmd_pd(const std::string& text, const std::string& route, std::uint64_t prime, const GlobalFlags& g,
           std::ostream& out) {
  const IdealExpression expr = parse_ideal(text);
  if (route == "oracle") {
    const GradedBettiTable table = compute_table(expr, TableRoute::Oracle, {oracle_options(g, prime), false});
    out << "pd: " << table.pd() << '\n' << "reg: " << table.reg() << '\n';
    return kExitOk;
  }
  if (route != "closed" && route != "recursive") {
    throw InvalidParameter("unknown pd route '" + route + "' (closed, recursive, oracle)");
  }
  const auto family = recognize(expr);
  const bool covered = family && family->t >= 1 && family->kind != RecognizedFamily::Kind::C &&
                       (route == "closed" || family->kind == RecognizedFamily::Kind::B);
  if (!covered) {
    throw UnsupportedRoute("the " + route + " pd route covers " +
                           std::string(route == "closed" ? "J_{n,n-1}^t and " : "") +
                           "J_n^s I_n^t with t >= 1; applicable routes for '" + to_string(expr) + "': oracle");
  }
  if (route == "recursive") {
    out << "pd: " << pd_recursive(family->n, family->s, family->t) << '\n';
    return kExitOk;
  }
  const PdReg pr = pd_reg_closed(family->n, family->s, family->t,
                                 family->kind == RecognizedFamily::Kind::N1Power ? PowerKind::N1Power
                                                                                  : PowerKind::N2Power);
  out << "pd: " << pr.pd << '\n' << "reg: " << pr.reg << '\n';
  return kExitOk;
}

int cmd_split(const std::string& p, const std::string& i, const std::string& j, std::uint64_t prime,
              const GlobalFlags& g, std::ostream& out) {
  const IdealExpression ep = parse_ideal(p);
  const IdealExpression ei = parse_ideal(i);
  const IdealExpression ej = parse_ideal(j);
  const std::size_t amb = static_cast<std::size_t>(std::max({ep.ambient(), ei.ambient(), ej.ambient()}));
  const MonomialIdeal P = extend_ambient(evaluate(ep), amb);
  const MonomialIdeal I = extend_ambient(evaluate(ei), amb);
  const MonomialIdeal J = extend_ambient(evaluate(ej), amb);
  CaseDescriptor d{"splitting", {}, "", p + " = " + i + " + " + j};
  return emit_reports({check_splitting(P, I, J, oracle_options(g, prime), d)}, g, out);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graded Betti numbers of powers of path ideals of cycles", "cyclebetti"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalFlags g;
  app.add_option("--threads", g.threads, "worker threads (results do not depend on it)")->check(CLI::Range(1U, 1024U));
  app.add_option("--lattice-cap", g.lattice_cap, "largest lcm lattice the oracle will build");
  app.add_flag("--strict-delta", g.strict_delta, "count Delta(0,t) literally in the c-recursion");
  app.add_option("--seed", g.seed, "seed for randomized sweeps");
  app.add_flag("--no-timing", g.no_timing, "write millis as 0 in reports");

  std::string expr_text;
  std::string route = "oracle";
  std::uint64_t prime = kDefaultPrime;
  std::string format = "text";
  auto* table = app.add_subcommand("table", "print the graded Betti table of an ideal expression");
  table->add_option("expr", expr_text, "ideal expression")->required();
  table->add_option("--route", route, "oracle, formula or recursion");
  table->add_option("--char", prime, "field characteristic for the oracle");
  table->add_option("--format", format, "text, json or csv");

  std::string target;
  auto* verify = app.add_subcommand("verify", "run a named suite or a sweep config (JSON)");
  verify->add_option("target", target, "suite name or config file")->required();

  int gf_n = 0, gf_t = 0, gf_imax = 0;
  auto* gf = app.add_subcommand("gf", "coefficients of the generating function for J_{n,n-1}^t");
  gf->add_option("--n", gf_n)->required();
  gf->add_option("--t", gf_t)->required();
  gf->add_option("--imax", gf_imax)->required();

  std::string pd_route = "closed";
  auto* pd = app.add_subcommand("pd", "projective dimension of an ideal expression");
  pd->add_option("expr", expr_text, "ideal expression")->required();
  pd->add_option("--route", pd_route, "closed, recursive or oracle");
  pd->add_option("--char", prime, "field characteristic for the oracle");

  std::string split_p, split_i, split_j;
  auto* split = app.add_subcommand("split", "audit a Betti splitting P = I + J");
  split->add_option("P", split_p)->required();
  split->add_option("I", split_i)->required();
  split->add_option("J", split_j)->required();
  split->add_option("--char", prime, "field characteristic");

  auto* suites = app.add_subcommand("suites", "list the named verification suites");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (table->parsed()) return cmd_table(expr_text, route, prime, format, g, out);
    if (verify->parsed()) return cmd_verify(target, g, out);
    if (gf->parsed()) return cmd_gf(gf_n, gf_t, gf_imax, out);
    if (pd->parsed()) return cmd_pd(expr_text, pd_route, prime, g, out);
    if (split->parsed()) return cmd_split(split_p, split_i, split_j, prime, g, out);
    if (suites->parsed()) {
      for (const auto& name : suite_names()) out << name << ": " << suite_summary(name) << '\n';
      out << "acceptance: " << suite_summary("acceptance") << '\n';
      return kExitOk;
    }
  } catch (const ResourceCapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitCapExceeded;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InternalFault& e) {
    err << "internal fault: " << e.what() << '\n';
    return kExitMismatch;
  }
  err << "error: no command\n";
  return kExitUsage;
}

}  // namespace cyclebetti
