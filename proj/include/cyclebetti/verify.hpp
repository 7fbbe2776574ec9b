#pragma once

// Cross-route validation with machine-readable reports.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cyclebetti/bigint.hpp"
#include "cyclebetti/monomial.hpp"
#include "cyclebetti/oracle.hpp"
#include "cyclebetti/routes.hpp"

namespace cyclebetti {

struct CaseDescriptor {
  std::string family;
  std::vector<std::pair<std::string, long long>> params;
  /// Route pair or audit name, e.g. "oracle(p=2)/closed_form".
  std::string routes;
  /// Free-form context such as the ideals of a splitting.
  std::string detail;

  friend bool operator==(const CaseDescriptor&, const CaseDescriptor&) = default;
};

enum class Status { Match, Mismatch, Skipped };

std::string to_string(Status status);

/// First disagreement. `j` is absent when only totals are compared;
/// `quantity` names the compared number ("beta", "pd", "reg", ...).
struct Witness {
  std::string quantity = "beta";
  int i = 0;
  std::optional<int> j;
  BigInt lhs;
  BigInt rhs;
};

struct VerificationReport {
  CaseDescriptor case_;
  Status status = Status::Match;
  std::optional<Witness> witness;
  double millis = 0;
};

/// One JSON object {case, status, witness?, millis}. With `timing` false
/// millis is written as 0 so that output is byte-reproducible.
std::string to_json_line(const VerificationReport& report, bool timing = true);

bool all_match(const std::vector<VerificationReport>& reports);

/// Betti-splitting audit of P = I + J through oracle tables of P, I, J and
/// I & J: the graded identity beta_{i,j}(P) = beta_{i,j}(I) + beta_{i,j}(J) +
/// beta_{i-1,j}(I & J), then the pd and reg max-formulas. Throws
/// InvalidParameter unless P = I + J.
VerificationReport check_splitting(const MonomialIdeal& P, const MonomialIdeal& I, const MonomialIdeal& J,
                                   const OracleOptions& options = {}, CaseDescriptor descriptor = {});

enum class SweepFamily { CycleN1, CycleN2, B };

std::string to_string(SweepFamily family);
SweepFamily parse_sweep_family(const std::string& name);

struct SweepRoute {
  enum class Kind { Oracle, ClosedForm, Recursion, GeneratingFunction } kind;
  std::uint64_t prime = kDefaultPrime;
};

std::string to_string(const SweepRoute& route);

struct ParamTuple {
  int n;
  int s;
  int t;
  friend auto operator<=>(const ParamTuple&, const ParamTuple&) = default;
};

struct RangeSpec {
  SweepFamily family = SweepFamily::CycleN1;
  /// Parameter tuples; for CycleN1 and CycleN2, s must be 0.
  std::vector<ParamTuple> tuples;
  std::vector<SweepRoute> routes;
  unsigned threads = 1;
  std::size_t lattice_cap = kDefaultLatticeCap;

  /// Cartesian product of inclusive ranges, appended to `tuples`.
  void add_box(int n_lo, int n_hi, int s_lo, int s_hi, int t_lo, int t_hi);
};

/// Parses {"family": ..., "n": [lo, hi], "s": [lo, hi], "t": [lo, hi],
/// "tuples": [[n, s, t], ...], "routes": [...], "primes": [...], "threads": k}.
/// A route "oracle" expands to one oracle route per prime.
RangeSpec parse_range_spec(const std::string& json_text);

/// Compares the totals of every route against the first, per tuple; each
/// oracle route also contributes linearity and pd/reg audits. Throws
/// UnsupportedRoute when a route does not apply to the family.
std::vector<VerificationReport> cross_validate(const RangeSpec& spec);

}  // namespace cyclebetti
