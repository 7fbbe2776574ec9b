#pragma once

// Named verification suites; `acceptance` runs all of them.

#include <cstdint>
#include <string>
#include <vector>

#include "cyclebetti/oracle.hpp"
#include "cyclebetti/verify.hpp"

namespace cyclebetti {

struct SuiteOptions {
  unsigned threads = 1;
  std::size_t lattice_cap = kDefaultLatticeCap;
  /// Seed for the randomized residual and binomial-identity sweeps.
  std::uint64_t seed = 20240229;
};

/// Suite names in their canonical order, excluding `acceptance`.
const std::vector<std::string>& suite_names();

/// One-line summary of what a suite checks.
std::string suite_summary(const std::string& name);

/// Throws InvalidParameter for an unknown name.
std::vector<VerificationReport> run_suite(const std::string& name, const SuiteOptions& options = {});

}  // namespace cyclebetti
