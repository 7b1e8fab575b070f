#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lozenge/binomial_matrix.hpp"

namespace lozenge {

struct VerifyOptions {
  /// Scales every sweep; 3 is a quick smoke run, 5 the default.
  std::size_t n_max = 5;
  std::uint64_t seed = 1;
  /// Fault injected into the closed-form inverse (self-test of the harness).
  InverseFault fault = InverseFault::none;
};

struct SuiteResult {
  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  /// First failing input, replayable because every value is exact.
  std::string counterexample;
};

/// Property sweeps over the closed forms: tiling count, inverse identity
/// (both sides), Lagrange identity, determinant product formula, reduced
/// cofactor, and kernel against enumeration.
std::vector<SuiteResult> run_verification(const VerifyOptions& options);

}  // namespace lozenge
