#pragma once

#include "runyon/report.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace runyon {

enum class CheckMode { Symbolic, Numeric, Both };

struct VerifyOptions {
  std::size_t max_n = 12;
  /// Truncation order for symbolic series checks.
  std::size_t order = 16;
  /// Truncation order for series checks at sample points.
  std::size_t numeric_order = 40;
  /// Highest n for the Narayana generating function at sample points.
  std::size_t narayana_numeric_order = 200;
  std::size_t trials = 20;
  std::uint64_t seed = 42;
  /// Range 1..c_max for both r and n in c-compare.
  std::size_t c_max = 8;
  CheckMode mode = CheckMode::Both;
  /// Test hook: corrupt the first identity checked by this suite.
  std::optional<std::string> inject_fault;
};

/// Suite names in execution order.
const std::vector<std::string>& suite_names();
bool is_suite_name(const std::string& name);

/// Runs one suite. Throws std::invalid_argument for an unknown name.
VerificationReport run_suite(const std::string& name, const VerifyOptions& opts);

// Individual checks, also used by the suites.
VerificationReport verify_kernel(std::size_t order);
VerificationReport verify_reversion(std::size_t order);
VerificationReport verify_y(std::size_t order);
VerificationReport inner_sum_check(std::size_t n);
/// Report-only comparison of the defining sum of C_{r,n} against the
/// printed closed form over 1 <= r <= rmax, 1 <= n <= nmax.
VerificationReport c_compare(std::size_t rmax, std::size_t nmax);

}  // namespace runyon
