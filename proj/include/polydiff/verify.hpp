#pragma once

// The invariant suite behind `polydiff verify`: exact oracle equivalence and
// structural checks for every basis family at small dimension.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace polydiff {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyOptions {
  std::optional<std::string> basis;  ///< restrict to one family (CLI basis name)
  bool inject_fault = false;         ///< corrupt one constructor entry; the suite must then fail
  std::uint32_t seed = 20240611;
};

/// Throws UsageError for an unknown basis filter.
std::vector<CheckResult> run_verify(const VerifyOptions& options);

}  // namespace polydiff
