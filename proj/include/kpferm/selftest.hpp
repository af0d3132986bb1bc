#pragma once

// Invariant suite at reduced sizes, used by the `selftest` command.

#include "kpferm/checks.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace kpferm {

struct SelftestOptions {
  int energy = 4;
  bool mutate_boson_sign = false;
  std::uint64_t seed = 20240611;
};

struct SelftestReport {
  std::vector<CheckResult> suites;

  bool passed() const;
  /// One line per suite: "name: PASS (n checks)" or "name: FAIL (k/n) first failure".
  std::string to_text() const;
};

SelftestReport run_selftest(const SelftestOptions& opts);

}  // namespace kpferm
