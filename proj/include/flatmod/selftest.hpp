#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace flatmod {

struct SelftestResult {
  std::string name;
  bool passed;
  std::string detail;
};

/// Runs every invariant suite at reduced sample counts. Deterministic for a given seed.
std::vector<SelftestResult> run_selftest(std::uint64_t seed);

}  // namespace flatmod
