#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ibc/profile.hpp"

namespace ibc::selftest {

struct SuiteResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Reduced-count property suites over one profile. Deterministic for a seed.
std::vector<SuiteResult> run_all(const Profile& profile, std::uint64_t seed = 1);

}  // namespace ibc::selftest
