#ifndef STRMOD_SUITE_HPP
#define STRMOD_SUITE_HPP
//
// strmod / suite
// The structural verification suite: ten checks exercising the library end
// to end at desk scale, from exhaustive word-level duality through the
// seeded Krull-Schmidt uniqueness trials. All arithmetic is exact; every
// check states how many cases it covered.
//

#include <cstdint>
#include <string>
#include <vector>

namespace strmod {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail; // case counts, or the first failure
  double seconds = 0.0;
};

struct SuiteOptions {
  std::uint64_t seed = 0;
  int mc_budget = 20;
  std::int64_t prime = 32003;
};

const std::vector<std::string>& verification_check_names();

/// Runs every check (or the named subset) in a fixed order.
std::vector<CheckResult> run_verification_suite(
    const SuiteOptions& opts, const std::vector<std::string>& only = {});

} // namespace strmod

#endif
