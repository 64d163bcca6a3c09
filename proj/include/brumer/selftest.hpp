#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace brumer {

struct PropertyOutcome {
  std::string name;
  long cases = 0;
  long failures = 0;
  std::string first_failure;  // empty when nothing failed
  double seconds = 0;

  bool passed() const { return failures == 0; }
};

// A quick randomized pass over the core invariants: both Theta routes, Euler shifts,
// sharp vs character inversion, Tor degree shift and resolution agreement,
// class modules for Z/n, divisor-module exactness and the Fitting block rules.
std::vector<PropertyOutcome> run_selftest(std::uint64_t seed, long rounds);

}  // namespace brumer
