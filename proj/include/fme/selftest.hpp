#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fme
{

struct CheckResult
{
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Invariant suites behind `fme selftest`; `iterations` scales the random corpora.
std::vector<CheckResult> run_selftest( int iterations = 10000, uint64_t seed = 1 );

}  // namespace fme
