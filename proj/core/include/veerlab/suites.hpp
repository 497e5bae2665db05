#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace veerlab {

// Seeded randomized property sweeps. Item i draws from Rng::stream(seed, i),
// so results do not depend on the number of worker threads.
struct SuiteResult {
  std::string suite;
  std::uint64_t seed = 0;
  std::size_t count = 0;
  std::size_t failures = 0;
  std::vector<std::string> samples;  // first few failure descriptions
  // Report-only suites list known deviations; their failures do not signal
  // a broken invariant.
  bool report_only = false;
};

std::vector<std::string> suite_names();
bool has_suite(const std::string& name);

// threads = 0 picks the hardware concurrency. Throws InputError on an
// unknown suite name.
SuiteResult run_suite(const std::string& name, std::size_t count, std::uint64_t seed, unsigned threads = 0);

}  // namespace veerlab
