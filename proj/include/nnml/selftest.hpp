#pragma once

#include <cstdint>
#include <string>

namespace nnml {

struct SelftestOptions {
  uint64_t seed = 1;
  int jobs = 1;
  std::string only;   // prefix filter on case names; empty runs everything
  bool json = false;  // line-delimited records instead of text lines
  bool repeat = true; // re-run the suite and compare reports byte for byte
};

struct SelftestResult {
  std::string report;
  int failures = 0;
};

// Runs the acceptance suite: the per-case matrix plus one summary line per
// criterion. The report is deterministic for a fixed seed.
SelftestResult runSelftest(const SelftestOptions& opt);

}  // namespace nnml
