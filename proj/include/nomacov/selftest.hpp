#pragma once

#include <cstdint>
#include <string>

namespace nomacov {

struct SelftestResult {
    std::string report; // canonical text, identical across runs for a given
                        // (trials, seed): the determinism check hashes it
    int failures = 0;
    int comparisons = 0;
};

/// Analytic-vs-Monte-Carlo regression grid: 20 pinned operating points
/// spanning M in {2,3,5}, tau in {0.1,0.5,1,2}, P in {-10,0,10} dBm, both
/// tiers and all analytic estimators; every conditional coverage must agree
/// with its simulated estimate within 3 standard errors.
SelftestResult run_selftest(std::uint64_t trials = 200000, std::uint64_t seed = 7);

} // namespace nomacov
