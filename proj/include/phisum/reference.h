#pragma once

// Serial reference implementations. They favour the obvious algorithm over
// speed and exist so the optimised kernels have something to be checked
// against in tests and benchmarks.

#include <cstdint>

#include "phisum/floor_sums.h"
#include "phisum/sieves.h"

namespace phisum::reference {

// Linear (Euler) sieve, single pass, no segmentation.
SieveTables linear_sieve(std::uint64_t bound);

// Single-threaded prime loop; same contract as sum_phi_floor_primes_naive.
ExactSum sum_phi_floor_primes_serial(const SumQuery& query, const SieveTables& tables);

// Direct loop over every n <= x.
ExactSum sum_phi_floor_integers_direct(std::int64_t x, const SieveTables& tables);

// Direct loop over primes p <= x of floor(x / p).
std::int64_t sum_floor_primes_direct(std::int64_t x, const SieveTables& tables);

}  // namespace phisum::reference
