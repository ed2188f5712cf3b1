#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace phisum {

// Largest bound accepted unless a caller raises it. Tables cost about
// 5 bytes per integer (uint32 totient + int8 Moebius) plus the prime list,
// so the default is roughly 1 GB.
inline constexpr std::uint64_t kDefaultMaxSieveBound = 200'000'000;
// Hard ceiling imposed by the 32-bit storage of totients and primes.
inline constexpr std::uint64_t kAbsoluteMaxSieveBound = 4'000'000'000;

struct SieveOptions {
    // Integers per segment. 32768 entries keep the per-segment working set
    // (remainder, totient, Moebius) near 300 KB, inside a typical L2.
    std::size_t segment_length = 1u << 15;
    std::uint64_t max_bound = kDefaultMaxSieveBound;
    // Run segments on the OpenMP team; output is identical either way.
    bool parallel = true;
};

// Work counters collected while sieving.
struct SieveStats {
    // Totient/Moebius updates performed by the crossing-off loops.
    std::uint64_t updates = 0;
    std::size_t segments = 0;
};

// Totient, Moebius and primes for 0..bound. Immutable once built; index 0
// holds phi(0) = 0 and mu(0) = 0.
class SieveTables {
public:
    SieveTables() = default;
    SieveTables(std::uint64_t bound, std::vector<std::uint32_t> phi, std::vector<std::int8_t> mu,
                std::vector<std::uint32_t> primes, SieveStats stats = {});

    std::uint64_t bound() const noexcept { return bound_; }

    // Unchecked lookups; 0 <= n <= bound().
    std::uint32_t phi(std::uint64_t n) const noexcept { return phi_[n]; }
    int mu(std::uint64_t n) const noexcept { return mu_[n]; }

    std::span<const std::uint32_t> phi_values() const noexcept { return phi_; }
    std::span<const std::int8_t> mu_values() const noexcept { return mu_; }
    std::span<const std::uint32_t> primes() const noexcept { return primes_; }

    // Number of primes <= y for y <= bound(), by binary search.
    std::uint64_t prime_pi(std::uint64_t y) const;

    const SieveStats& stats() const noexcept { return stats_; }

    friend bool operator==(const SieveTables& l, const SieveTables& r) {
        return l.bound_ == r.bound_ && l.phi_ == r.phi_ && l.mu_ == r.mu_ && l.primes_ == r.primes_;
    }

private:
    std::uint64_t bound_ = 0;
    std::vector<std::uint32_t> phi_;
    std::vector<std::int8_t> mu_;
    std::vector<std::uint32_t> primes_;
    SieveStats stats_;
};

// Segmented sieve of Eratosthenes producing totient, Moebius and primes up
// to `bound`. Throws BoundError for bound == 0 or bound > options.max_bound.
SieveTables build_sieves(std::uint64_t bound, const SieveOptions& options = {});

// Totient with the empty-quotient convention phi(0) = 0.
// Throws DomainError for m < 0 and BoundError for m > tables.bound().
std::uint64_t phi_of(std::int64_t m, const SieveTables& tables);

// Totient of an arbitrary n by trial division. `primes` lists every prime
// <= `sieved_to` in ascending order; throws BoundError when sqrt(n) is
// beyond `sieved_to` and the answer could be wrong.
std::uint64_t phi_by_trial_division(std::uint64_t n, std::span<const std::uint32_t> primes, std::uint64_t sieved_to);

}  // namespace phisum
