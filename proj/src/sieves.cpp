#include "phisum/sieves.h"

#include <algorithm>
#include <string>

#include "phisum/arith.h"
#include "phisum/error.h"

namespace phisum {
namespace {

// Plain Eratosthenes up to `limit`; the base primes for segmentation.
std::vector<std::uint32_t> small_primes(std::uint64_t limit) {
    std::vector<bool> composite(limit + 1, false);
    std::vector<std::uint32_t> out;
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (composite[i]) continue;
        out.push_back(static_cast<std::uint32_t>(i));
        for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
    }
    return out;
}

struct SegmentOutput {
    std::vector<std::uint32_t> primes;
    std::uint64_t updates = 0;
};

// Fills phi/mu for [lo, hi) in place. Each base prime p walks the multiples
// of p, p^2, p^3, ... multiplying in its contribution; `part` accumulates the
// factored portion of n, so n / part is 1 or the single prime factor above
// sqrt(hi).
SegmentOutput sieve_segment(std::uint64_t lo, std::uint64_t hi, std::span<const std::uint32_t> base,
                            std::uint32_t* phi, std::int8_t* mu, std::vector<std::uint32_t>& part) {
    SegmentOutput out;
    const std::size_t len = hi - lo;
    part.assign(len, 1);
    std::fill(phi + lo, phi + hi, 1u);
    std::fill(mu + lo, mu + hi, std::int8_t{1});
    std::uint32_t* seg_part = part.data() - lo;
    for (const std::uint32_t p : base) {
        if (static_cast<std::uint64_t>(p) * p >= hi) break;
        // Start at 2p so that p itself is left unfactored and found prime below.
        std::uint64_t first = std::max<std::uint64_t>(2ull * p, (lo + p - 1) / p * p);
        for (std::uint64_t n = first; n < hi; n += p) {
            phi[n] *= p - 1;
            mu[n] = static_cast<std::int8_t>(-mu[n]);
            seg_part[n] *= p;
        }
        if (first < hi) out.updates += (hi - 1 - first) / p + 1;
        for (std::uint64_t pk = static_cast<std::uint64_t>(p) * p; pk < hi; pk *= p) {
            first = (lo + pk - 1) / pk * pk;
            for (std::uint64_t n = first; n < hi; n += pk) {
                phi[n] *= p;
                seg_part[n] *= p;
            }
            if (pk == static_cast<std::uint64_t>(p) * p)
                for (std::uint64_t n = first; n < hi; n += pk) mu[n] = 0;
            if (first < hi) out.updates += (hi - 1 - first) / pk + 1;
            if (pk > hi / p) break;
        }
    }
    for (std::uint64_t n = lo; n < hi; ++n) {
        const std::uint32_t rest = static_cast<std::uint32_t>(n / seg_part[n]);
        if (rest > 1) {
            if (seg_part[n] == 1) out.primes.push_back(static_cast<std::uint32_t>(n));
            phi[n] *= rest - 1;
            mu[n] = static_cast<std::int8_t>(-mu[n]);
        }
    }
    return out;
}

}  // namespace

SieveTables::SieveTables(std::uint64_t bound, std::vector<std::uint32_t> phi, std::vector<std::int8_t> mu,
                         std::vector<std::uint32_t> primes, SieveStats stats)
    : bound_(bound), phi_(std::move(phi)), mu_(std::move(mu)), primes_(std::move(primes)), stats_(stats) {}

std::uint64_t SieveTables::prime_pi(std::uint64_t y) const {
    if (y > bound_) throw BoundError("sieves", "prime_pi(" + std::to_string(y) + ") beyond sieve bound " + std::to_string(bound_));
    return static_cast<std::uint64_t>(std::upper_bound(primes_.begin(), primes_.end(), y) - primes_.begin());
}

SieveTables build_sieves(std::uint64_t bound, const SieveOptions& options) {
    if (bound == 0) throw BoundError("sieves", "sieve bound must be at least 1");
    const std::uint64_t limit = std::min(options.max_bound, kAbsoluteMaxSieveBound);
    if (bound > limit)
        throw BoundError("sieves", "sieve bound " + std::to_string(bound) + " exceeds the configured capacity " +
                                       std::to_string(limit));
    if (options.segment_length == 0) throw DomainError("sieves: segment length must be positive");

    const std::vector<std::uint32_t> base = small_primes(isqrt(bound));
    std::vector<std::uint32_t> phi(bound + 1);
    std::vector<std::int8_t> mu(bound + 1);
    phi[0] = 0;
    mu[0] = 0;

    const std::uint64_t seg = options.segment_length;
    const auto nseg = static_cast<std::int64_t>((bound + seg) / seg);  // covers [0, bound]
    std::vector<SegmentOutput> parts(static_cast<std::size_t>(nseg));

#pragma omp parallel if (options.parallel)
    {
        std::vector<std::uint32_t> part;
#pragma omp for schedule(dynamic, 4)
        for (std::int64_t s = 0; s < nseg; ++s) {
            const std::uint64_t lo = std::max<std::uint64_t>(1, static_cast<std::uint64_t>(s) * seg);
            const std::uint64_t hi = std::min<std::uint64_t>(bound + 1, static_cast<std::uint64_t>(s + 1) * seg);
            if (lo < hi) parts[static_cast<std::size_t>(s)] = sieve_segment(lo, hi, base, phi.data(), mu.data(), part);
        }
    }

    std::vector<std::uint32_t> primes;
    SieveStats stats;
    stats.segments = parts.size();
    std::size_t total = 0;
    for (const auto& p : parts) total += p.primes.size();
    primes.reserve(total);
    for (const auto& p : parts) {
        primes.insert(primes.end(), p.primes.begin(), p.primes.end());
        stats.updates += p.updates;
    }
    return {bound, std::move(phi), std::move(mu), std::move(primes), stats};
}

std::uint64_t phi_of(std::int64_t m, const SieveTables& tables) {
    if (m < 0) throw DomainError("phi_of: negative argument " + std::to_string(m) + "; pass |q|");
    if (static_cast<std::uint64_t>(m) > tables.bound())
        throw BoundError("sieves", "phi(" + std::to_string(m) + ") beyond sieve bound " + std::to_string(tables.bound()));
    return tables.phi(static_cast<std::uint64_t>(m));
}

std::uint64_t phi_by_trial_division(std::uint64_t n, std::span<const std::uint32_t> primes, std::uint64_t sieved_to) {
    if (n == 0) return 0;
    std::uint64_t result = n;
    std::uint64_t rest = n;
    bool exhausted = true;
    for (const std::uint64_t p : primes) {
        if (p * p > rest) {
            exhausted = false;
            break;
        }
        if (rest % p != 0) continue;
        result -= result / p;
        do rest /= p;
        while (rest % p == 0);
    }
    if (rest > 1) {
        // Out of primes before reaching sqrt(rest): rest may be composite.
        if (exhausted && isqrt(rest) > sieved_to)
            throw BoundError("sieves", "trial division of " + std::to_string(n) + " needs more primes than supplied");
        result -= result / rest;
    }
    return result;
}

}  // namespace phisum
