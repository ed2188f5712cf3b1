#include "phisum/reference.h"

#include <algorithm>
#include <string>

#include "phisum/arith.h"
#include "phisum/error.h"

namespace phisum::reference {

SieveTables linear_sieve(std::uint64_t bound) {
    if (bound == 0 || bound > kAbsoluteMaxSieveBound) throw BoundError("sieves", "reference sieve bound out of range");
    std::vector<std::uint32_t> phi(bound + 1, 0);
    std::vector<std::int8_t> mu(bound + 1, 0);
    std::vector<std::uint32_t> primes;
    std::vector<bool> composite(bound + 1, false);
    phi[1] = 1;
    mu[1] = 1;
    for (std::uint64_t i = 2; i <= bound; ++i) {
        if (!composite[i]) {
            primes.push_back(static_cast<std::uint32_t>(i));
            phi[i] = static_cast<std::uint32_t>(i - 1);
            mu[i] = -1;
        }
        for (const std::uint64_t p : primes) {
            const std::uint64_t ip = i * p;
            if (ip > bound) break;
            composite[ip] = true;
            if (i % p == 0) {
                phi[ip] = static_cast<std::uint32_t>(phi[i] * p);
                mu[ip] = 0;
                break;
            }
            phi[ip] = static_cast<std::uint32_t>(phi[i] * (p - 1));
            mu[ip] = static_cast<std::int8_t>(-mu[i]);
        }
    }
    return {bound, std::move(phi), std::move(mu), std::move(primes)};
}

ExactSum sum_phi_floor_primes_serial(const SumQuery& query, const SieveTables& tables) {
    if (query.x < 1 || static_cast<std::uint64_t>(query.x) > tables.bound())
        throw BoundError("sieves", "reference sum: x = " + std::to_string(query.x) + " outside the tables");
    ExactSum out;
    i128 total = 0;
    for (const std::uint64_t p : tables.primes()) {
        if (p > static_cast<std::uint64_t>(query.x)) break;
        ++out.terms;
        const auto d = static_cast<std::int64_t>(p) + query.a;
        if (d == 0) {
            ++out.skipped;
            continue;
        }
        const std::int64_t q = floor_div(query.x, d);
        total += tables.phi(static_cast<std::uint64_t>(q < 0 ? -q : q));
    }
    out.value = narrow_exact(total, "reference sum");
    return out;
}

ExactSum sum_phi_floor_integers_direct(std::int64_t x, const SieveTables& tables) {
    if (x < 1 || static_cast<std::uint64_t>(x) > tables.bound())
        throw BoundError("sieves", "reference integer sum outside the tables");
    i128 total = 0;
    for (std::int64_t n = 1; n <= x; ++n) total += tables.phi(static_cast<std::uint64_t>(x / n));
    return {narrow_exact(total, "reference integer sum"), x, 0};
}

std::int64_t sum_floor_primes_direct(std::int64_t x, const SieveTables& tables) {
    if (x < 1 || static_cast<std::uint64_t>(x) > tables.bound())
        throw BoundError("sieves", "reference floor sum outside the tables");
    std::int64_t total = 0;
    for (const std::uint64_t p : tables.primes()) {
        if (p > static_cast<std::uint64_t>(x)) break;
        total += x / static_cast<std::int64_t>(p);
    }
    return total;
}

}  // namespace phisum::reference
