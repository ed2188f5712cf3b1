#include "phisum/floor_sums.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "phisum/arith.h"
#include "phisum/error.h"

namespace phisum {
namespace {

void require_within(std::int64_t x, const SieveTables& tables, const char* op) {
    if (x < 1) throw DomainError(std::string(op) + ": x must be at least 1, got " + std::to_string(x));
    if (static_cast<std::uint64_t>(x) > tables.bound())
        throw BoundError("sieves", std::string(op) + ": x = " + std::to_string(x) + " exceeds sieve bound " +
                                       std::to_string(tables.bound()));
}

void require_counter_for(std::int64_t x, const PrimeCounter& counter, const char* op) {
    if (counter.x() != x)
        throw DomainError(std::string(op) + ": prime counter was built for x = " + std::to_string(counter.x()) +
                          ", query has x = " + std::to_string(x));
}

// Primes p <= x among the tables' primes: their count.
std::size_t primes_upto(const SieveTables& tables, std::int64_t x) {
    const auto primes = tables.primes();
    return static_cast<std::size_t>(
        std::upper_bound(primes.begin(), primes.end(), static_cast<std::uint64_t>(x)) - primes.begin());
}

}  // namespace

std::string_view to_string(Algorithm a) noexcept { return a == Algorithm::naive ? "naive" : "blocked"; }

Algorithm parse_algorithm(std::string_view name) {
    if (name == "naive") return Algorithm::naive;
    if (name == "blocked") return Algorithm::blocked;
    throw DomainError("unknown algorithm '" + std::string(name) + "' (expected naive or blocked)");
}

ExactSum sum_phi_floor_primes_naive(const SumQuery& query, const SieveTables& tables) {
    const std::int64_t x = query.x;
    const std::int64_t a = query.a;
    require_within(x, tables, "sum_phi_floor_primes_naive");
    const auto primes = tables.primes();
    const auto count = static_cast<std::int64_t>(primes_upto(tables, x));

    i128 total = 0;
    std::int64_t skipped = 0;
#pragma omp parallel for reduction(+ : total, skipped) schedule(static)
    for (std::int64_t i = 0; i < count; ++i) {
        const auto p = static_cast<std::int64_t>(primes[static_cast<std::size_t>(i)]);
        if (p + a == 0) {
            ++skipped;
            continue;
        }
        total += tables.phi(static_cast<std::uint64_t>(shifted_quotient_magnitude(x, p, a)));
    }
    return {narrow_exact(total, "sum_phi_floor_primes_naive"), count, skipped};
}

ExactSum sum_phi_floor_primes_blocked(const SumQuery& query, const SieveTables& tables, const PrimeCounter& counter) {
    const std::int64_t x = query.x;
    if (query.a != 0)
        throw UnsupportedStrategy("blocked summation requires a = 0 (got a = " + std::to_string(query.a) +
                                  "); use the naive algorithm for shifted sums");
    if (x < 1) throw DomainError("sum_phi_floor_primes_blocked: x must be at least 1");
    require_counter_for(x, counter, "sum_phi_floor_primes_blocked");
    const std::int64_t root = counter.sqrt_x();
    if (static_cast<std::uint64_t>(root) > tables.bound())
        throw BoundError("sieves", "blocked sum at x = " + std::to_string(x) + " needs a sieve bound of at least " +
                                       std::to_string(root) + ", have " + std::to_string(tables.bound()));

    const auto primes = tables.primes();
    const auto direct = static_cast<std::int64_t>(primes_upto(tables, root));
    i128 total = 0;

    // p <= floor(sqrt x): quotients are large, evaluate each one.
#pragma omp parallel for reduction(+ : total) schedule(dynamic, 16)
    for (std::int64_t i = 0; i < direct; ++i) {
        const std::uint64_t q = static_cast<std::uint64_t>(x) / primes[static_cast<std::size_t>(i)];
        total += q <= tables.bound() ? tables.phi(q) : phi_by_trial_division(q, primes, tables.bound());
    }

    // p > floor(sqrt x): m = floor(x/p) <= x/(root+1). The primes sharing m
    // fill (x/(m+1), x/m]; the lower end is clamped to root so that primes
    // already taken above are not counted twice.
    const std::int64_t pi_root = counter.pi_of_value(root);
    const std::int64_t top = x / (root + 1);
#pragma omp parallel for reduction(+ : total) schedule(static)
    for (std::int64_t m = 1; m <= top; ++m) {
        const std::int64_t upper = counter.pi_at_quotient(m);
        const std::int64_t lower = x / (m + 1) > root ? counter.pi_at_quotient(m + 1) : pi_root;
        total += static_cast<i128>(tables.phi(static_cast<std::uint64_t>(m))) * (upper - lower);
    }
    return {narrow_exact(total, "sum_phi_floor_primes_blocked"), counter.pi_at_quotient(1), 0};
}

ExactSum sum_phi_floor_primes(const SumQuery& query, const SieveTables& tables, const PrimeCounter* counter) {
    if (query.algorithm == Algorithm::naive) return sum_phi_floor_primes_naive(query, tables);
    if (counter == nullptr) throw DomainError("blocked summation needs a prime counter");
    return sum_phi_floor_primes_blocked(query, tables, *counter);
}

ExactSum sum_phi_floor_integers(std::int64_t x, const SieveTables& tables) {
    require_within(x, tables, "sum_phi_floor_integers");
    const auto root = static_cast<std::int64_t>(isqrt(static_cast<std::uint64_t>(x)));
    i128 total = 0;
#pragma omp parallel for reduction(+ : total) schedule(static)
    for (std::int64_t n = 1; n <= root; ++n) total += tables.phi(static_cast<std::uint64_t>(x / n));
    // n > root: floor(x/n) = q for n in (x/(q+1), x/q], clamped below at root.
    const std::int64_t top = x / (root + 1);
#pragma omp parallel for reduction(+ : total) schedule(static)
    for (std::int64_t q = 1; q <= top; ++q) {
        const std::int64_t hi = x / q;
        const std::int64_t lo = std::max(x / (q + 1), root);
        total += static_cast<i128>(tables.phi(static_cast<std::uint64_t>(q))) * (hi - lo);
    }
    return {narrow_exact(total, "sum_phi_floor_integers"), x, 0};
}

ExactSum sum_floor_primes(std::int64_t x, const PrimeCounter& counter) {
    require_counter_for(x, counter, "sum_floor_primes");
    const std::int64_t root = counter.sqrt_x();
    i128 total = 0;
    for (std::int64_t p = 2; p <= root; ++p)
        if (counter.is_small_prime(p)) total += x / p;
    const std::int64_t pi_root = counter.pi_of_value(root);
    const std::int64_t top = x / (root + 1);
    for (std::int64_t m = 1; m <= top; ++m) {
        const std::int64_t upper = counter.pi_at_quotient(m);
        const std::int64_t lower = x / (m + 1) > root ? counter.pi_at_quotient(m + 1) : pi_root;
        total += static_cast<i128>(m) * (upper - lower);
    }
    return {narrow_exact(total, "sum_floor_primes"), counter.pi_at_quotient(1), 0};
}

FractionalSum sum_fractional_primes(std::int64_t x, const SieveTables& tables) {
    require_within(x, tables, "sum_fractional_primes");
    const auto primes = tables.primes().first(primes_upto(tables, x));
    // Neumaier summation; each term (x mod p) / p comes from integer remainders.
    long double sum = 0;
    long double carry = 0;
    for (const std::uint64_t p : primes) {
        const long double term =
            static_cast<long double>(static_cast<std::uint64_t>(x) % p) / static_cast<long double>(p);
        const long double t = sum + term;
        if (std::fabs(sum) >= std::fabs(term))
            carry += (sum - t) + term;
        else
            carry += (term - t) + sum;
        sum = t;
    }
    return {sum + carry, static_cast<std::int64_t>(primes.size())};
}

ExactSum sum_generic_floor_primes(std::int64_t x, std::int64_t a, const IntegerFunction& f, const SieveTables& tables) {
    require_within(x, tables, "sum_generic_floor_primes");
    const auto primes = tables.primes().first(primes_upto(tables, x));
    i128 total = 0;
    std::int64_t skipped = 0;
    for (const std::uint32_t prime : primes) {
        const auto p = static_cast<std::int64_t>(prime);
        if (p + a == 0) {
            ++skipped;
            continue;
        }
        const std::int64_t arg = shifted_quotient_magnitude(x, p, a);
        try {
            total += f(arg);
        } catch (const SummandError&) {
            throw;
        } catch (const std::exception& e) {
            throw SummandError(arg, e.what());
        } catch (...) {
            throw SummandError(arg, "non-standard exception");
        }
    }
    return {narrow_exact(total, "sum_generic_floor_primes"), static_cast<std::int64_t>(primes.size()), skipped};
}

}  // namespace phisum
