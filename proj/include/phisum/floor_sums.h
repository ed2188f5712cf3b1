#pragma once

#include <cstdint>
#include <functional>
#include <string_view>

#include "phisum/prime_count.h"
#include "phisum/sieves.h"

namespace phisum {

enum class Algorithm { naive, blocked };

std::string_view to_string(Algorithm a) noexcept;
// Throws DomainError on anything but "naive" or "blocked".
Algorithm parse_algorithm(std::string_view name);

// One evaluation of S(x, a) = sum over primes p <= x of phi(|floor(x / (p + a))|).
struct SumQuery {
    std::int64_t x = 1;
    std::int64_t a = 0;
    Algorithm algorithm = Algorithm::naive;
};

struct ExactSum {
    std::int64_t value = 0;
    // Indices summed over: pi(x) for prime sums, x for the integer sum.
    std::int64_t terms = 0;
    // Primes with p + a == 0, left out of `value` but counted in `terms`.
    std::int64_t skipped = 0;

    friend bool operator==(const ExactSum&, const ExactSum&) = default;
};

// Quotient floor(x / (p + a)) folded to a totient argument: |q|.
// The caller guarantees p + a != 0.
inline std::int64_t shifted_quotient_magnitude(std::int64_t x, std::int64_t p, std::int64_t a) {
    const std::int64_t d = p + a;
    std::int64_t q = x / d;
    if ((x % d != 0) && ((x < 0) != (d < 0))) --q;
    return q < 0 ? -q : q;
}

// Loop over the primes of `tables`, any shift. Requires x <= tables.bound().
ExactSum sum_phi_floor_primes_naive(const SumQuery& query, const SieveTables& tables);

// Quotient-block evaluation for a = 0. Primes p <= floor(sqrt x) are summed
// directly; every larger prime has m = floor(x / p) < sqrt x and is counted in
// bulk as phi(m) * (pi(floor(x/m)) - pi(max(floor(x/(m+1)), floor(sqrt x)))).
// Requires tables.bound() >= floor(sqrt x) and counter.x() == x.
ExactSum sum_phi_floor_primes_blocked(const SumQuery& query, const SieveTables& tables,
                                      const PrimeCounter& counter);

// Dispatch on query.algorithm. `counter` may be null for naive queries.
ExactSum sum_phi_floor_primes(const SumQuery& query, const SieveTables& tables,
                              const PrimeCounter* counter);

// sum over n <= x of phi(floor(x / n)); requires x <= tables.bound().
ExactSum sum_phi_floor_integers(std::int64_t x, const SieveTables& tables);

// sum over primes p <= x of floor(x / p), by quotient blocks on the counter.
ExactSum sum_floor_primes(std::int64_t x, const PrimeCounter& counter);

struct FractionalSum {
    long double value = 0;
    std::int64_t terms = 0;
};

// sum over primes p <= x of {x / p} = (x mod p) / p, compensated summation.
FractionalSum sum_fractional_primes(std::int64_t x, const SieveTables& tables);

using IntegerFunction = std::function<std::int64_t(std::int64_t)>;

// sum over primes p <= x, p + a != 0, of f(|floor(x / (p + a))|). Exceptions
// thrown by f are rethrown as SummandError carrying the argument.
ExactSum sum_generic_floor_primes(std::int64_t x, std::int64_t a, const IntegerFunction& f,
                                  const SieveTables& tables);

}  // namespace phisum
