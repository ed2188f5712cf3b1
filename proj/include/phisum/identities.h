#pragma once

#include <cstdint>

#include "phisum/rational.h"
#include "phisum/sieves.h"

namespace phisum {

struct IndicatorResult {
    std::int64_t d = 1;
    std::int64_t m = 0;
    // |(1/d) sum_{s<d} exp(2 pi i m s / d)|
    double value = 0;
    // d | m by integer arithmetic.
    bool is_divisor = false;
};

// Evaluates the root-of-unity average in floating point and cross-checks it
// against d | m. Phases are reduced mod d before scaling, which keeps the
// value within 1e-12 of {0, 1} for d <= 10^4.
// Throws DomainError for d < 1 or m < 0.
IndicatorResult divisor_indicator(std::int64_t d, std::int64_t m);

struct MobiusDivisorSums {
    Rational s1;  // sum_{d|m} mu(d)/d, equals phi(m)/m
    Rational s2;  // sum_{d|m} mu(d)/d^2
};

// Exact sums over the divisors of m. Requires 1 <= m <= tables.bound().
MobiusDivisorSums mobius_divisor_sums(std::int64_t m, const SieveTables& tables);

// sum_{d<=x, d does not divide m} mu(d)/d^2, as basel_partial(x) - s2.
// Requires m <= x <= tables.bound().
double mobius_nondivisor_square_sum(std::int64_t m, std::int64_t x, const SieveTables& tables);

// sum_{d<=x} mu(d)/d^2. The overload without tables sieves Moebius itself.
double basel_partial(std::int64_t x);
double basel_partial(std::int64_t x, const SieveTables& tables);

}  // namespace phisum
