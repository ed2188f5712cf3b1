#include "phisum/identities.h"

#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <vector>

#include "phisum/error.h"

namespace phisum {
namespace {

void require_table(std::int64_t m, const SieveTables& tables, const char* op) {
    if (m < 1) throw DomainError(std::string(op) + ": argument must be at least 1, got " + std::to_string(m));
    if (static_cast<std::uint64_t>(m) > tables.bound())
        throw BoundError("sieves", std::string(op) + ": " + std::to_string(m) + " exceeds sieve bound " +
                                       std::to_string(tables.bound()));
}

// Summed from the smallest terms up.
double basel_from_mu(std::int64_t x, std::span<const std::int8_t> mu) {
    long double sum = 0;
    for (std::int64_t d = x; d >= 1; --d) {
        const int v = mu[static_cast<std::size_t>(d)];
        if (v == 0) continue;
        const long double dd = static_cast<long double>(d);
        sum += v / (dd * dd);
    }
    return static_cast<double>(sum);
}

}  // namespace

IndicatorResult divisor_indicator(std::int64_t d, std::int64_t m) {
    if (d < 1) throw DomainError("divisor_indicator: d must be at least 1, got " + std::to_string(d));
    if (m < 0) throw DomainError("divisor_indicator: m must be non-negative, got " + std::to_string(m));
    const std::int64_t r = m % d;
    std::complex<long double> acc = 0;
    std::int64_t phase = 0;  // r * s mod d, kept exact
    for (std::int64_t s = 0; s < d; ++s) {
        const long double angle = 2 * std::numbers::pi_v<long double> * phase / d;
        acc += std::polar(1.0L, angle);
        phase += r;
        if (phase >= d) phase -= d;
    }
    IndicatorResult out;
    out.d = d;
    out.m = m;
    out.value = static_cast<double>(std::abs(acc) / d);
    out.is_divisor = r == 0;
    if ((std::lround(out.value) == 1) != out.is_divisor)
        throw Error("divisor_indicator: exponential sum " + std::to_string(out.value) + " disagrees with " +
                    std::to_string(d) + (out.is_divisor ? " | " : " !| ") + std::to_string(m));
    return out;
}

MobiusDivisorSums mobius_divisor_sums(std::int64_t m, const SieveTables& tables) {
    require_table(m, tables, "mobius_divisor_sums");
    if (m > 3'000'000'000) throw BoundError("identities", "m^2 must fit the 64-bit denominator");
    // Common denominators m and m^2: sum mu(d) (m/d) and sum mu(d) (m/d)^2.
    i128 n1 = 0;
    i128 n2 = 0;
    for (std::int64_t d = 1; d * d <= m; ++d) {
        if (m % d != 0) continue;
        const std::int64_t e = m / d;
        n1 += static_cast<i128>(tables.mu(static_cast<std::uint64_t>(d))) * e;
        n2 += static_cast<i128>(tables.mu(static_cast<std::uint64_t>(d))) * e * e;
        if (e != d) {
            n1 += static_cast<i128>(tables.mu(static_cast<std::uint64_t>(e))) * d;
            n2 += static_cast<i128>(tables.mu(static_cast<std::uint64_t>(e))) * d * d;
        }
    }
    return {Rational(narrow_exact(n1, "s1 numerator"), m), Rational(narrow_exact(n2, "s2 numerator"), m * m)};
}

double mobius_nondivisor_square_sum(std::int64_t m, std::int64_t x, const SieveTables& tables) {
    require_table(x, tables, "mobius_nondivisor_square_sum");
    if (m < 1 || m > x) throw DomainError("mobius_nondivisor_square_sum: need 1 <= m <= x");
    return basel_partial(x, tables) - mobius_divisor_sums(m, tables).s2.to_double();
}

double basel_partial(std::int64_t x, const SieveTables& tables) {
    require_table(x, tables, "basel_partial");
    return basel_from_mu(x, tables.mu_values());
}

double basel_partial(std::int64_t x) {
    if (x < 1) throw DomainError("basel_partial: x must be at least 1");
    const SieveTables tables = build_sieves(static_cast<std::uint64_t>(x));
    return basel_from_mu(x, tables.mu_values());
}

}  // namespace phisum
