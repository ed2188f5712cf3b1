#include "phisum/prime_count.h"

#include <string>

#include "phisum/arith.h"
#include "phisum/error.h"

namespace phisum {

PrimeCounter::PrimeCounter(std::int64_t x) : x_(x) {
    if (x < 1) throw DomainError("prime_count: x must be at least 1, got " + std::to_string(x));
    if (x > kMaxPrimeCounterX)
        throw BoundError("prime_count", "x = " + std::to_string(x) + " is above the tested ceiling " +
                                            std::to_string(kMaxPrimeCounterX));
    root_ = static_cast<std::int64_t>(isqrt(static_cast<std::uint64_t>(x)));
    const auto r = static_cast<std::size_t>(root_);
    small_.assign(r + 1, 0);
    large_.assign(r + 1, 0);
    // Start from "everything >= 2 is prime" and sieve each prime p <= sqrt x
    // out of every count; S(v) -= S(v/p) - S(p-1) for v >= p^2.
    for (std::size_t v = 1; v <= r; ++v) small_[v] = static_cast<std::int64_t>(v) - 1;
    for (std::size_t n = 1; n <= r; ++n) large_[n] = x / static_cast<std::int64_t>(n) - 1;

    for (std::int64_t p = 2; p <= root_; ++p) {
        const auto pu = static_cast<std::size_t>(p);
        if (small_[pu] == small_[pu - 1]) continue;
        const std::int64_t below = small_[pu - 1];
        const std::int64_t p2 = p * p;
        const std::int64_t upto = std::min(root_, x / p2);
        // Ascending n reads large_[n * p] before that slot is rewritten.
        for (std::int64_t n = 1; n <= upto; ++n) {
            const std::int64_t d = n * p;
            const std::int64_t sub = d <= root_ ? large_[static_cast<std::size_t>(d)]
                                                : small_[static_cast<std::size_t>(x / d)];
            large_[static_cast<std::size_t>(n)] -= sub - below;
        }
        for (std::int64_t v = root_; v >= p2; --v)
            small_[static_cast<std::size_t>(v)] -= small_[static_cast<std::size_t>(v / p)] - below;
    }
}

bool PrimeCounter::is_quotient_value(std::int64_t y) const noexcept {
    if (y < 1 || y > x_) return false;
    if (y <= root_) return true;
    return x_ / (x_ / y) == y;
}

std::int64_t PrimeCounter::pi_of_value(std::int64_t y) const {
    if (y <= 0) return 0;
    if (!is_quotient_value(y))
        throw DomainError("prime_count: " + std::to_string(y) + " is not of the form floor(" + std::to_string(x_) +
                          " / n)");
    if (y <= root_) return small_[static_cast<std::size_t>(y)];
    return large_[static_cast<std::size_t>(x_ / y)];
}

std::size_t PrimeCounter::distinct_quotients() const noexcept {
    // 1..root_ plus x/n for n <= root_, minus the overlap when x/root_ == root_.
    const auto r = static_cast<std::size_t>(root_);
    return x_ / root_ == root_ ? 2 * r - 1 : 2 * r;
}

std::vector<std::pair<std::int64_t, std::int64_t>> PrimeCounter::values() const {
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    out.reserve(distinct_quotients());
    for (std::int64_t v = 1; v <= root_; ++v) out.emplace_back(v, small_[static_cast<std::size_t>(v)]);
    for (std::int64_t n = root_; n >= 1; --n) {
        const std::int64_t y = x_ / n;
        if (y > root_) out.emplace_back(y, large_[static_cast<std::size_t>(n)]);
    }
    return out;
}

PrimeCounter build_prime_counter(std::int64_t x) { return PrimeCounter(x); }

}  // namespace phisum
