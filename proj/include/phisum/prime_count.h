#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace phisum {

// Tested ceiling for build_prime_counter.
inline constexpr std::int64_t kMaxPrimeCounterX = 1'000'000'000'000;

// pi(y) at every y = floor(x / n), n >= 1, computed with the Legendre-style
// dynamic program over the distinct quotient values (Lucy's method):
// O(x^{3/4}) time, O(sqrt x) space, no enumeration of primes up to x.
//
// Quotients y <= sqrt(x) live in `small_` indexed by y; larger ones in
// `large_` indexed by n = x / y.
class PrimeCounter {
public:
    explicit PrimeCounter(std::int64_t x);

    std::int64_t x() const noexcept { return x_; }
    std::int64_t sqrt_x() const noexcept { return root_; }

    // pi(floor(x / n)); 0 for n > x. Requires n >= 1.
    std::int64_t pi_at_quotient(std::int64_t n) const noexcept {
        if (n > x_) return 0;
        const std::int64_t y = x_ / n;
        return y <= root_ ? small_[static_cast<std::size_t>(y)] : large_[static_cast<std::size_t>(n)];
    }

    // pi(y) for a value y that is itself a quotient floor(x / n). Every
    // y <= sqrt(x) qualifies. Throws DomainError otherwise.
    std::int64_t pi_of_value(std::int64_t y) const;

    bool is_quotient_value(std::int64_t y) const noexcept;

    // Primality of v <= sqrt(x), read off the count table.
    bool is_small_prime(std::int64_t v) const noexcept {
        return v >= 2 && v <= root_ && small_[static_cast<std::size_t>(v)] != small_[static_cast<std::size_t>(v - 1)];
    }

    // All (q, pi(q)) pairs over the distinct quotients, ascending in q.
    std::vector<std::pair<std::int64_t, std::int64_t>> values() const;
    std::size_t distinct_quotients() const noexcept;

private:
    std::int64_t x_;
    std::int64_t root_;
    std::vector<std::int64_t> small_;  // small_[v] = pi(v), 0 <= v <= root_
    std::vector<std::int64_t> large_;  // large_[n] = pi(x / n), 1 <= n <= root_
};

// Throws DomainError for x < 1 and BoundError above kMaxPrimeCounterX.
PrimeCounter build_prime_counter(std::int64_t x);

inline std::int64_t pi_at_quotient(const PrimeCounter& counter, std::int64_t n) {
    return counter.pi_at_quotient(n);
}

}  // namespace phisum
