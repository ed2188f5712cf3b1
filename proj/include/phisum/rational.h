#pragma once

#include <cstdint>
#include <numeric>
#include <ostream>

#include "phisum/arith.h"

namespace phisum {

// Reduced fraction with a positive denominator.
class Rational {
public:
    constexpr Rational() = default;
    Rational(std::int64_t num, std::int64_t den = 1) {
        if (den == 0) throw DomainError("rational with zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        const std::int64_t g = std::gcd(num, den);
        num_ = num / g;
        den_ = den / g;
    }

    std::int64_t num() const noexcept { return num_; }
    std::int64_t den() const noexcept { return den_; }
    double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }

    friend bool operator==(const Rational&, const Rational&) = default;

    friend Rational operator+(const Rational& l, const Rational& r) {
        const std::int64_t g = std::gcd(l.den_, r.den_);
        const i128 den = static_cast<i128>(l.den_ / g) * r.den_;
        const i128 num = static_cast<i128>(l.num_) * (r.den_ / g) + static_cast<i128>(r.num_) * (l.den_ / g);
        const i128 h = gcd128(num < 0 ? -num : num, den);
        return {narrow_exact(num / h, "rational numerator"), narrow_exact(den / h, "rational denominator")};
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& q) {
        return os << q.num_ << '/' << q.den_;
    }

private:
    static i128 gcd128(i128 a, i128 b) {
        while (b != 0) {
            const i128 t = a % b;
            a = b;
            b = t;
        }
        return a == 0 ? 1 : a;
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

}  // namespace phisum
