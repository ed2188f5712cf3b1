#pragma once

#include <numbers>

namespace phisum {

// Constants of the asymptotic formulas. Literals, not computed at runtime.
struct AsymptoticConstants {
    // 6/pi^2 = 0.60792 71018 54026 62866 ... (OEIS A059956)
    long double c0 = 0.607927101854026628663276779258L;
    // Euler-Mascheroni 0.57721 56649 01532 86060 ... (OEIS A001620)
    long double gamma = 0.577215664901532860606512090082L;
    // Meissel-Mertens 0.26149 72128 47642 78375 ... (OEIS A077761)
    long double b1 = 0.261497212847642783755426838608L;
    long double one_minus_gamma = 1.0L - 0.577215664901532860606512090082L;
};

inline constexpr AsymptoticConstants kConstants{};

// li(2) for the principal-value integral, 1.04516 37801 17492 78484 ...
// (OEIS A069284). Offset and principal forms differ by exactly this.
inline constexpr long double kLiOfTwo = 1.045163780117492784844588889194L;

// Offset logarithmic integral Li(x) = integral from 2 to x of dt / log t.
// The lower limit 2 keeps the integrand finite. Throws DomainError for
// x < 2 (and for non-finite x).
double li(double x);

// Same integral on a fixed composite Gauss-Legendre grid of `panels`
// panels in u = log t. Exposed to check step refinement.
double li_composite(double x, int panels);

}  // namespace phisum
