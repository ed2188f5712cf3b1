#include "phisum/special_values.h"

#include <array>
#include <cmath>
#include <string>

#include "phisum/error.h"

namespace phisum {
namespace {

// 10-point Gauss-Legendre on [-1, 1]; symmetric, positive half listed.
constexpr std::array<long double, 5> kNodes = {
    0.148874338981631210884826001129720L, 0.433395394129247190799265943165784L,
    0.679409568299024406234327365114874L, 0.865063366688984510732096688423493L,
    0.973906528517171720077964012084452L};
constexpr std::array<long double, 5> kWeights = {
    0.295524224714752870173892994651338L, 0.269266719309996355091226921569469L,
    0.219086362515982043995534934228163L, 0.149451349150580593145776339657697L,
    0.066671344308688137593568809893332L};

constexpr int kDefaultPanels = 96;

void check_domain(double x) {
    if (!std::isfinite(x) || x < 2.0)
        throw DomainError("li: argument must be a finite value >= 2, got " + std::to_string(x));
}

}  // namespace

double li_composite(double x, int panels) {
    check_domain(x);
    if (panels < 1) throw DomainError("li: panel count must be positive");
    if (x == 2.0) return 0.0;
    // Substituting t = e^u turns dt / log t into e^u / u du on [log 2, log x],
    // which is smooth and free of the t = 1 singularity.
    const long double lo = std::log(2.0L);
    const long double hi = std::log(static_cast<long double>(x));
    const long double h = (hi - lo) / panels;
    long double total = 0;
    for (int k = 0; k < panels; ++k) {
        const long double mid = lo + (k + 0.5L) * h;
        const long double half = h / 2;
        long double panel = 0;
        for (std::size_t i = 0; i < kNodes.size(); ++i) {
            const long double a = mid - half * kNodes[i];
            const long double b = mid + half * kNodes[i];
            panel += kWeights[i] * (std::exp(a) / a + std::exp(b) / b);
        }
        total += panel * half;
    }
    return static_cast<double>(total);
}

double li(double x) { return li_composite(x, kDefaultPanels); }

}  // namespace phisum
