#include "phisum/asymptotics.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "phisum/error.h"

namespace phisum {

double main_term(std::int64_t x, const AsymptoticConstants& constants) {
    if (x < 3) throw DomainError("main_term: x must be at least 3 so that log log x > 0, got " + std::to_string(x));
    const long double xl = static_cast<long double>(x);
    return static_cast<double>(constants.c0 * xl * std::log(std::log(xl)));
}

SumBreakdown make_breakdown(std::int64_t x, std::int64_t a, std::int64_t exact, const AsymptoticConstants& constants) {
    SumBreakdown b;
    b.x = x;
    b.a = a;
    b.exact = exact;
    b.main = main_term(x, constants);
    b.error = static_cast<double>(static_cast<long double>(exact) - static_cast<long double>(b.main));
    b.normalized_error = b.error / static_cast<double>(x);
    return b;
}

SumBreakdown error_term(std::int64_t x, std::int64_t a, const SieveTables& tables, const AsymptoticConstants& constants) {
    if (x < 3) throw DomainError("error_term: x must be at least 3, got " + std::to_string(x));
    const ExactSum s = sum_phi_floor_primes_naive({x, a, Algorithm::naive}, tables);
    return make_breakdown(x, a, s.value, constants);
}

void validate_fit_grid(std::span<const std::int64_t> xs) {
    if (xs.size() < 3) throw FitError("fit needs at least 3 grid points, got " + std::to_string(xs.size()));
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (xs[i] < 3) throw FitError("fit grid point " + std::to_string(xs[i]) + " is below 3");
        if (i > 0 && xs[i] <= xs[i - 1])
            throw FitError("fit grid must be strictly increasing (" + std::to_string(xs[i - 1]) + " then " +
                           std::to_string(xs[i]) + ")");
    }
}

FitReport fit_samples(std::span<const FitSample> samples, FitModel model) {
    const std::size_t need = model == FitModel::linear_in_li ? 2 : 1;
    if (samples.size() < need) throw FitError("not enough samples for the fit model");

    FitReport report;
    report.sample_points.assign(samples.begin(), samples.end());

    // Regressor g(x) = li(x)/x; solve the 2x2 normal equations in centred form.
    std::vector<long double> g(samples.size());
    long double mean_g = 0;
    long double mean_y = 0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        g[i] = model == FitModel::linear_in_li
                   ? static_cast<long double>(li(static_cast<double>(samples[i].x))) / samples[i].x
                   : 0.0L;
        mean_g += g[i];
        mean_y += samples[i].normalized_error;
    }
    mean_g /= samples.size();
    mean_y /= samples.size();

    long double c1 = mean_y;
    long double c2 = 0;
    if (model == FitModel::linear_in_li) {
        long double sgg = 0;
        long double sgy = 0;
        for (std::size_t i = 0; i < samples.size(); ++i) {
            sgg += (g[i] - mean_g) * (g[i] - mean_g);
            sgy += (g[i] - mean_g) * (samples[i].normalized_error - mean_y);
        }
        if (!(sgg > 1e-24L * (1 + mean_g * mean_g))) throw FitError("degenerate design: regressor li(x)/x is constant");
        c2 = sgy / sgg;
        c1 = mean_y - c2 * mean_g;
    }

    long double ss = 0;
    long double worst = 0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const long double r = samples[i].normalized_error - (c1 + c2 * g[i]);
        ss += r * r;
        worst = std::max(worst, std::fabs(r));
    }
    report.c1_hat = static_cast<double>(c1);
    report.c2_hat = static_cast<double>(c2);
    report.residual_norm = static_cast<double>(std::sqrt(ss));
    report.max_abs_residual = static_cast<double>(worst);
    return report;
}

FitReport fit_c1(std::span<const std::int64_t> xs, std::int64_t a, const SieveTables& tables,
                 const AsymptoticConstants& constants, FitModel model) {
    validate_fit_grid(xs);
    std::vector<FitSample> samples;
    samples.reserve(xs.size());
    for (const std::int64_t x : xs) samples.push_back({x, error_term(x, a, tables, constants).normalized_error});
    return fit_samples(samples, model);
}

double main_term_refined(std::int64_t x, const AsymptoticConstants& constants, const FitReport& fit) {
    const double base = main_term(x, constants);
    if (fit.c1_hat == 0.0 && fit.c2_hat == 0.0) return base;
    const double xd = static_cast<double>(x);
    return base + fit.c1_hat * xd + fit.c2_hat * li(xd);
}

}  // namespace phisum
