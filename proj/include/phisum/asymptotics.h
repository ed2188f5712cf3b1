#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "phisum/floor_sums.h"
#include "phisum/special_values.h"

namespace phisum {

// E(x, a) = S(x, a) - c0 x log log x.
struct SumBreakdown {
    std::int64_t x = 0;
    std::int64_t a = 0;
    std::int64_t exact = 0;
    double main = 0;
    double error = 0;
    double normalized_error = 0;
};

struct FitSample {
    std::int64_t x = 0;
    double normalized_error = 0;
};

enum class FitModel {
    // E/x ~ c1 + c2 li(x)/x
    linear_in_li,
    // E/x ~ c1
    constant_only,
};

struct FitReport {
    double c1_hat = 0;
    double c2_hat = 0;
    // Euclidean norm of the residuals in normalized-error units.
    double residual_norm = 0;
    double max_abs_residual = 0;
    std::vector<FitSample> sample_points;
};

// c0 x log(log x), natural logs. Throws DomainError for x < 3.
double main_term(std::int64_t x, const AsymptoticConstants& constants = kConstants);

// Assemble a breakdown from an already computed exact sum.
SumBreakdown make_breakdown(std::int64_t x, std::int64_t a, std::int64_t exact,
                            const AsymptoticConstants& constants = kConstants);

// Naive exact sum plus main term. Requires 3 <= x <= tables.bound().
SumBreakdown error_term(std::int64_t x, std::int64_t a, const SieveTables& tables,
                        const AsymptoticConstants& constants = kConstants);

// Ordinary least squares of normalized errors against `model`.
// Throws FitError for too few points or a singular design.
FitReport fit_samples(std::span<const FitSample> samples, FitModel model = FitModel::linear_in_li);

// Exact sums at each x (strictly increasing, >= 3, at least 3 points), then
// fit_samples. Throws FitError on a precondition violation.
FitReport fit_c1(std::span<const std::int64_t> xs, std::int64_t a, const SieveTables& tables,
                 const AsymptoticConstants& constants = kConstants, FitModel model = FitModel::linear_in_li);

// c0 x log log x + c1 x + c2 li(x).
double main_term_refined(std::int64_t x, const AsymptoticConstants& constants, const FitReport& fit);

// Checks shared by fit_c1 and the CLI.
void validate_fit_grid(std::span<const std::int64_t> xs);

}  // namespace phisum
