#include <cmath>
#include <vector>

#include "doctest.h"
#include "phisum/asymptotics.h"
#include "phisum/error.h"
#include "phisum/report.h"

using namespace phisum;

namespace {

const SieveTables& tables() {
    static const SieveTables t = build_sieves(1'000'000);
    return t;
}

const std::vector<std::int64_t> kDecades = {10, 100, 1000, 10'000, 100'000, 1'000'000};

}  // namespace

TEST_CASE("main term to two decimals") {
    CHECK(fixed(main_term(10), 2) == "5.07");
    CHECK(fixed(main_term(100), 2) == "92.84");
    CHECK(fixed(main_term(1000), 2) == "1174.91");
    CHECK(fixed(main_term(10'000), 2) == "13497.97");
    // These two rows carry more digits than the published table shows.
    CHECK(main_term(100'000) == doctest::Approx(148545.185301).epsilon(1e-11));
    CHECK(main_term(1'000'000) == doctest::Approx(1596290.068639).epsilon(1e-11));
}

TEST_CASE("natural logarithms twice") {
    CHECK(main_term(10) / 10 / static_cast<double>(kConstants.c0) == doctest::Approx(0.83403).epsilon(1e-5));
}

TEST_CASE("main term domain") {
    CHECK_THROWS_AS(main_term(2), DomainError);
    CHECK_THROWS_AS(main_term(1), DomainError);
    CHECK_NOTHROW(main_term(3));
}

TEST_CASE("error term values") {
    const SumBreakdown b1000 = error_term(1000, 0, tables());
    CHECK(b1000.exact == 1115);
    CHECK(fixed(b1000.error, 2) == "-59.91");
    CHECK(fixed(error_term(10, -4, tables()).error, 2) == "8.93");
    // 94 - 92.84: the published 1.96 does not follow from its own columns.
    CHECK(fixed(error_term(100, 0, tables()).error, 2) == "1.16");
    for (const std::int64_t x : kDecades) {
        const SumBreakdown b = error_term(x, 0, tables());
        CHECK(b.error == doctest::Approx(static_cast<double>(b.exact) - b.main).epsilon(1e-15));
        CHECK(b.normalized_error == doctest::Approx(b.error / static_cast<double>(x)));
        CHECK(std::fabs(b.normalized_error) <= 0.5);
    }
    CHECK_THROWS_AS(error_term(2, 0, tables()), DomainError);
}

TEST_CASE("normalized errors on the decade grid") {
    // x = 10 gives (8 - 5.07)/10 = +0.293; the published error column prints -2.93.
    const std::vector<double> expected = {0.293, 0.0116, -0.0599, -0.0607, -0.0077, -0.0699};
    for (std::size_t i = 0; i < kDecades.size(); ++i) {
        const double ne = error_term(kDecades[i], 0, tables()).normalized_error;
        CAPTURE(kDecades[i]);
        // Expected values carry 3 significant digits.
        CHECK(std::fabs(ne - expected[i]) < 5e-5);
    }
}

TEST_CASE("fit is deterministic and nested models order correctly") {
    const std::vector<std::int64_t> xs = {1000, 10'000, 100'000, 1'000'000};
    const FitReport a = fit_c1(xs, 0, tables());
    const FitReport b = fit_c1(xs, 0, tables());
    CHECK(a.c1_hat == b.c1_hat);
    CHECK(a.c2_hat == b.c2_hat);
    CHECK(a.residual_norm == b.residual_norm);
    const FitReport constant = fit_c1(xs, 0, tables(), kConstants, FitModel::constant_only);
    CHECK(constant.c2_hat == 0.0);
    CHECK(constant.residual_norm > a.residual_norm);
    CHECK(a.sample_points.size() == 4);
}

TEST_CASE("decade-grid fit, pinned") {
    // Two-parameter OLS over E(x,0)/x for x = 10..10^6.
    const FitReport f = fit_c1(kDecades, 0, tables());
    CHECK(f.c1_hat == doctest::Approx(-0.148556).epsilon(1e-5));
    CHECK(f.c2_hat == doctest::Approx(0.780129).epsilon(1e-5));
    double bare_max = 0;
    for (const auto& s : f.sample_points) bare_max = std::max(bare_max, std::fabs(s.normalized_error));
    CHECK(f.max_abs_residual < bare_max);
}

TEST_CASE("residuals shrink as the window's lower end moves up") {
    const FitReport wide = fit_c1(kDecades, 0, tables());
    const FitReport mid = fit_c1(std::vector<std::int64_t>(kDecades.begin() + 1, kDecades.end()), 0, tables());
    const FitReport narrow = fit_c1(std::vector<std::int64_t>(kDecades.begin() + 2, kDecades.end()), 0, tables());
    CHECK(mid.residual_norm < wide.residual_norm);
    CHECK(narrow.residual_norm < mid.residual_norm);
}

TEST_CASE("fit precondition errors") {
    CHECK_THROWS_AS(fit_c1(std::vector<std::int64_t>{1000, 10'000}, 0, tables()), FitError);
    CHECK_THROWS_AS(fit_c1(std::vector<std::int64_t>{1000, 1000, 10'000}, 0, tables()), FitError);
    CHECK_THROWS_AS(fit_c1(std::vector<std::int64_t>{2, 1000, 10'000}, 0, tables()), FitError);
    CHECK_THROWS_AS(fit_c1(std::vector<std::int64_t>{10'000, 1000, 100'000}, 0, tables()), FitError);
    const std::vector<FitSample> same = {{1000, 0.1}, {1000, 0.2}, {1000, 0.3}};
    CHECK_THROWS_AS(fit_samples(same), FitError);
}

TEST_CASE("refined main term") {
    FitReport zero;
    CHECK(main_term_refined(12'345, kConstants, zero) == main_term(12'345));
    CHECK(std::isfinite(main_term_refined(10, kConstants, fit_c1(kDecades, 0, tables()))));
    CHECK_THROWS_AS(main_term_refined(2, kConstants, zero), DomainError);

    // Out of sample: fit on 10..10^5, predict 10^6.
    const FitReport train = fit_c1(std::vector<std::int64_t>(kDecades.begin(), kDecades.end() - 1), 0, tables());
    const SumBreakdown at = error_term(1'000'000, 0, tables());
    const double refined = std::fabs(main_term_refined(1'000'000, kConstants, train) - static_cast<double>(at.exact));
    const double bare = std::fabs(at.main - static_cast<double>(at.exact));
    CHECK(refined / 1e6 < bare / 1e6);
}
