// phisum: exact totient floor sums over (shifted) primes.
//
//   phisum table  [--a A] [--grid 10,100,...] [--csv out.csv]
//   phisum sum    --x X [--a A] [--algorithm naive|blocked]
//   phisum verify [--suite lemmas|oracle|constants|all]
//   phisum fit    [--a A] [--grid 1000,10000,...]
//
// Exit status: 0 success, 1 failed check or capacity/evaluation error,
// 2 usage error.

#include <charconv>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <string_view>
#include <vector>

#include "CLI11.hpp"
#include "phisum/arith.h"
#include "phisum/asymptotics.h"
#include "phisum/error.h"
#include "phisum/floor_sums.h"
#include "phisum/report.h"
#include "phisum/verify.h"

namespace {

constexpr int kUsage = 2;
constexpr int kFailure = 1;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<std::int64_t> parse_grid(std::string_view text) {
    std::vector<std::int64_t> xs;
    while (!text.empty()) {
        const auto comma = text.find(',');
        const std::string_view field = text.substr(0, comma);
        std::int64_t v = 0;
        const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
        if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size())
            throw UsageError("bad grid entry '" + std::string(field) + "'");
        xs.push_back(v);
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    return xs;
}

int run_table(const std::string& grid, std::int64_t a, const std::string& csv_path) {
    phisum::TableSpec spec;
    spec.a = a;
    if (!grid.empty()) spec.xs = parse_grid(grid);
    try {
        phisum::validate_table_spec(spec);
    } catch (const phisum::DomainError& e) {
        throw UsageError(e.what());
    }
    const auto rows = phisum::compute_table(spec, phisum::capacity_from_environment());
    std::cout << "a=" << a << '\n' << phisum::render_table(rows);
    if (!csv_path.empty()) {
        std::ofstream out(csv_path);
        if (!out) throw phisum::Error("cannot open " + csv_path + " for writing");
        phisum::write_csv(out, rows);
    }
    return 0;
}

int run_sum(std::int64_t x, std::int64_t a, const std::string& algorithm_name) {
    phisum::Algorithm algorithm{};
    try {
        algorithm = phisum::parse_algorithm(algorithm_name);
    } catch (const phisum::DomainError& e) {
        throw UsageError(e.what());
    }
    if (x < 1) throw UsageError("--x must be at least 1");
    const phisum::Capacity cap = phisum::capacity_from_environment();
    phisum::ExactSum result;
    if (algorithm == phisum::Algorithm::naive) {
        if (static_cast<std::uint64_t>(x) > cap.sieve)
            throw phisum::BoundError("sieves", "x = " + std::to_string(x) + " exceeds the sieve capacity " +
                                                   std::to_string(cap.sieve) + " (set " + phisum::kSieveCapacityEnv +
                                                   " or use --algorithm blocked with a = 0)");
        const auto tables = phisum::build_sieves(static_cast<std::uint64_t>(x), {.max_bound = cap.sieve});
        result = phisum::sum_phi_floor_primes_naive({x, a, algorithm}, tables);
    } else {
        if (x > cap.blocked)
            throw phisum::BoundError("prime_count", "x = " + std::to_string(x) + " exceeds the blocked-sum ceiling " +
                                                        std::to_string(cap.blocked));
        const std::uint64_t root = std::max<std::uint64_t>(1, phisum::isqrt(static_cast<std::uint64_t>(x)));
        const auto tables = phisum::build_sieves(root, {.max_bound = std::max(cap.sieve, root)});
        const auto counter = phisum::build_prime_counter(x);
        result = phisum::sum_phi_floor_primes_blocked({x, a, algorithm}, tables, counter);
    }
    std::cout << "x=" << x << " a=" << a << " algorithm=" << phisum::to_string(algorithm) << " value=" << result.value
              << " terms=" << result.terms << " skipped=" << result.skipped << '\n';
    return 0;
}

int run_verify(const std::string& suite_name) {
    phisum::Suite suite{};
    try {
        suite = phisum::parse_suite(suite_name);
    } catch (const phisum::DomainError& e) {
        throw UsageError(e.what());
    }
    const auto results = phisum::run_suite(suite);
    std::size_t failed = 0;
    for (const auto& r : results) {
        std::cout << phisum::format_check(r) << '\n';
        if (!r.passed) ++failed;
    }
    std::cout << "summary suite=" << suite_name << " checks=" << results.size() << " failed=" << failed << '\n';
    return failed == 0 ? 0 : kFailure;
}

int run_fit(const std::string& grid, std::int64_t a) {
    phisum::TableSpec spec;
    spec.a = a;
    if (!grid.empty()) spec.xs = parse_grid(grid);
    try {
        phisum::validate_fit_grid(spec.xs);
    } catch (const phisum::FitError& e) {
        throw UsageError(e.what());
    }
    const auto rows = phisum::compute_table(spec, phisum::capacity_from_environment());
    std::vector<phisum::FitSample> samples;
    for (const auto& r : rows) samples.push_back({r.x, r.normalized_error});
    const phisum::FitReport fit = phisum::fit_samples(samples);
    std::cout << "a=" << a << " points=" << samples.size() << '\n'
              << "c1_hat=" << phisum::fixed(fit.c1_hat, 6) << '\n'
              << "c2_hat=" << phisum::fixed(fit.c2_hat, 6) << '\n'
              << "residual_norm=" << phisum::fixed(fit.residual_norm, 6) << '\n'
              << "max_abs_residual=" << phisum::fixed(fit.max_abs_residual, 6) << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact sums of Euler's totient over floor quotients at shifted primes"};
    app.require_subcommand(1);

    std::int64_t x = 0;
    std::int64_t a = 0;
    std::string algorithm = "naive";
    std::string grid;
    std::string csv;
    std::string suite = "all";

    auto* table = app.add_subcommand("table", "Tabulate S(x,a), the main term and E(x,a)");
    table->add_option("--a", a, "Shift a in floor(x/(p+a))");
    table->add_option("--grid", grid, "Comma-separated x values (default 10,100,...,1000000)");
    table->add_option("--csv", csv, "Also write the rows as CSV to this path");

    auto* sum = app.add_subcommand("sum", "Evaluate one sum S(x,a)");
    sum->add_option("--x", x, "Upper limit x")->required();
    sum->add_option("--a", a, "Shift a");
    sum->add_option("--algorithm", algorithm, "naive or blocked (blocked needs a = 0)");

    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("--suite", suite, "lemmas, oracle, constants or all");

    auto* fit = app.add_subcommand("fit", "Fit E(x,a)/x ~ c1 + c2 li(x)/x");
    fit->add_option("--a", a, "Shift a");
    fit->add_option("--grid", grid, "Comma-separated x values, at least 3, strictly increasing");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kUsage;
    }

    try {
        if (*table) return run_table(grid, a, csv);
        if (*sum) return run_sum(x, a, algorithm);
        if (*verify) return run_verify(suite);
        if (*fit) return run_fit(grid, a);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const phisum::BoundError& e) {
        std::cerr << "capacity exceeded in module " << e.module() << ": " << e.what() << '\n';
        return kFailure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFailure;
    }
    return kUsage;
}
