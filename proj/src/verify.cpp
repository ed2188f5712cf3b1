#include "phisum/verify.h"

#include <array>
#include <cmath>
#include <random>
#include <string>

#include "phisum/error.h"
#include "phisum/identities.h"

namespace phisum {
namespace {

struct PublishedRow {
    std::int64_t x;
    std::int64_t exact;
    double main;
    double error;
};

// Published numerical tables for a = 0, -4, +4 (two-decimal reals).
constexpr std::array<PublishedRow, 6> kTableA0 = {{{10, 8, 5.07, -2.93},
                                                    {100, 94, 92.84, 1.96},
                                                    {1000, 1115, 1174.91, -59.91},
                                                    {10000, 12891, 13497.97, -606.97},
                                                    {100000, 147771, 148545.18, -774.20},
                                                    {1000000, 1526405, 1596290.10, -69885.10}}};
constexpr std::array<PublishedRow, 6> kTableAm4 = {{{10, 14, 5.07, 8.93},
                                                     {100, 167, 92.84, 74.16},
                                                     {1000, 1868, 1174.91, 693.09},
                                                     {10000, 20537, 13497.97, 7039.03},
                                                     {100000, 224901, 148545.18, 76355.81},
                                                     {1000000, 2244876, 1596290.10, 648585.93}}};
constexpr std::array<PublishedRow, 6> kTableAp4 = {{{10, 3, 5.07, -2.07},
                                                     {100, 58, 92.84, -34.84},
                                                     {1000, 791, 1174.91, -383.91},
                                                     {10000, 8956, 13497.97, -4541.97},
                                                     {100000, 113334, 148545.18, -35211.19},
                                                     {1000000, 1225300, 1596290.10, -370990.07}}};

CheckResult check(std::string name, bool ok, std::string detail) {
    return {std::move(name), ok, std::move(detail)};
}

void lemma_checks(std::vector<CheckResult>& out) {
    double worst = 0;
    for (std::int64_t d = 1; d <= 200; ++d)
        for (std::int64_t m = 0; m <= 500; ++m) {
            const IndicatorResult r = divisor_indicator(d, m);
            worst = std::max(worst, std::fabs(r.value - (m % d == 0 ? 1.0 : 0.0)));
        }
    out.push_back(check("indicator.exhaustive", worst < 1e-9, "d<=200 m<=500 max_dev=" + std::to_string(worst)));

    const SieveTables tables = build_sieves(1'000'000);
    std::int64_t s1_bad = 0;
    std::int64_t s2_bad = 0;
    for (std::int64_t m = 1; m <= 10'000; ++m) {
        const MobiusDivisorSums s = mobius_divisor_sums(m, tables);
        if (!(s.s1 == Rational(static_cast<std::int64_t>(tables.phi(static_cast<std::uint64_t>(m))), m))) ++s1_bad;
        if (!(std::fabs(s.s2.to_double()) < 2.0)) ++s2_bad;
    }
    out.push_back(check("mobius.s1_is_phi_ratio", s1_bad == 0, "m<=10000 mismatches=" + std::to_string(s1_bad)));
    out.push_back(check("mobius.s2_below_two", s2_bad == 0, "m<=10000 violations=" + std::to_string(s2_bad)));

    std::int64_t totient_bad = 0;
    for (std::uint64_t n = 1; n <= 10'000; ++n) {
        std::uint64_t phi_sum = 0;
        std::int64_t mu_sum = 0;
        for (std::uint64_t d = 1; d <= n; ++d)
            if (n % d == 0) {
                phi_sum += tables.phi(d);
                mu_sum += tables.mu(d);
            }
        if (phi_sum != n || mu_sum != (n == 1 ? 1 : 0)) ++totient_bad;
    }
    out.push_back(check("sieve.divisor_sums", totient_bad == 0, "n<=10000 mismatches=" + std::to_string(totient_bad)));

    for (std::int64_t x = 10; x <= 1'000'000; x *= 10) {
        const double dev = std::fabs(basel_partial(x, tables) - static_cast<double>(kConstants.c0));
        out.push_back(check("basel.tail.x=" + std::to_string(x), dev <= 2.0 / static_cast<double>(x),
                            "dev=" + std::to_string(dev)));
    }
}

void oracle_checks(std::vector<CheckResult>& out) {
    const SieveTables tables = build_sieves(100'000);
    auto compare = [&](std::int64_t x) {
        const PrimeCounter counter = build_prime_counter(x);
        const auto naive = sum_phi_floor_primes_naive({x, 0, Algorithm::naive}, tables);
        const auto blocked = sum_phi_floor_primes_blocked({x, 0, Algorithm::blocked}, tables, counter);
        return naive == blocked;
    };
    for (std::int64_t x = 10; x <= 100'000; x *= 10)
        out.push_back(check("oracle.blocked_equals_naive.x=" + std::to_string(x), compare(x), ""));
    std::mt19937_64 rng(20240521);
    std::uniform_int_distribution<std::int64_t> pick(1, 100'000);
    int bad = 0;
    for (int i = 0; i < 200; ++i)
        if (!compare(pick(rng))) ++bad;
    out.push_back(check("oracle.blocked_equals_naive.random", bad == 0, "200 draws mismatches=" + std::to_string(bad)));

    bad = 0;
    const PrimeCounter counter = build_prime_counter(100'000);
    for (std::int64_t n = 1; n <= 100'001; ++n)
        if (counter.pi_at_quotient(n) != static_cast<std::int64_t>(tables.prime_pi(100'000 / static_cast<std::uint64_t>(n))))
            ++bad;
    out.push_back(check("oracle.prime_counter_equals_sieve.x=100000", bad == 0, "mismatches=" + std::to_string(bad)));
}

void constant_checks(std::vector<CheckResult>& out) {
    const auto& k = kConstants;
    out.push_back(check("constant.c0", std::fabs(static_cast<double>(k.c0) - 0.6079271018) < 1e-9, fixed(static_cast<double>(k.c0), 12)));
    out.push_back(check("constant.gamma", std::fabs(static_cast<double>(k.gamma) - 0.5772156649) < 1e-9, fixed(static_cast<double>(k.gamma), 12)));
    out.push_back(check("constant.b1", std::fabs(static_cast<double>(k.b1) - 0.2614972128) < 1e-9, fixed(static_cast<double>(k.b1), 12)));
    out.push_back(check("constant.one_minus_gamma", k.one_minus_gamma == 1.0L - k.gamma, ""));

    const SieveTables tables = build_sieves(1'000'000);
    long double reciprocal = 0;
    for (const std::uint32_t p : tables.primes()) reciprocal += 1.0L / p;
    const double b1_hat = static_cast<double>(reciprocal - std::log(std::log(1e6L)));
    out.push_back(check("constant.b1_recomputed", std::fabs(b1_hat - static_cast<double>(k.b1)) < 5e-4,
                        "sum_{p<=1e6} 1/p - loglog 1e6 = " + fixed(b1_hat, 6)));

    // Printed main-term column, to the two decimals shown.
    for (const auto& row : kTableA0) {
        const double m = main_term(row.x);
        out.push_back(check("main_term.published.x=" + std::to_string(row.x), std::fabs(m - row.main) <= 0.005,
                            "computed=" + fixed(m, 4) + " printed=" + fixed(row.main, 2)));
    }
    // Main term implied by exact - error in the shifted tables; two roundings
    // of 0.005 each bound the disagreement.
    for (const auto* table : {&kTableAm4, &kTableAp4}) {
        const char* tag = table == &kTableAm4 ? "a=-4" : "a=4";
        for (const auto& row : *table) {
            const double implied = static_cast<double>(row.exact) - row.error;
            const double m = main_term(row.x);
            out.push_back(check(std::string("main_term.implied.") + tag + ".x=" + std::to_string(row.x),
                                std::fabs(m - implied) <= 0.01, "computed=" + fixed(m, 4) + " implied=" + fixed(implied, 2)));
        }
    }
}

}  // namespace

Suite parse_suite(std::string_view name) {
    if (name == "lemmas") return Suite::lemmas;
    if (name == "oracle") return Suite::oracle;
    if (name == "constants") return Suite::constants;
    if (name == "all") return Suite::all;
    throw DomainError("unknown suite '" + std::string(name) + "' (expected lemmas, oracle, constants or all)");
}

std::vector<CheckResult> run_suite(Suite suite) {
    std::vector<CheckResult> out;
    if (suite == Suite::lemmas || suite == Suite::all) lemma_checks(out);
    if (suite == Suite::oracle || suite == Suite::all) oracle_checks(out);
    if (suite == Suite::constants || suite == Suite::all) constant_checks(out);
    return out;
}

std::string format_check(const CheckResult& r) {
    std::string s = "check=" + r.name + " status=" + (r.passed ? "PASS" : "FAIL");
    if (!r.detail.empty()) s += " detail=" + r.detail;
    return s;
}

}  // namespace phisum
