#include "phisum/report.h"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>

#include "phisum/arith.h"
#include "phisum/error.h"

namespace phisum {
namespace {

template <typename T>
T parse_number(std::string_view field, std::size_t line) {
    T v{};
    const auto* end = field.data() + field.size();
    const auto [ptr, ec] = std::from_chars(field.data(), end, v);
    if (ec != std::errc{} || ptr != end)
        throw DomainError("csv line " + std::to_string(line) + ": bad field '" + std::string(field) + "'");
    return v;
}

}  // namespace

std::string fixed(double v, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
    return buf;
}

Capacity capacity_from_environment() {
    Capacity c;
    if (const char* env = std::getenv(kSieveCapacityEnv); env != nullptr && *env != '\0') {
        std::uint64_t v = 0;
        const std::string_view s(env);
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc{} || ptr != s.data() + s.size() || v == 0)
            throw DomainError(std::string(kSieveCapacityEnv) + " must be a positive integer, got '" + env + "'");
        c.sieve = v;
    }
    return c;
}

void validate_table_spec(const TableSpec& spec) {
    if (spec.xs.empty()) throw DomainError("table: empty x grid");
    for (std::size_t i = 0; i < spec.xs.size(); ++i) {
        if (spec.xs[i] < 3) throw DomainError("table: every x must be at least 3, got " + std::to_string(spec.xs[i]));
        if (i > 0 && spec.xs[i] <= spec.xs[i - 1]) throw DomainError("table: x grid must be strictly increasing");
    }
}

std::vector<SumBreakdown> compute_table(const TableSpec& spec, const Capacity& capacity) {
    validate_table_spec(spec);
    const std::int64_t top = spec.xs.back();
    std::vector<SumBreakdown> rows;
    rows.reserve(spec.xs.size());

    if (static_cast<std::uint64_t>(top) <= capacity.sieve) {
        const SieveTables tables =
            build_sieves(static_cast<std::uint64_t>(top), {.max_bound = std::max(capacity.sieve, std::uint64_t{1})});
        for (const std::int64_t x : spec.xs) {
            const ExactSum s = sum_phi_floor_primes_naive({x, spec.a, Algorithm::naive}, tables);
            rows.push_back(make_breakdown(x, spec.a, s.value));
        }
        return rows;
    }
    if (spec.a != 0)
        throw BoundError("sieves", "x = " + std::to_string(top) + " exceeds the sieve capacity " +
                                       std::to_string(capacity.sieve) + " and shifted sums need the naive path");
    if (top > capacity.blocked)
        throw BoundError("prime_count", "x = " + std::to_string(top) + " exceeds the blocked-sum ceiling " +
                                            std::to_string(capacity.blocked));
    const std::uint64_t root = isqrt(static_cast<std::uint64_t>(top));
    if (root > capacity.sieve)
        throw BoundError("sieves", "blocked sum needs a sieve of " + std::to_string(root) + ", capacity is " +
                                       std::to_string(capacity.sieve));
    const SieveTables tables = build_sieves(std::max<std::uint64_t>(root, 1));
    for (const std::int64_t x : spec.xs) {
        const PrimeCounter counter = build_prime_counter(x);
        const ExactSum s = sum_phi_floor_primes_blocked({x, 0, Algorithm::blocked}, tables, counter);
        rows.push_back(make_breakdown(x, spec.a, s.value));
    }
    return rows;
}

std::string render_table(const std::vector<SumBreakdown>& rows) {
    std::ostringstream os;
    char line[160];
    std::snprintf(line, sizeof line, "%12s  %14s  %18s  %16s\n", "x", "sum", "main", "error");
    os << line;
    for (const auto& r : rows) {
        std::snprintf(line, sizeof line, "%12lld  %14lld  %18.2f  %16.2f\n", static_cast<long long>(r.x),
                      static_cast<long long>(r.exact), r.main, r.error);
        os << line;
    }
    return os.str();
}

void write_csv(std::ostream& os, const std::vector<SumBreakdown>& rows) {
    os << "x,a,exact,main,error,normalized_error\n";
    for (const auto& r : rows)
        os << r.x << ',' << r.a << ',' << r.exact << ',' << fixed(r.main, 6) << ',' << fixed(r.error, 6) << ','
           << fixed(r.normalized_error, 6) << '\n';
}

std::vector<CsvRow> parse_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line) || line != "x,a,exact,main,error,normalized_error")
        throw DomainError("csv: missing or unexpected header");
    std::vector<CsvRow> rows;
    std::size_t lineno = 1;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::vector<std::string_view> fields;
        std::string_view rest(line);
        for (;;) {
            const auto comma = rest.find(',');
            fields.push_back(rest.substr(0, comma));
            if (comma == std::string_view::npos) break;
            rest.remove_prefix(comma + 1);
        }
        if (fields.size() != 6)
            throw DomainError("csv line " + std::to_string(lineno) + ": expected 6 fields, got " +
                              std::to_string(fields.size()));
        CsvRow r;
        r.x = parse_number<std::int64_t>(fields[0], lineno);
        r.a = parse_number<std::int64_t>(fields[1], lineno);
        r.exact = parse_number<std::int64_t>(fields[2], lineno);
        r.main = parse_number<double>(fields[3], lineno);
        r.error = parse_number<double>(fields[4], lineno);
        r.normalized_error = parse_number<double>(fields[5], lineno);
        rows.push_back(r);
    }
    return rows;
}

}  // namespace phisum
