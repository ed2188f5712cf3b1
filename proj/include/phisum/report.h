#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "phisum/asymptotics.h"

namespace phisum {

// Sizing limits for table and sum evaluation.
struct Capacity {
    // Largest sieve built for naive sums (any shift).
    std::uint64_t sieve = 10'000'000;
    // Largest x served through the blocked path when a = 0.
    std::int64_t blocked = 1'000'000'000;
};

// Environment variable that overrides Capacity::sieve.
inline constexpr const char* kSieveCapacityEnv = "PHISUM_SIEVE_CAPACITY";

// Defaults, with the sieve capacity taken from the environment when set.
// Throws DomainError if the variable is not a positive integer.
Capacity capacity_from_environment();

struct TableSpec {
    std::vector<std::int64_t> xs = {10, 100, 1000, 10000, 100000, 1000000};
    std::int64_t a = 0;
};

// Throws DomainError unless xs is non-empty, strictly increasing and >= 3.
void validate_table_spec(const TableSpec& spec);

// One breakdown per x. Naive sums share one sieve up to max(xs); when
// max(xs) exceeds the sieve capacity and a == 0 the blocked path is used
// instead. Throws BoundError naming the limiting module otherwise.
std::vector<SumBreakdown> compute_table(const TableSpec& spec, const Capacity& capacity = {});

// Fixed-width text table: x, exact sum, main term and error to 2 decimals.
std::string render_table(const std::vector<SumBreakdown>& rows);

// CSV with header x,a,exact,main,error,normalized_error; reals to 6 decimals.
void write_csv(std::ostream& os, const std::vector<SumBreakdown>& rows);

struct CsvRow {
    std::int64_t x = 0;
    std::int64_t a = 0;
    std::int64_t exact = 0;
    double main = 0;
    double error = 0;
    double normalized_error = 0;
};

// Inverse of write_csv. Throws DomainError on a malformed document.
std::vector<CsvRow> parse_csv(std::istream& is);

// printf-style helper for the fixed decimal places used in output.
std::string fixed(double v, int decimals);

}  // namespace phisum
