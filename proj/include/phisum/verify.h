#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "phisum/report.h"

namespace phisum {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

enum class Suite { lemmas, oracle, constants, all };

// Throws DomainError for anything other than lemmas, oracle, constants, all.
Suite parse_suite(std::string_view name);

std::vector<CheckResult> run_suite(Suite suite);

// "check=<name> status=PASS|FAIL detail=<text>"
std::string format_check(const CheckResult& result);

}  // namespace phisum
