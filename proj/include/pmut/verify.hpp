#pragma once

#include <string>
#include <vector>

namespace pmut {

struct CheckResult {
    std::string name;
    bool ok = false;
    std::string detail;
};

// Re-derives the printed valuation tables and diffs them against the fixtures.
std::vector<CheckResult> verify_tables();
// Invariant suites of every module.
std::vector<CheckResult> verify_properties();

bool all_ok(const std::vector<CheckResult>& rs);
std::string format_results(const std::vector<CheckResult>& rs);

}  // namespace pmut
