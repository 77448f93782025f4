#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sector_radius::acceptance {

struct CriterionResult {
    int id;
    std::string name;
    bool passed;
    std::string detail;  // measured quantities, no timings
};

/// Runs the twelve acceptance checks with randomness drawn from `seed`.
/// Check 12 reruns checks 1-11 and compares the rendered reports.
std::vector<CriterionResult> run_all(std::uint64_t seed);

/// One line per criterion: "[PASS] 3 random-sector-bound: ...".
std::string render(const std::vector<CriterionResult>& results);

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace sector_radius::acceptance
