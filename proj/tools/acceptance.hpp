#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace equidiv::acceptance {

struct CriterionResult {
    int id = 0;
    bool pass = false;
    std::string detail;
};

/// Runs the listed criteria (1..10, all when empty), printing one
/// "criterion N: PASS|FAIL detail" line per criterion as it finishes.
std::vector<CriterionResult> run(const std::vector<int>& criteria, std::ostream& out);

}  // namespace equidiv::acceptance
