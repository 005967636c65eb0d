#pragma once

#include <string>
#include <vector>

namespace padictk {

// one acceptance criterion outcome; tolerances and thresholds are pinned in
// the implementations, not configurable
struct CriterionResult {
    int id;
    std::string name;
    bool pass;
    std::string detail;
    double seconds;
};

// run one criterion (1..10)
CriterionResult run_criterion(int id);

// run the full matrix in order
std::vector<CriterionResult> run_acceptance();

// known suite names for the CLI verify driver ("all", "kl-special", ...)
std::vector<std::pair<std::string, int>> acceptance_suites();

}  // namespace padictk
