#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace newtonforge {

/// Outcome of one end-to-end verification criterion: a verdict, the wall time
/// it took, and the per-case measurements that justify the verdict.
struct CriterionResult {
    int number = 0;
    std::string title;
    bool passed = false;
    double seconds = 0.0;
    std::vector<std::string> details;
};

/// Runs a single criterion by number (1..10).
/// Throws ArgumentError for any other number.
CriterionResult run_criterion(int number);

/// Runs all ten criteria in order. Never throws for internal failures; a
/// criterion that cannot complete is reported as failed with the reason in
/// its details.
std::vector<CriterionResult> run_acceptance();

/// Writes "CRITERION <n> <PASS|FAIL> (<t>s): <title>" followed by one
/// indented line per detail entry.
void print_criterion(const CriterionResult& result, std::ostream& out);

/// True when every result passed.
bool all_passed(const std::vector<CriterionResult>& results);

} // namespace newtonforge
