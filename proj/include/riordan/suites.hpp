#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace riordan {

struct CaseFailure {
    std::uint64_t seed;
    std::string message;
};

struct SuiteReport {
    std::string suite;
    int order;
    int cases_run;
    std::vector<CaseFailure> failures;  // reproducing seed plus reason
    std::vector<std::string> notes;     // informational output, index order
    double wall_seconds;
    bool ok() const { return failures.empty(); }
};

std::vector<std::string> suite_names();

// Runs `seeds` independent cases of the named property suite at the given
// truncation order (cases use seeds 1..seeds). Cases run in parallel when
// OpenMP is available; results and notes are aggregated by case index, so
// reports are deterministic. Unknown names throw std::invalid_argument.
SuiteReport run_suite(const std::string& name, int seeds, int order);

}  // namespace riordan
