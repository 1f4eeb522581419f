#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace schenker::verify {

// One end-to-end correctness criterion.  Each criterion owns a wall-clock
// budget (seconds); exceeding it counts as a failure.
struct CriterionResult {
    int id = 0;
    std::string title;
    bool passed = false;
    double seconds = 0.0;
    std::vector<std::string> failures; // human-readable, empty when passed
};

struct Options {
    unsigned workers = 4; // thread count for the survey criteria
    bool long_run = false; // extend the anomaly sweep to its full range
};

inline constexpr int criterion_count = 9;

// Runs a single criterion (1-based id) or all of them in order.
CriterionResult run_criterion(int id, const Options& options = {});
std::vector<CriterionResult> run_all(const Options& options = {});

// Prints one line per criterion plus a summary; returns true when every
// criterion passed.
bool print_report(const std::vector<CriterionResult>& results, std::ostream& out);

} // namespace schenker::verify
