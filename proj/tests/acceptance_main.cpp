// Standalone acceptance gate: runs the end-to-end criteria and prints one
// pass/fail line per criterion.  Exit code 0 when everything passed.

#include <CLI11.hpp>

#include <iostream>
#include <vector>

#include "schenker/verify.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Acceptance criteria for the Schenker sum toolkit"};
    int criterion = 0;
    schenker::verify::Options options;
    app.add_option("--criterion", criterion, "run a single criterion (1-9)")
        ->check(CLI::Range(1, schenker::verify::criterion_count));
    app.add_option("--workers", options.workers, "worker threads for the surveys")
        ->capture_default_str();
    app.add_flag("--long", options.long_run, "extend the anomaly sweep to 30000");
    CLI11_PARSE(app, argc, argv);

    std::vector<schenker::verify::CriterionResult> results;
    if (criterion != 0)
        results.push_back(schenker::verify::run_criterion(criterion, options));
    else
        results = schenker::verify::run_all(options);
    return schenker::verify::print_report(results, std::cout) ? 0 : 1;
}
