#pragma once

#include <map>
#include <string>
#include <vector>

#include "qrk/config.hpp"
#include "qrk/report.hpp"
#include "qrk/result.hpp"

namespace qrk {

/// Weighted sum of normalized kernel metrics. Normalizers map each metric to
/// [0, 1]: encode uses 1 - max_deviation (clamped), ca divides the area by
/// the grid maximum n_max * ops(n_max, depth_max), streams divides the score
/// by k_max * n_per_stream * ops(n_per_stream, depth). A weighted kernel
/// without a finite-metric result is a configuration error.
double composite_score(const std::vector<KernelResult>& results,
                       const std::map<std::string, double>& weights,
                       const RunConfig& config);

struct RunOutcome {
    Report report;
    int exit_code = 0; // 0 = all kernels passed, 1 = some verification failed
};

/// Runs the selected kernels against the configured backend and assembles
/// the report. Configuration problems throw ConfigError; failures inside a
/// kernel are recorded in its result row instead of thrown.
RunOutcome run_suite(const RunConfig& config);

/// Command-line entry point. Exit codes: 0 all kernels passed, 1 at least
/// one verification failed (report still produced), 2 usage or
/// configuration error (no report).
int run_cli(int argc, const char* const* argv);

} // namespace qrk
