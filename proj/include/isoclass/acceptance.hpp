#pragma once

#include <string>
#include <vector>

namespace isoclass {

/// Outcome of one acceptance criterion. `detail` holds the measured values
/// and the pinned tolerances so a log line is self-contained.
struct AcceptanceResult {
    int number;
    std::string id;
    std::vector<std::string> tags; ///< module names the criterion exercises
    bool pass;
    std::string detail;
    double seconds;
};

struct AcceptanceOptions {
    /// Run only criteria whose id or tag contains this substring; empty = all.
    std::string filter;
    unsigned workers = 1;
    /// Self-test hook: deliberately perturbs one computed class number so the
    /// first criterion must fail; verifies the harness can catch a failure.
    bool inject_failure = false;
};

/// Runs the acceptance criteria in order. Every tolerance is pinned inside
/// the implementation; results report pass/fail plus the measured values.
std::vector<AcceptanceResult> acceptance_suite(const AcceptanceOptions& opts = {});

/// One "[PASS] 03-... detail" line per result.
std::string format_result_line(const AcceptanceResult& r);

} // namespace isoclass
