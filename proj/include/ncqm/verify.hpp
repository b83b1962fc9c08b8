#pragma once

#include <string>
#include <vector>

namespace ncqm {

/// Outcome of one end-to-end check. assertions counts every individual
/// comparison made; max_error is the largest float deviation observed (exact
/// comparisons contribute zero); detail names the first violated invariant.
struct CheckResult {
    bool ok = true;
    long assertions = 0;
    double max_error = 0.0;
    std::string detail;
};

/// An end-to-end check: a stable name, the suite it reports under, and a
/// seeded runner. All tolerances live inside the runner bodies.
struct AcceptanceCheck {
    const char* name;
    const char* suite;
    CheckResult (*run)(unsigned long seed);
};

/// The twelve checks in fixed report order.
const std::vector<AcceptanceCheck>& acceptance_checks();

/// Suite names in fixed report order: group, orbits, gauges, uir, hermite.
const std::vector<std::string>& suite_names();

/// True if name is "all" or one of suite_names().
bool is_valid_suite(const std::string& name);

/// Runs every check whose suite matches (or all of them for "all") and
/// returns results in registry order. Independent checks may run on separate
/// threads, capped by the NCQM_THREADS environment variable; results do not
/// depend on the schedule.
std::vector<CheckResult> run_suite(const std::string& suite, unsigned long seed);

/// The checks selected by run_suite, in the same order as its results.
std::vector<const AcceptanceCheck*> suite_checks(const std::string& suite);

}  // namespace ncqm
