// End-to-end acceptance gate: runs every registered check with the fixed
// seed and prints one PASS/FAIL line per check. Exit status 0 only when all
// of them hold.
#include <cstdio>

#include "ncqm/verify.hpp"

int main() {
    const auto checks = ncqm::suite_checks("all");
    const auto results = ncqm::run_suite("all", 0);
    std::size_t passed = 0;
    for (std::size_t i = 0; i < checks.size(); ++i) {
        const auto& r = results[i];
        if (r.ok) ++passed;
        std::printf("[%s] %-26s suite=%-8s assertions=%-5ld max_error=%.3g%s%s\n",
                    r.ok ? "PASS" : "FAIL", checks[i]->name, checks[i]->suite, r.assertions,
                    r.max_error, r.detail.empty() ? "" : "  ", r.detail.c_str());
    }
    std::printf("%s: %zu/%zu checks passed\n", passed == checks.size() ? "OK" : "FAILED",
                passed, checks.size());
    return passed == checks.size() ? 0 : 1;
}
