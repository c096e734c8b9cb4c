#include "tfam/suites.hpp"

#include <cstdio>

// Runs the end-to-end acceptance gate and prints one verdict line per
// criterion. Exit code 0 when every criterion passes, 2 otherwise.
int main() {
    int failed = 0;
    for (const tfam::CheckResult& r : tfam::run_acceptance()) {
        std::printf("%-26s %s  %s (%.2fs)\n", r.name.c_str(), r.passed ? "PASS" : "FAIL",
                    r.detail.c_str(), r.seconds);
        std::fflush(stdout);
        if (!r.passed) ++failed;
    }
    if (failed) std::printf("%d criterion(s) failed\n", failed);
    return failed ? 2 : 0;
}
