// Acceptance suite: one line per criterion, all comparisons exact.
#include "kostka/cli/verify.hpp"

#include <cstdio>

int main()
{
    using namespace kostka::cli;
    int failed = 0;
    run_criteria(Level::full, [&](const CriterionResult& r) {
        std::printf("[%s] criterion %d: %s (tolerance: exact, %.2fs)%s%s\n", r.passed ? "PASS" : "FAIL", r.id,
                    r.name.c_str(), r.seconds, r.detail.empty() ? "" : " -- ", r.detail.c_str());
        std::fflush(stdout);
        failed += !r.passed;
    });
    std::printf("%d criteria failed\n", failed);
    return failed == 0 ? 0 : 1;
}
