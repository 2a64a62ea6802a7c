#pragma once

#include "kostka/cli/report.hpp"

#include <functional>
#include <string>
#include <vector>

namespace kostka::cli {

enum class Level { quick, full };

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0;
};

/* Runs the acceptance criteria at the given level.  All comparisons are
 * exact.  `on_result` is called as each criterion finishes. */
std::vector<CriterionResult> run_criteria(Level level,
                                          const std::function<void(const CriterionResult&)>& on_result = {});

struct VerifyArgs {
    Level level = Level::quick;
    /* Negative control: decompose the coinvariant ring of S_3 with an extra
     * generator z_1, which is not S_3-stable.  Must fail. */
    bool corrupt_generators = false;
};
Report cmd_verify(const VerifyArgs& args);

}  // namespace kostka::cli
