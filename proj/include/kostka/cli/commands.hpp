#pragma once

#include "kostka/cli/report.hpp"
#include "kostka/partition.hpp"

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace kostka::cli {

/* Usage errors (bad shapes, unknown methods) throw std::invalid_argument;
 * failed certificates either throw CheckFailure or come back as false
 * checks in the report. */

struct KostkaArgs {
    std::optional<Partition> lambda;
    std::optional<Partition> mu;
    std::optional<Partition> mu_row;  // hook method: row label of K_{lambda,(1^N)}
    std::string method = "charge";    // hook | charge | ring
};
Report cmd_kostka(const KostkaArgs& args);

struct RingArgs {
    Partition mu;
    std::optional<std::vector<mpq_class>> points;
};
Report cmd_ring(const RingArgs& args);

struct FusionArgs {
    Composition mu;
    int n = 2;
    std::optional<std::vector<mpq_class>> points;
};
Report cmd_fusion(const FusionArgs& args);

struct WedgeArgs {
    int N = 0;
    int n = 2;
};
Report cmd_wedge(const WedgeArgs& args);

struct WinfArgs {
    Partition mu_bar;
    int n = 2;
    std::optional<int> i;  // default |mu_bar| mod n
    int depth = 5;
    int m_max = 8;
};
Report cmd_winf(const WinfArgs& args);

/* Parses "1,2,3" or "1/2,3" into exact rationals. */
std::vector<mpq_class> parse_points(const std::string& text);
/* Parses "2,0,1" keeping order and zeros. */
Composition parse_composition(const std::string& text);

}  // namespace kostka::cli
