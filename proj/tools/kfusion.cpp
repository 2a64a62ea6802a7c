#include "kostka/cli/commands.hpp"
#include "kostka/cli/verify.hpp"
#include "kostka/errors.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

using namespace kostka;
using namespace kostka::cli;

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

std::optional<Partition> opt_partition(const std::optional<std::string>& s)
{
    if (!s)
        return std::nullopt;
    return Partition::parse(*s);
}

std::optional<std::vector<mpq_class>> opt_points(const std::optional<std::string>& s)
{
    if (!s)
        return std::nullopt;
    return parse_points(*s);
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Kostka polynomials, Garsia-Procesi rings, fusion products and W-limit characters"};
    app.require_subcommand(1);

    std::string format = "text";
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    };

    std::optional<std::string> lambda, mu, mu_row, points;
    std::string method = "charge";
    int n = 2, big_n = 0, depth = 5, m_max = 8;
    std::optional<int> i_index;
    std::string level = "quick";
    bool corrupt = false;

    auto* kostka_cmd = app.add_subcommand("kostka", "K_{lambda,mu}(q) and ~K_{lambda,mu}(q)");
    kostka_cmd->add_option("--lambda", lambda, "Shape, e.g. 2,1");
    kostka_cmd->add_option("--mu", mu, "Content, e.g. 1,1,1");
    kostka_cmd->add_option("--mu-row", mu_row, "Row label of K_{lambda,(1^N)} for the hook method");
    kostka_cmd->add_option("--method", method, "hook, charge or ring")->check(CLI::IsMember({"hook", "charge", "ring"}));
    add_format(kostka_cmd);

    auto* ring_cmd = app.add_subcommand("ring", "Graded decomposition of R_mu");
    ring_cmd->add_option("--mu", mu, "Partition")->required();
    ring_cmd->add_option("--points", points, "Distinct evaluation points, one per part");
    add_format(ring_cmd);

    auto* fusion_cmd = app.add_subcommand("fusion", "Graded fusion product of symmetric powers");
    fusion_cmd->add_option("--mu", mu, "Symmetric powers, in any order")->required();
    fusion_cmd->add_option("--n", n, "Rank parameter of sl_n");
    fusion_cmd->add_option("--points", points, "Distinct evaluation points, one per factor");
    add_format(fusion_cmd);

    auto* wedge_cmd = app.add_subcommand("wedge", "Reduced wedge product of N copies of C^n");
    wedge_cmd->add_option("--N", big_n, "Number of factors")->required();
    wedge_cmd->add_option("--n", n, "Rank parameter of sl_n");
    add_format(wedge_cmd);

    auto* winf_cmd = app.add_subcommand("winf", "Limit character and its stabilization");
    winf_cmd->add_option("--mu", mu, "Partition mu_bar with at most n rows (\"\" for the vacuum)")->required();
    winf_cmd->add_option("--n", n, "Rank parameter");
    winf_cmd->add_option("--i", i_index, "Residue class of N modulo n");
    winf_cmd->add_option("--depth", depth, "Window depth");
    winf_cmd->add_option("--mmax", m_max, "Largest sequence index");
    add_format(winf_cmd);

    auto* verify_cmd = app.add_subcommand("verify", "Run the bundled acceptance checks");
    verify_cmd->add_option("--level", level, "quick or full")->check(CLI::IsMember({"quick", "full"}));
    verify_cmd->add_flag("--corrupt-generators", corrupt, "Negative control: feed a non-stable generator set");
    add_format(verify_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    Report rep;
    try {
        if (*kostka_cmd) {
            rep = cmd_kostka({opt_partition(lambda), opt_partition(mu), opt_partition(mu_row), method});
        } else if (*ring_cmd) {
            rep = cmd_ring({Partition::parse(*mu), opt_points(points)});
        } else if (*fusion_cmd) {
            rep = cmd_fusion({parse_composition(*mu), n, opt_points(points)});
        } else if (*wedge_cmd) {
            rep = cmd_wedge({big_n, n});
        } else if (*winf_cmd) {
            rep = cmd_winf({Partition::parse(*mu), n, i_index, depth, m_max});
        } else if (*verify_cmd) {
            rep = cmd_verify({level == "full" ? Level::full : Level::quick, corrupt});
        }
    } catch (const CheckFailure& e) {
        std::cerr << "check failed: " << e.what() << "\n";
        return kCheckFailed;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    }

    if (format == "json")
        std::cout << canonical_dump(rep.to_json()) << "\n";
    else
        std::cout << rep.to_text();
    return rep.ok() ? kOk : kCheckFailed;
}
