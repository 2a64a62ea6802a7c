#include "kostka/cli/commands.hpp"
#include "kostka/cli/verify.hpp"
#include "kostka/errors.hpp"

#include <doctest.h>

using namespace kostka;
using namespace kostka::cli;

namespace {

void round_trips(const Report& r)
{
    const std::string once = canonical_dump(r.to_json());
    CHECK(canonical_dump(Json::parse(once)) == once);
}

}  // namespace

TEST_CASE("kostka command")
{
    const Report a = cmd_kostka({Partition{2, 1}, Partition{1, 1, 1}, std::nullopt, "charge"});
    CHECK(qpoly_from_json(a.results["K"]) == QPoly::from_coeffs({0, 1, 1}));
    CHECK(qpoly_from_json(a.results["K_tilde"]) == QPoly::from_coeffs({0, 1, 1}));
    CHECK(a.ok());
    CHECK(a.checks.at("methods_agree"));
    round_trips(a);

    const Report hook = cmd_kostka({std::nullopt, std::nullopt, Partition{3}, "hook"});
    CHECK(qpoly_from_json(hook.results["K"]) == QPoly::monomial(3));

    const Report diag = cmd_kostka({Partition{2, 1}, Partition{2, 1}, std::nullopt, "charge"});
    CHECK(qpoly_from_json(diag.results["K"]) == QPoly(1));

    const Report ring = cmd_kostka({Partition{2, 2}, Partition{2, 1, 1}, std::nullopt, "ring"});
    CHECK(ring.ok());

    CHECK_THROWS_AS(cmd_kostka({Partition{2, 1}, Partition{2}, std::nullopt, "charge"}), std::invalid_argument);
    CHECK_THROWS_AS(cmd_kostka({Partition{2, 1}, Partition{2, 1}, std::nullopt, "hook"}), std::invalid_argument);
    CHECK_THROWS_AS(cmd_kostka({Partition{2, 1}, Partition{2, 1}, std::nullopt, "magic"}), std::invalid_argument);
    CHECK_THROWS_AS(cmd_kostka({std::nullopt, Partition{2, 1}, std::nullopt, "charge"}), std::invalid_argument);
}

TEST_CASE("ring command")
{
    const Report r = cmd_ring({Partition{2, 1}, std::nullopt});
    CHECK(qpoly_from_json(r.results["hilbert"]) == QPoly::from_coeffs({1, 2}));
    CHECK(r.results["amu_dims"] == Json({1, 2}));
    CHECK(qpoly_from_json(r.results["decomposition"]["2,1"]) == QPoly::monomial(1));
    CHECK(r.checks.at("kostka_match"));
    CHECK(r.checks.at("fstar_match"));
    round_trips(r);
    CHECK_THROWS_AS(cmd_ring({Partition{2, 1}, std::vector<mpq_class>{1}}), std::invalid_argument);
    CHECK_THROWS_AS(cmd_ring({Partition{2, 1}, std::vector<mpq_class>{1, 1}}), std::invalid_argument);
}

TEST_CASE("fusion command")
{
    const Report r = cmd_fusion({{1, 1}, 2, std::nullopt});
    CHECK(r.results["dims_per_degree"] == Json({3, 1}));
    CHECK(qpoly_from_json(r.results["decomposition"]["2"]) == QPoly(1));
    CHECK(qpoly_from_json(r.results["decomposition"]["1,1"]) == QPoly::monomial(1));
    CHECK(r.ok());
    round_trips(r);
    const Report custom = cmd_fusion({{2, 1}, 3, parse_points("1/2,-3")});
    CHECK(custom.ok());
}

TEST_CASE("wedge and winf commands")
{
    const Report w = cmd_wedge({3, 2});
    CHECK(w.ok());
    CHECK(qpoly_from_json(w.results["decomposition"]["2,1"]) == QPoly::from_coeffs({1, 1}, -2));
    round_trips(w);

    const Report v = cmd_winf({Partition{}, 2, std::nullopt, 5, 8});
    CHECK(v.ok());
    CHECK(v.results["winf"]["coefficients"] == Json({"1", "0", "1", "1", "2", "2"}));
    round_trips(v);
}

TEST_CASE("parsing helpers")
{
    CHECK(parse_points("1, 2/4,-3") == std::vector<mpq_class>{1, mpq_class(1, 2), -3});
    CHECK_THROWS_AS(parse_points("1,,2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_points("x"), std::invalid_argument);
    CHECK(parse_composition("2,0,1") == Composition{2, 0, 1});
    CHECK_THROWS_AS(parse_composition("2,-1"), std::invalid_argument);
}

TEST_CASE("verify and its negative control")
{
    const Report ok = cmd_verify({Level::quick, false});
    CHECK(ok.ok());
    CHECK(ok.checks.at("negative_control_rejected"));
    const Report bad = cmd_verify({Level::quick, true});
    CHECK_FALSE(bad.ok());
    REQUIRE_FALSE(bad.messages.empty());
    CHECK(bad.messages.back().find("degree 1") != std::string::npos);
}
