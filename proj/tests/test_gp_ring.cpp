#include "kostka/errors.hpp"
#include "kostka/gp_ring.hpp"
#include "kostka/kostka.hpp"

#include <doctest.h>

#include <set>

using namespace kostka;

namespace {

std::set<std::string> as_strings(const std::vector<MultiPoly>& gens)
{
    std::set<std::string> out;
    for (const MultiPoly& g : gens)
        out.insert(g.to_string());
    return out;
}

}  // namespace

TEST_CASE("defect values")
{
    const Partition ones = Partition::column(3);
    CHECK(dk(ones, 1) == 0);
    CHECK(dk(ones, 2) == 0);
    CHECK(dk(ones, 3) == 3);
    for (int k = 1; k <= 3; ++k)
        CHECK(dk(Partition{3}, k) == k);
    CHECK(dk(Partition{2, 1}, 2) == 1);
    CHECK_THROWS_AS(dk(Partition{2, 1}, 0), std::invalid_argument);
    CHECK_THROWS_AS(dk(Partition{2, 1}, 4), std::invalid_argument);
    for (int n = 1; n <= 6; ++n)
        for (const Partition& mu : partitions_of(n))
            CHECK(dk(mu, n) == n);
}

TEST_CASE("generator sets")
{
    for (int n = 1; n <= 5; ++n) {
        std::set<std::string> want;
        std::vector<int> all(n);
        for (int i = 0; i < n; ++i)
            all[i] = i;
        for (int r = 1; r <= n; ++r)
            want.insert(elementary_symmetric(n, r, all).to_string());
        CHECK(as_strings(cmu_generators(Partition::column(n)).generators) == want);
    }
    const auto g21 = as_strings(cmu_generators(Partition{2, 1}).generators);
    CHECK(g21 == std::set<std::string>{"z1*z2", "z1*z3", "z2*z3", "z1 + z2 + z3", "z1*z2 + z1*z3 + z2*z3",
                                       "z1*z2*z3"});
    // (N): E_r of every nonempty subset S, 1 <= r <= |S|: 3 + 3*2 + 3 polynomials
    CHECK(cmu_generators(Partition{3}).generators.size() == 12);
}

TEST_CASE("Hilbert series examples")
{
    CHECK(rmu_hilbert(Partition::column(3)) == QPoly::from_coeffs({1, 2, 2, 1}));
    CHECK(rmu_hilbert(Partition{3}) == QPoly(1));
    CHECK(rmu_hilbert(Partition{2, 1}) == QPoly::from_coeffs({1, 2}));
}

TEST_CASE("Hilbert series properties")
{
    for (int n = 1; n <= 5; ++n)
        for (const Partition& mu : partitions_of(n)) {
            const QPoly h = rmu_hilbert(mu);
            CHECK(h.at_one() == multinomial(mu));
            CHECK(h.max_degree() == nstat(mu));
        }
}

TEST_CASE("decomposition examples")
{
    const auto d111 = rmu_decompose(Partition::column(3));
    CHECK(d111.component(Partition{2, 1}) == QPoly::from_coeffs({0, 1, 1}));
    CHECK(rmu_decompose(Partition{2, 1}).component(Partition{2, 1}) == QPoly::from_coeffs({0, 1}));
    for (int n = 1; n <= 5; ++n)
        for (const Partition& mu : partitions_of(n))
            CHECK(rmu_decompose(mu).component(Partition::row(n)) == QPoly(1));
}

TEST_CASE("ring route equals the charge route")
{
    for (int n = 1; n <= 5; ++n)
        for (const Partition& mu : partitions_of(n)) {
            const GradedSNDecomposition dec = rmu_decompose(mu);
            QPoly total;
            for (const Partition& lambda : partitions_of(n)) {
                const QPoly comp = dec.component(lambda);
                CHECK(comp == tilde_transform(charge_kostka(lambda, mu), mu));
                CHECK(comp.at_one() == ssyt_count(lambda, mu.parts()));
                if (!dominance_leq(mu, lambda))
                    CHECK(comp.is_zero());
                total += comp * QPoly(static_cast<long>(standard_tableaux_count(lambda)));
            }
            CHECK(total == dec.hilbert);
        }
}

TEST_CASE("ring route equals the hook formula for (1^6)")
{
    const Partition ones = Partition::column(6);
    const GradedSNDecomposition dec = rmu_decompose(ones);
    for (const Partition& lambda : partitions_of(6))
        CHECK(dec.component(lambda) == tilde_transform(kostka_hook(lambda), ones));
}

TEST_CASE("orbit evaluation route")
{
    CHECK(amu_graded_dims(Partition{2, 1}, {1, 2}) == std::vector<int>{1, 2});
    CHECK(amu_graded_dims(Partition{4}, {7}) == std::vector<int>{1});
    CHECK(amu_graded_dims(Partition{1, 1}, {0, 1}) == std::vector<int>{1, 1});
    CHECK_THROWS_AS(amu_graded_dims(Partition{1, 1}, {3, 3}), std::invalid_argument);
    for (int n = 1; n <= 5; ++n)
        for (const Partition& mu : partitions_of(n)) {
            std::vector<int> want;
            for (const auto& c : rmu_hilbert(mu).coeff_list())
                want.push_back(static_cast<int>(c.get_si()));
            CHECK(amu_graded_dims(mu, default_points(mu.length())) == want);
            CHECK(amu_graded_dims(mu, default_points(mu.length(), true)) == want);
        }
}

TEST_CASE("a generator set that is not stable is rejected")
{
    std::vector<MultiPoly> gens = cmu_generators(Partition::column(3)).generators;
    gens.push_back(MultiPoly::variable(3, 0));
    CHECK_THROWS_AS(decompose_quotient(Partition::column(3), gens), CheckFailure);
}

TEST_CASE("default points")
{
    CHECK(default_points(3) == std::vector<mpq_class>{1, 2, 3});
    CHECK(default_points(3, true) == std::vector<mpq_class>{1, 3, 9});
}
