#include "kostka/errors.hpp"
#include "kostka/fusion.hpp"
#include "kostka/gp_ring.hpp"
#include "kostka/kostka.hpp"

#include <doctest.h>

#include <functional>

using namespace kostka;

namespace {

QPoly poly(std::initializer_list<long> c) { return QPoly::from_coeffs(c); }

// Dimension of the span of every word in the operators f (x) t^k (sl_2 only)
// with total t-degree <= d, applied to the cyclic vector.  No pruning.
int brute_filtration_dim(const Composition& mu, const std::vector<mpq_class>& pts, int d)
{
    const FusionSpace space(mu, 2, pts);
    int size = 0;
    for (int m : mu)
        size += m;
    std::vector<SparseMatrix> f;
    for (int k = 0; k <= d; ++k)
        f.push_back(space.fusion_operator(1, 0, k));
    EchelonBasis span;
    std::function<void(const SparseVec&, int, int)> rec = [&](const SparseVec& v, int budget, int depth) {
        span.insert(v);
        if (depth == size)
            return;  // f^size+1 kills every vector
        for (int k = 0; k <= budget; ++k) {
            const SparseVec w = f[k].apply(v);
            if (!w.is_zero())
                rec(w, budget - k, depth + 1);
        }
    };
    rec(space.cyclic_vector(), d, 0);
    return span.rank();
}

}  // namespace

TEST_CASE("symmetric power modules")
{
    CHECK(build_sym_module(2, 1).dim() == 2);
    CHECK(build_sym_module(2, 2).dim() == 3);
    CHECK(build_sym_module(3, 2).dim() == 6);
    CHECK(build_sym_module(3, 0).dim() == 1);
    CHECK_THROWS_AS(build_sym_module(1, 2), std::invalid_argument);
    for (int n = 2; n <= 4; ++n)
        for (int m = 0; m <= 3; ++m) {
            const SymPowerModule mod = build_sym_module(n, m);
            CHECK(mod.dim() == sln_irrep_dim(Partition::row(m), n));
            CHECK(mod.basis[0][0] == m);
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b) {
                    // raising operators kill the highest weight vector
                    CHECK(mod.e[a][b].column(0).is_zero());
                    // [E_ab, E_ba] = E_aa - E_bb, which is diagonal with entries alpha_a - alpha_b
                    const SparseMatrix comm = mod.e[a][b] * mod.e[b][a] - mod.e[b][a] * mod.e[a][b];
                    for (int j = 0; j < mod.dim(); ++j)
                        CHECK(comm.column(j) ==
                              SparseVec::from_entries({{j, mod.basis[j][a] - mod.basis[j][b]}}));
                }
            for (int a = 0; a + 1 < n; ++a) {
                const SparseMatrix comm =
                    mod.e[a][a + 1] * mod.e[a + 1][a] - mod.e[a + 1][a] * mod.e[a][a + 1];
                CHECK(comm == mod.h[a]);
            }
        }
}

TEST_CASE("fusion operators")
{
    const FusionSpace space({1, 1}, 2, {0, 1});
    CHECK(space.dim() == 4);
    // k = 1: 0 * f v0 (x) v0 + 1 * v0 (x) f v0 = v0 (x) v1
    const SparseVec image = space.fusion_operator(1, 0, 1).apply(space.cyclic_vector());
    CHECK(image == SparseVec::unit(space.join({0, 1})));
    // k = 0 is the coproduct
    const SparseVec both = space.fusion_operator(1, 0, 0).apply(space.cyclic_vector());
    CHECK(both == SparseVec::from_entries({{space.join({1, 0}), 1}, {space.join({0, 1}), 1}}));
    // one factor: z^k E_ab is a multiple of E_ab
    const FusionSpace single({2}, 3, {5});
    const SparseMatrix e0 = single.fusion_operator(2, 0, 0);
    const SparseMatrix e3 = single.fusion_operator(2, 0, 3);
    for (int j = 0; j < single.dim(); ++j) {
        SparseVec scaled = e0.column(j);
        scaled.scale(125);
        CHECK(e3.column(j) == scaled);
    }
    CHECK_THROWS_AS(space.fusion_operator(2, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(space.fusion_operator(1, 1, 0), std::invalid_argument);
    CHECK_THROWS_AS(FusionSpace({1, 1}, 2, {3, 3}), std::invalid_argument);
    CHECK(space.weight(space.join({1, 1})) == Composition{0, 2});
}

TEST_CASE("filtration examples")
{
    CHECK(generate_filtration({1, 1}, 2, {0, 1}).cumulative_dims() == std::vector<int>{3, 4});
    CHECK(generate_filtration({2, 1}, 2, {0, 1}).cumulative_dims() == std::vector<int>{4, 6});
    CHECK(generate_filtration({3}, 3, {0}).cumulative_dims() == std::vector<int>{10});
    CHECK_THROWS_AS(generate_filtration({1, 1}, 2, {1}), std::invalid_argument);
    CHECK_THROWS_AS(generate_filtration({1, 1}, 2, {1, 1}), std::invalid_argument);
    // without t there is only the diagonal copy of the top component
    CHECK_THROWS_AS(generate_filtration({1, 1}, 2, {0, 1}, 0), CheckFailure);
}

TEST_CASE("filtration agrees with unpruned operator words")
{
    for (const Composition& mu : {Composition{1, 1}, Composition{2, 1}, Composition{1, 1, 1}, Composition{2, 2},
                                  Composition{1, 2, 1}}) {
        const auto pts = fusion_default_points(static_cast<int>(mu.size()), true);
        const auto dims = generate_filtration(mu, 2, pts).cumulative_dims();
        for (int d = 0; d < static_cast<int>(dims.size()); ++d)
            CHECK(brute_filtration_dim(mu, pts, d) == dims[d]);
    }
}

TEST_CASE("higher t-degrees add nothing")
{
    for (int N = 1; N <= 4; ++N)
        for (const Partition& mu : partitions_of(N))
            for (int n : {2, 3}) {
                const auto pts = fusion_default_points(mu.length());
                const auto base = generate_filtration(mu.parts(), n, pts);
                const auto more = generate_filtration(mu.parts(), n, pts, N);
                CHECK(base.cumulative_dims() == more.cumulative_dims());
            }
}

TEST_CASE("peeling weights")
{
    // sl_2: weights of pi_(2) plus pi_(1,1)
    std::map<Composition, std::int64_t> w{{{2, 0}, 1}, {{1, 1}, 2}, {{0, 2}, 1}};
    const auto m = peel_weights(w, 2);
    CHECK(m.size() == 2);
    CHECK(m.at(Partition{2}) == 1);
    CHECK(m.at(Partition{1, 1}) == 1);
    CHECK_THROWS_AS(peel_weights({{{2, 0}, 1}}, 2), CheckFailure);
    CHECK_THROWS_AS(peel_weights({{{1, 1}, -1}}, 2), CheckFailure);
}

TEST_CASE("graded decomposition examples")
{
    const auto d11 = graded_decompose(generate_filtration({1, 1}, 2, {0, 1}));
    REQUIRE(d11.per_degree.size() == 2);
    CHECK(d11.per_degree[0] == std::map<Partition, std::int64_t>{{Partition{2}, 1}});
    CHECK(d11.per_degree[1] == std::map<Partition, std::int64_t>{{Partition{1, 1}, 1}});
    const auto d21 = graded_decompose(generate_filtration({2, 1}, 2, {0, 1}));
    CHECK(d21.per_degree[0] == std::map<Partition, std::int64_t>{{Partition{3}, 1}});
    CHECK(d21.per_degree[1] == std::map<Partition, std::int64_t>{{Partition{2, 1}, 1}});
    const auto d3 = graded_decompose(generate_filtration({3}, 2, {0}));
    CHECK(d3.per_degree.size() == 1);
}

TEST_CASE("fusion character examples")
{
    const auto c11 = fusion_character({1, 1}, 2);
    CHECK(c11.at(Partition{2}) == QPoly(1));
    CHECK(c11.at(Partition{1, 1}) == poly({0, 1}));
    const auto c21 = fusion_character({2, 1}, 2);
    CHECK(c21.at(Partition{3}) == QPoly(1));
    CHECK(c21.at(Partition{2, 1}) == poly({0, 1}));
    for (int N = 1; N <= 4; ++N)
        CHECK(fusion_character({N}, 3) == std::map<Partition, QPoly>{{Partition{N}, QPoly(1)}});
}

TEST_CASE("fusion character equals ~K for every shape up to N = 4")
{
    for (int N = 1; N <= 4; ++N)
        for (const Partition& mu : partitions_of(N))
            for (int n : {2, 3}) {
                const auto ch = fusion_character(mu.parts(), n);
                const auto ch_alt = fusion_character(mu.parts(), n, fusion_default_points(mu.length(), true));
                CHECK(ch == ch_alt);
                const GradedSNDecomposition ring = rmu_decompose(mu);
                std::int64_t total = 0;
                for (const Partition& lambda : partitions_of(N, n)) {
                    const QPoly got = ch.count(lambda) ? ch.at(lambda) : QPoly{};
                    CHECK(got == tilde_transform(charge_kostka(lambda, mu), mu));
                    CHECK(got == ring.component(lambda));
                    CHECK(got.at_one() == ssyt_count(lambda, mu.parts()));
                    total += sln_irrep_dim(lambda, n) * got.at_one().get_si();
                }
                std::int64_t expected = 1;
                for (int m : mu.parts())
                    expected *= sln_irrep_dim(Partition::row(m), n);
                CHECK(total == expected);
            }
}

TEST_CASE("unordered factors give the character of the sorted shape")
{
    const auto a = fusion_character({1, 2}, 2);
    const auto b = fusion_character({2, 1}, 2);
    CHECK(a == b);
    const auto c = fusion_character({1, 2, 1}, 3);
    CHECK(c == fusion_character({2, 1, 1}, 3));
}

TEST_CASE("Schur-Weyl comparison")
{
    const auto r22 = schur_weyl_check(2, 2);
    CHECK(r22.fusion_dims == std::vector<int>{3, 1});
    CHECK(r22.expected_dims == std::vector<int>{3, 1});
    const auto r32 = schur_weyl_check(3, 2);
    int total = 0;
    for (int d : r32.fusion_dims)
        total += d;
    CHECK(total == 8);
    const auto r33 = schur_weyl_check(3, 3);
    CHECK(r33.fusion_dims.size() == 4);
    CHECK(r33.fusion_dims.back() == 1);  // the determinant, at degree 3
    CHECK(schur_weyl_check(4, 3).character_match);
    CHECK(schur_weyl_check(5, 2).character_match);
}
