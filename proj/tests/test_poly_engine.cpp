#include "kostka/errors.hpp"
#include "kostka/gp_ring.hpp"
#include "kostka/poly_engine.hpp"

#include <doctest.h>

#include <chrono>

using namespace kostka;

namespace {

MultiPoly mono(int nvars, std::vector<int> e, long c = 1)
{
    e.resize(nvars, 0);
    return MultiPoly::term(nvars, Monomial(e), c);
}

// Trace on the degree-d quotient straight from the dense slice: act on each
// complement monomial, reduce, read off the diagonal.
mpq_class dense_trace(int nvars, const std::vector<MultiPoly>& gens, const Permutation& sigma, int d)
{
    const GradedSliceBasis s = ideal_slice(nvars, gens, d);
    mpq_class tr = 0;
    for (const Monomial& c : s.complement)
        tr += s.reduce(MultiPoly::term(nvars, c.permuted(sigma))).coeff(c);
    return tr;
}

std::vector<std::vector<MultiPoly>> sample_ideals()
{
    std::vector<std::vector<MultiPoly>> out;
    for (int n = 1; n <= 4; ++n)
        for (const Partition& mu : partitions_of(n))
            out.push_back(cmu_generators(mu).generators);
    // power sums p_1, p_2, p_3 in three variables: the coinvariant ideal again
    out.push_back({power_sum(1, 3), power_sum(2, 3), power_sum(3, 3)});
    // a non-symmetric ideal with a nontrivial Hilbert function
    out.push_back({mono(3, {2}), mono(3, {1, 1}) - mono(3, {0, 0, 2}), mono(3, {0, 3})});
    // mixed degrees, one redundant generator
    out.push_back({mono(2, {1, 1}), mono(2, {3}) + mono(2, {0, 3}), mono(2, {2, 1})});
    return out;
}

}  // namespace

TEST_CASE("monomials")
{
    const Monomial m({2, 0, 1});
    CHECK(m.degree() == 3);
    CHECK(m.to_string(3) == "z1^2*z3");
    CHECK(m.divided_by_variable(0).times_variable(0) == m);
    CHECK(m.permuted(Permutation::from_cycles(3, {{0, 2}})) == Monomial({1, 0, 2}));
    CHECK(Monomial({0, 3}) < Monomial({1, 2}));  // lex within a degree
    CHECK(Monomial({3}) < Monomial({0, 2, 2}));        // degree first
    const auto mons = monomials_of_degree(3, 2);
    CHECK(mons.size() == 6);
    CHECK(std::is_sorted(mons.rbegin(), mons.rend()));
    CHECK(monomial_count(6, 15) == 15504);
}

TEST_CASE("polynomial arithmetic")
{
    const MultiPoly x = MultiPoly::variable(2, 0), y = MultiPoly::variable(2, 1);
    const MultiPoly p = (x + y) * (x - y);
    CHECK(p == mono(2, {2}) - mono(2, {0, 2}));
    CHECK(p.homogeneous_degree() == 2);
    CHECK((p + MultiPoly::constant(2, 1)).homogeneous_degree() == -1);
    CHECK(p.evaluate({3, 1}) == 8);
    CHECK(elementary_symmetric(3, 2, {0, 1, 2}).terms().size() == 3);
    CHECK(elementary_symmetric(3, 0, {0, 1}) == MultiPoly::constant(3, 1));
    CHECK_THROWS_AS(elementary_symmetric(3, 3, {0, 1}), std::invalid_argument);
    CHECK(permute_poly(Permutation::from_cycles(2, {{0, 1}}), x) == y);
}

TEST_CASE("ideal slices")
{
    // coinvariants of S_3: dims 1,2,2,1
    const auto gens = cmu_generators(Partition::column(3)).generators;
    const std::vector<int> dims{1, 2, 2, 1, 0};
    for (int d = 0; d < 5; ++d)
        CHECK(static_cast<int>(ideal_slice(3, gens, d).complement.size()) == dims[d]);
    CHECK_THROWS_AS(ideal_slice(2, {mono(2, {1}) + MultiPoly::constant(2, 1)}, 1), std::invalid_argument);
}

TEST_CASE("incremental quotient agrees with dense slices")
{
    for (const auto& gens : sample_ideals()) {
        const int nvars = gens.front().nvars();
        GradedQuotient q(nvars, gens);
        for (int d = 0; d <= 6; ++d) {
            const GradedSliceBasis s = ideal_slice(nvars, gens, d);
            CHECK(q.dim(d) == static_cast<int>(s.complement.size()));
            // same term order, hence the same standard monomials
            CHECK(q.standard_monomials(d) == s.complement);
            for (const Monomial& m : monomials_of_degree(nvars, d)) {
                const MultiPoly r = s.reduce(MultiPoly::term(nvars, m));
                const SparseVec& nf = q.normal_form(m);
                for (std::size_t k = 0; k < s.complement.size(); ++k)
                    CHECK(nf.at(static_cast<int>(k)) == r.coeff(s.complement[k]));
            }
        }
    }
}

TEST_CASE("membership")
{
    const auto gens = cmu_generators(Partition{2, 1}).generators;
    GradedQuotient q(3, gens);
    CHECK(q.in_ideal(mono(3, {1, 1})));
    CHECK_FALSE(q.in_ideal(mono(3, {1})));
    CHECK(q.in_ideal(mono(3, {2})));  // z1^2 = z1 E1 - z1z2 - z1z3
    CHECK(q.in_ideal(mono(3, {2}) + mono(3, {0, 1, 1})));
    CHECK_FALSE(q.in_ideal(mono(3, {2}) + mono(3, {0, 1})));
}

TEST_CASE("traces agree with the dense computation")
{
    for (const auto& gens : sample_ideals()) {
        const int nvars = gens.front().nvars();
        bool stable = true;
        for (const Partition& rho : partitions_of(nvars))
            for (const MultiPoly& g : gens) {
                GradedQuotient q(nvars, gens);
                stable = stable && q.in_ideal(permute_poly(Permutation::of_cycle_type(rho), g));
            }
        if (!stable)
            continue;
        GradedQuotient q(nvars, gens);
        for (int d = 0; d <= 5; ++d)
            for (const Partition& rho : partitions_of(nvars)) {
                const Permutation sigma = Permutation::of_cycle_type(rho);
                CHECK(q.trace(sigma, d) == dense_trace(nvars, gens, sigma, d));
            }
    }
}

TEST_CASE("trace refuses an ideal that is not stable")
{
    std::vector<MultiPoly> gens = cmu_generators(Partition::column(3)).generators;
    gens.push_back(MultiPoly::variable(3, 0));
    GradedQuotient q(3, gens);
    CHECK(q.trace(Permutation::identity(3), 2) == q.dim(2));
    try {
        q.trace(Permutation::from_cycles(3, {{0, 1}}), 2);
        FAIL("expected CheckFailure");
    } catch (const CheckFailure& e) {
        CHECK(std::string(e.what()).find("degree 1") != std::string::npos);
    }
}

TEST_CASE("quotient_dims stops at the first zero slice")
{
    const auto gens = cmu_generators(Partition{2, 1}).generators;
    const QuotientDims qd = quotient_dims(3, gens, 10);
    CHECK(qd.exhausted);
    CHECK(qd.dims == std::vector<int>{1, 2, 0});
    const QuotientDims partial = quotient_dims(3, cmu_generators(Partition::column(3)).generators, 1);
    CHECK_FALSE(partial.exhausted);
    CHECK(partial.dims == std::vector<int>{1, 2});
}

TEST_CASE("coinvariants of S_6 are fast")
{
    const auto t0 = std::chrono::steady_clock::now();
    const QuotientDims qd = quotient_dims(6, cmu_generators(Partition::column(6)).generators, 16);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    int total = 0;
    for (int d : qd.dims)
        total += d;
    CHECK(total == 720);
    CHECK(qd.exhausted);
    CHECK(qd.dims.size() == 17);  // degrees 0..15 and the zero slice at 16
    CHECK(secs < 20.0);
}

TEST_CASE("orbit evaluation ranks")
{
    CHECK(orbit_evaluation_ranks({2, 1}, {1, 2}) == std::vector<int>{1, 3});
    CHECK(orbit_evaluation_ranks({1, 1}, {0, 1}) == std::vector<int>{1, 2});
    CHECK(orbit_evaluation_ranks({3}, {5}) == std::vector<int>{1});
    CHECK(orbit_points({2, 1}, {1, 2}).size() == 3);
    CHECK_THROWS_AS(orbit_evaluation_ranks({1, 1}, {2, 2}), std::invalid_argument);
    CHECK_THROWS_AS(orbit_evaluation_ranks({1, 1}, {2}), std::invalid_argument);
    CHECK(orbit_evaluation_ranks({1, 1}, {0, 1}, 3) == std::vector<int>{1, 2, 2, 2});
}
