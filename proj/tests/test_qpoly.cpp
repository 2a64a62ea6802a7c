#include "kostka/errors.hpp"
#include "kostka/qpoly.hpp"

#include <doctest.h>

using namespace kostka;

TEST_CASE("QPoly arithmetic")
{
    const QPoly a = QPoly::from_coeffs({1, 1});   // 1 + q
    const QPoly b = QPoly::from_coeffs({1, -1});  // 1 - q
    CHECK(a * b == QPoly::from_coeffs({1, 0, -1}));
    CHECK(a - a == QPoly{});
    CHECK((a + b).coeff(0) == 2);
    CHECK(a.shifted(-2).min_degree() == -2);
    CHECK(a.invert_variable() == QPoly::from_coeffs({1, 1}, -1));
    CHECK(QPoly::from_coeffs({0, 0, 3}).max_degree() == 2);
    CHECK(QPoly::from_coeffs({0, 0, 3}).min_degree() == 2);
    CHECK_THROWS(QPoly{}.min_degree());
}

TEST_CASE("QPoly printing")
{
    CHECK(QPoly::from_coeffs({0, 1, 1}).to_string() == "q + q^2");
    CHECK(QPoly::monomial(-1, 2).to_string() == "2*q^-1");
    CHECK(QPoly{}.to_string() == "0");
    CHECK(QPoly::from_coeffs({1, -1}).to_string() == "1 - q");
}

TEST_CASE("division")
{
    const QPoly num = q_pochhammer(3);
    const auto d = divide(num, one_minus_q_power(2));
    CHECK(d.remainder.is_zero());
    CHECK(d.quotient == one_minus_q_power(1) * one_minus_q_power(3));
    CHECK_FALSE(divide(QPoly::from_coeffs({1, 0, 1}), one_minus_q_power(1)).remainder.is_zero());
    CHECK_THROWS_AS(divide_exact(QPoly::from_coeffs({1, 0, 1}), one_minus_q_power(1), "test"), CheckFailure);
    CHECK_THROWS(divide(QPoly(1), QPoly::from_coeffs({1, 2})));
}

TEST_CASE("Pochhammer symbols")
{
    CHECK(q_pochhammer(0) == QPoly(1));
    CHECK(q_pochhammer(2) == QPoly::from_coeffs({1, -1, -1, 1}));
}

TEST_CASE("series: inverse Euler product counts partitions")
{
    const QSeries p = QSeries::inverse_euler(1, 10);
    const std::vector<long> parts{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    for (int e = 0; e <= 10; ++e)
        CHECK(p.coeff(e) == parts[e]);
    // 1/(q)^2: coefficients of pairs of partitions
    const QSeries p2 = QSeries::inverse_euler(2, 5);
    const std::vector<long> pairs{1, 2, 5, 10, 20, 36};
    for (int e = 0; e <= 5; ++e)
        CHECK(p2.coeff(e) == pairs[e]);
    // (q)_oo truncated times its inverse is 1 through the order
    const QSeries prod = QSeries::from_poly(q_pochhammer(12), 10) * p;
    CHECK(prod.poly() == QPoly(1));
    CHECK(prod.order() == 10);
}
