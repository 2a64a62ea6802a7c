#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <vector>

namespace kostka {

/*
 * Laurent polynomial in q with arbitrary-precision integer coefficients.
 * Zero coefficients are never stored, so equality is coefficientwise map
 * equality.
 */
class QPoly {
public:
    using Exponent = std::int64_t;
    using Terms = std::map<Exponent, mpz_class>;

    QPoly() = default;
    QPoly(long constant);  // NOLINT: implicit lift of integers is intended
    static QPoly monomial(Exponent e, const mpz_class& c = 1);
    /* Dense coefficient list c[0] + c[1] q + ... */
    static QPoly from_coeffs(const std::vector<long>& coeffs, Exponent shift = 0);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    mpz_class coeff(Exponent e) const;
    void add_term(Exponent e, const mpz_class& c);

    /* Lowest / highest exponent present; throws on the zero polynomial. */
    Exponent min_degree() const;
    Exponent max_degree() const;

    /* Coefficients from exponent lo to hi inclusive (zero-filled). */
    std::vector<mpz_class> coeff_list(Exponent lo, Exponent hi) const;
    /* Coefficients of q^0..q^max_degree; requires no negative exponents. */
    std::vector<mpz_class> coeff_list() const;

    mpz_class at_one() const;
    bool has_negative_exponents() const { return !is_zero() && min_degree() < 0; }
    bool nonnegative_coefficients() const;

    /* f(q) -> f(1/q). */
    QPoly invert_variable() const;
    /* f(q) -> q^k f(q). */
    QPoly shifted(Exponent k) const;

    QPoly& operator+=(const QPoly& o);
    QPoly& operator-=(const QPoly& o);
    QPoly& operator*=(const QPoly& o);
    friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
    friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
    friend QPoly operator*(const QPoly& a, const QPoly& b);
    QPoly operator-() const;

    bool operator==(const QPoly& o) const { return terms_ == o.terms_; }

    /* Human-readable form, e.g. "q + q^2" or "1 - q^-1". */
    std::string to_string() const;

private:
    Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const QPoly& p);

struct QDivision {
    QPoly quotient;
    QPoly remainder;
};

/* Long division of ordinary polynomials (no negative exponents).  The
 * divisor's leading coefficient must be +-1 so that the quotient stays
 * integral.
 */
QDivision divide(const QPoly& numerator, const QPoly& divisor);

/* Exact division; throws CheckFailure when the remainder is nonzero. */
QPoly divide_exact(const QPoly& numerator, const QPoly& divisor, const std::string& context);

/* (q)_m = prod_{i=1}^m (1 - q^i); (q)_0 = 1. */
QPoly q_pochhammer(int m);

/* 1 - q^k. */
QPoly one_minus_q_power(int k);

/*
 * Power series in q truncated at order D: coefficients of q^e are exact for
 * all e <= D and unknown above.  Exponents may start below zero.  Binary
 * operations truncate to the smaller order.
 */
class QSeries {
public:
    QSeries(int order, QPoly known);

    static QSeries from_poly(const QPoly& p, int order);
    /* 1 / (q)_oo^k truncated at order D. */
    static QSeries inverse_euler(int k, int order);

    int order() const { return order_; }
    const QPoly& poly() const { return poly_; }
    mpz_class coeff(QPoly::Exponent e) const;
    std::vector<mpz_class> coeff_list(QPoly::Exponent lo) const;

    friend QSeries operator*(const QSeries& a, const QSeries& b);
    bool operator==(const QSeries& o) const { return order_ == o.order_ && poly_ == o.poly_; }

    std::string to_string() const;

private:
    int order_;
    QPoly poly_;
};

}  // namespace kostka
