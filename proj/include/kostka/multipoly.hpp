#pragma once

#include "kostka/symgroup.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace kostka {

inline constexpr int kMaxVariables = 8;

/*
 * Monomial z_1^e_1 ... z_N^e_N, N <= 8, packed one byte per exponent with
 * z_1 in the most significant byte.  Comparing the packed words therefore
 * compares exponent vectors lexicographically; among monomials of one
 * degree that is the fixed tie-breaking order used everywhere.
 */
class Monomial {
public:
    constexpr Monomial() = default;
    explicit Monomial(const std::vector<int>& exponents);
    static Monomial variable(int i);

    int exponent(int i) const { return static_cast<int>((bits_ >> shift(i)) & 0xff); }
    int degree() const;
    std::vector<int> exponents(int nvars) const;
    std::uint64_t bits() const { return bits_; }

    /* z_i * this. */
    Monomial times_variable(int i) const;
    /* this / z_i; requires exponent(i) > 0. */
    Monomial divided_by_variable(int i) const;
    Monomial operator*(const Monomial& o) const;
    bool divisible_by_variable(int i) const { return exponent(i) > 0; }
    /* Index of the first variable with positive exponent, or -1 for 1. */
    int first_variable() const;

    /* Relabel z_i -> z_{sigma(i)}. */
    Monomial permuted(const Permutation& sigma) const;

    std::string to_string(int nvars) const;

    /* Graded, then lexicographic. */
    friend bool operator<(const Monomial& a, const Monomial& b)
    {
        const int da = a.degree(), db = b.degree();
        return da != db ? da < db : a.bits_ < b.bits_;
    }
    friend bool operator==(const Monomial& a, const Monomial& b) { return a.bits_ == b.bits_; }

private:
    static constexpr int shift(int i) { return 8 * (kMaxVariables - 1 - i); }
    std::uint64_t bits_ = 0;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept { return std::hash<std::uint64_t>{}(m.bits()); }
};

/* All monomials of total degree d in n variables, lexicographically
 * decreasing (z_1^d first). */
std::vector<Monomial> monomials_of_degree(int nvars, int d);

/* C(d+n-1, n-1). */
std::int64_t monomial_count(int nvars, int d);

/*
 * Polynomial in z_1..z_N over the rationals.  Zero coefficients are never
 * stored.
 */
class MultiPoly {
public:
    using Terms = std::map<Monomial, mpq_class>;

    explicit MultiPoly(int nvars);
    static MultiPoly constant(int nvars, const mpq_class& c);
    static MultiPoly variable(int nvars, int i);
    static MultiPoly term(int nvars, const Monomial& m, const mpq_class& c = 1);

    int nvars() const { return nvars_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add_term(const Monomial& m, const mpq_class& c);
    mpq_class coeff(const Monomial& m) const;

    /* Degree if every term has the same degree, -1 otherwise (or for 0). */
    int homogeneous_degree() const;
    bool is_homogeneous() const { return is_zero() || homogeneous_degree() >= 0; }

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly scaled(const mpq_class& c) const;
    MultiPoly times_monomial(const Monomial& m) const;

    /* Rescaled so the lex-largest coefficient is 1; used to deduplicate
     * generator sets up to scalars. */
    MultiPoly normalized() const;

    mpq_class evaluate(const std::vector<mpq_class>& point) const;

    bool operator==(const MultiPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
    bool operator<(const MultiPoly& o) const;

    std::string to_string() const;

private:
    int nvars_;
    Terms terms_;
};

/* E_m over the variables in `vars` (0-based indices); E_0 = 1.
 * Throws std::invalid_argument when m > |vars|. */
MultiPoly elementary_symmetric(int nvars, int m, const std::vector<int>& vars);

/* z_1^a + ... + z_N^a, a >= 1. */
MultiPoly power_sum(int a, int nvars);

/* (sigma p)(z) = p with z_i replaced by z_{sigma(i)}. */
MultiPoly permute_poly(const Permutation& sigma, const MultiPoly& p);

}  // namespace kostka
