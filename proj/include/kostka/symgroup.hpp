#pragma once

#include "kostka/partition.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <vector>

namespace kostka {

/* A permutation of {0..N-1} in one-line notation: i -> image[i]. */
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> image);
    static Permutation identity(int n);
    /* Product of disjoint cycles on consecutive blocks: (0 1 .. r1-1)(r1 ..) */
    static Permutation of_cycle_type(const Partition& rho);
    /* Build from 0-based cycles, e.g. {{0,1,2}} for (1 2 3). */
    static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);

    int size() const { return static_cast<int>(image_.size()); }
    int operator()(int i) const { return image_[i]; }
    const std::vector<int>& image() const { return image_; }

    Partition cycle_type() const;
    int sign() const;
    Permutation inverse() const;
    /* (a * b)(i) = a(b(i)). */
    friend Permutation operator*(const Permutation& a, const Permutation& b);
    bool operator==(const Permutation& o) const { return image_ == o.image_; }

private:
    std::vector<int> image_;
};

/*
 * A class function on S_N: one exact rational value per cycle type.
 */
class ClassFunction {
public:
    explicit ClassFunction(int n);
    int degree() const { return n_; }
    const std::map<Partition, mpq_class>& values() const { return values_; }
    const mpq_class& at(const Partition& rho) const;
    void set(const Partition& rho, mpq_class v);

    /* <f, g> = (1/N!) sum_rho |C_rho| f(rho) g(rho) (characters are real). */
    mpq_class inner(const ClassFunction& other) const;

    ClassFunction& operator+=(const ClassFunction& o);
    friend ClassFunction operator*(const ClassFunction& a, const ClassFunction& b);
    ClassFunction scaled(const mpq_class& c) const;
    bool operator==(const ClassFunction& o) const { return n_ == o.n_ && values_ == o.values_; }

private:
    int n_;
    std::map<Partition, mpq_class> values_;
};

/* N! / z_rho. */
std::int64_t class_size(const Partition& rho);

/* chi^lambda(rho) by the Murnaghan-Nakayama rule, memoized per N. */
std::int64_t irr_char(const Partition& lambda, const Partition& rho);

ClassFunction irreducible_character(const Partition& lambda);
ClassFunction sign_character(int n);

/* m_lambda = <f, chi^lambda> for every lambda |- N (zero entries omitted). */
std::map<Partition, mpq_class> decompose_class_function(const ClassFunction& f);

/* Same, but requires f to be a genuine character: every multiplicity must be
 * a nonnegative integer, otherwise CheckFailure names the offender. */
std::map<Partition, std::int64_t> decompose_character(const ClassFunction& f);

}  // namespace kostka
