#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace kostka {

/* Content vectors and other unordered integer sequences.  Zero entries are
 * allowed (an SSYT content may skip a letter).
 */
using Composition = std::vector<int>;

/*
 * A partition stored without trailing zeros: parts are positive and weakly
 * decreasing.  The empty partition is the unique partition of 0.
 *
 * Operations that need a fixed number of rows (Weyl dimension, the
 * factorization of hook products) pad explicitly through padded().
 */
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    explicit Partition(std::vector<int> parts);

    /* Sorts a composition into a partition, dropping zeros. */
    static Partition from_composition(const Composition& c);

    /* "3,2,1" -> (3,2,1); "" -> empty partition.  Whitespace is ignored. */
    static Partition parse(std::string_view text);

    static Partition row(int n) { return n == 0 ? Partition{} : Partition{n}; }
    static Partition column(int n) { return Partition(std::vector<int>(n, 1)); }

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    /* 1-based access with zero past the last row. */
    int part(int i) const { return (i >= 1 && i <= length()) ? parts_[i - 1] : 0; }
    int operator[](std::size_t i) const { return parts_[i]; }

    std::vector<int> padded(int n) const;

    std::string to_string() const;

    auto operator<=>(const Partition& other) const { return parts_ <=> other.parts_; }
    bool operator==(const Partition& other) const { return parts_ == other.parts_; }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

/* All partitions of n in lexicographically decreasing order: (n) first,
 * (1^n) last.  That order is a linear extension of dominance, largest first.
 */
std::vector<Partition> partitions_of(int n);

/* Partitions of n with at most max_len parts, same order. */
std::vector<Partition> partitions_of(int n, int max_len);

/* All compositions of n into exactly k nonnegative parts. */
std::vector<Composition> compositions_of(int n, int k);

Partition conjugate(const Partition& mu);

/* n(mu) = sum_i (i-1) mu_i. */
std::int64_t nstat(const Partition& mu);

/* One hook length per cell, listed row by row. */
std::vector<int> hooks(const Partition& mu);

/* True iff every partial sum of nu is <= the matching partial sum of lambda.
 * Throws std::invalid_argument when |nu| != |lambda|.
 */
bool dominance_leq(const Partition& nu, const Partition& lambda);

/* N! / prod_i mu_i!, the number of distinct rearrangements of a word with
 * content mu. */
std::int64_t multinomial(const Partition& mu);

std::int64_t factorial(int n);

}  // namespace kostka
