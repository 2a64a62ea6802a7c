#pragma once

#include "kostka/linalg.hpp"
#include "kostka/multipoly.hpp"
#include "kostka/partition.hpp"
#include "kostka/symgroup.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

namespace kostka {

/*
 * Echelon basis of a subspace of the degree-d homogeneous polynomials,
 * spelled out over all monomials of that degree.  Column j is the j-th
 * monomial in lexicographically decreasing order, so pivots are the
 * largest monomials of the rows.
 */
struct GradedSliceBasis {
    int nvars = 0;
    int degree = 0;
    std::vector<Monomial> monomials;  // column order
    EchelonBasis basis;
    std::vector<Monomial> pivots;
    std::vector<Monomial> complement;

    int rank() const { return basis.rank(); }
    /* Coordinates of a degree-d polynomial in the column order. */
    SparseVec coordinates(const MultiPoly& p) const;
    /* Remainder of p after reduction; supported on the complement. */
    MultiPoly reduce(const MultiPoly& p) const;
};

/* Degree-d component of the ideal generated by homogeneous `gens`, built
 * from every product m*g with deg(m*g) = d.  Dense in the monomials of
 * degree d; intended for small slices and as a cross-check of
 * GradedQuotient.  Throws std::invalid_argument on a non-homogeneous
 * generator.
 */
GradedSliceBasis ideal_slice(int nvars, const std::vector<MultiPoly>& gens, int d);

/*
 * Quotient of Q[z_1..z_N] by a homogeneous ideal, built one degree at a
 * time.
 *
 * Each degree keeps a set of standard monomials (the monomials that are not
 * leading terms of ideal elements under the graded-lex order) together with
 * the normal form of each non-standard monomial it has met.  Standard sets
 * are closed under division, so the degree d+1 slice of the quotient is a
 * quotient of the span U of {z_i s : s standard in degree d}.  The relations
 * on U are the images of
 *   - the Koszul syzygies  z_i [z_j m] - z_j [z_i m]  for standard m of
 *     degree d-1 (trivial when both brackets are standard), and
 *   - the generators of degree d+1,
 * which together span (ideal slice) intersected with U.  Working in U keeps
 * the linear algebra at size N * dim(quotient) rather than the full
 * monomial count.
 */
class GradedQuotient {
public:
    GradedQuotient(int nvars, std::vector<MultiPoly> gens);

    int nvars() const { return nvars_; }
    const std::vector<MultiPoly>& generators() const { return gens_; }

    /* Dimension of the degree-d slice of the quotient. */
    int dim(int d);
    const std::vector<Monomial>& standard_monomials(int d);

    /* Coordinates of [m] in the standard basis of degree deg(m).  Column k
     * refers to standard_monomials(deg m)[k]. */
    const SparseVec& normal_form(const Monomial& m);
    SparseVec normal_form(const MultiPoly& p);
    bool in_ideal(const MultiPoly& p);

    /* Trace of sigma on the degree-d slice.  First confirms that sigma maps
     * every generator of degree <= d into the ideal; raises CheckFailure
     * naming the offending degree otherwise. */
    mpq_class trace(const Permutation& sigma, int d);

private:
    struct Slice {
        std::vector<Monomial> standard;
        std::unordered_map<Monomial, int, MonomialHash> standard_index;
        std::unordered_map<Monomial, SparseVec, MonomialHash> normal_forms;  // memo, incl. standard
    };

    void build_through(int d);
    void build_next();
    SparseVec lift_to(const Slice& lower, int var, const SparseVec& coords, const std::map<Monomial, int>& u_index) const;

    int nvars_;
    std::vector<MultiPoly> gens_;
    std::map<int, std::vector<const MultiPoly*>> gens_by_degree_;
    std::deque<Slice> slices_;  // stable references across growth
};

struct QuotientDims {
    std::vector<int> dims;  // degrees 0..last computed
    bool exhausted = false; // a zero slice was reached
};

/* Dimensions of the quotient slices for d = 0..d_max, stopping early at the
 * first zero slice (every later slice is zero too). */
QuotientDims quotient_dims(int nvars, const std::vector<MultiPoly>& gens, int d_max);

mpq_class quotient_trace(int nvars, const std::vector<MultiPoly>& gens, const Permutation& sigma, int d);

/*
 * Cumulative ranks r_0, r_1, ..., where r_d is the rank of the evaluation
 * matrix (monomials of degree <= d) x (points in the S_N-orbit of X), and X
 * repeats points[i] mu_i times.  Stops once the rank reaches the orbit size
 * N!/prod mu_i! (or at d_max).  Throws std::invalid_argument on repeated
 * points or a length mismatch.
 */
std::vector<int> orbit_evaluation_ranks(const Composition& mu, const std::vector<mpq_class>& points,
                                        std::optional<int> d_max = std::nullopt);

/* Distinct rearrangements of a tuple. */
std::vector<std::vector<mpq_class>> orbit_points(const Composition& mu, const std::vector<mpq_class>& points);

}  // namespace kostka
