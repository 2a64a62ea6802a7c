#pragma once

#include "kostka/partition.hpp"
#include "kostka/qpoly.hpp"

#include <cstdint>
#include <vector>

namespace kostka {

/* Rows of a Young tableau, top row first. */
using Tableau = std::vector<std::vector<int>>;

/* All semistandard tableaux of the given shape whose content is nu
 * (nu[k] copies of the letter k+1).  Letters are placed as successive
 * horizontal strips.
 */
std::vector<Tableau> semistandard_tableaux(const Partition& shape, const Composition& nu);

/* Number of semistandard tableaux of shape lambda and content nu, i.e. the
 * Kostka number K_{lambda,nu} = weight multiplicity of nu in pi_lambda.
 * Invariant under permutations of nu.  Throws if |lambda| != |nu|.
 */
std::int64_t ssyt_count(const Partition& lambda, const Composition& nu);

/* Number of standard tableaux of the given shape. */
std::int64_t standard_tableaux_count(const Partition& shape);

/* Row reading word: rows bottom to top, each row left to right. */
std::vector<int> reading_word(const Tableau& t);

/*
 * Lascoux-Schutzenberger charge of a word whose content is a partition
 * (at least as many 1s as 2s, as many 2s as 3s, ...).
 *
 * The word is split into standard subwords: scanning leftwards from the
 * right end, pick the first 1, then continue leftwards (wrapping around to
 * the right end when needed) to the first 2, and so on up to the largest
 * letter still present.  Inside one subword the letter 1 has index 0 and
 * k+1 inherits the index of k, plus one if the scan wrapped around to find
 * it.  The charge of the subword is the sum of the indices; the charge of
 * the word is the sum over the extracted subwords.
 */
std::int64_t charge(const std::vector<int>& word);

/* K_{lambda,mu}(q) = sum over SSYT(lambda, mu) of q^charge.  mu must be a
 * partition; pass Partition::from_composition for unordered content.
 */
QPoly charge_kostka(const Partition& lambda, const Partition& mu);

/* K_{mu,(1^N)}(q) = q^{n(mu')} (q)_N / prod_x (1 - q^{h(x)}).  The division
 * is exact for every genuine partition; a remainder raises CheckFailure.
 */
QPoly kostka_hook(const Partition& mu);

/* ~K(q) = q^{n(mu)} K(1/q).  Raises CheckFailure when the result carries a
 * negative exponent, which means K was not a Kostka polynomial for mu.
 */
QPoly tilde_transform(const QPoly& k, const Partition& mu);

/* Weyl dimension of the sl_n module with highest weight lambda (padded to
 * n rows).  Throws std::invalid_argument when l(lambda) > n.
 */
std::int64_t sln_irrep_dim(const Partition& lambda, int n);

}  // namespace kostka
