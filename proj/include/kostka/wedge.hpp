#pragma once

#include "kostka/partition.hpp"
#include "kostka/qpoly.hpp"

#include <map>
#include <optional>
#include <vector>

namespace kostka {

/*
 * Graded multiplicities of pi_mu in the reduced wedge product of N copies of
 * C^n[z^-1].  Degrees are reported in q^-1: every exponent is <= 0.
 */
struct WedgeDecomposition {
    int N = 0;
    int n = 0;
    std::map<Partition, QPoly> components;    // agreed result
    std::map<Partition, QPoly> character;     // K_{mu,(1^N)}(1/q)
    std::map<Partition, QPoly> brute_force;   // alternating isotype of pi^N (x) R_N

    QPoly component(const Partition& mu) const;
};

/* Both routes; CheckFailure naming mu when they disagree. */
WedgeDecomposition reduced_wedge_decompose(int N, int n);

/* Character route only: mu -> K_{mu,(1^N)}(1/q), l(mu) <= n.  Also asserts
 * q^{-N(N-1)/2} K_{mu',(1^N)}(q) = K_{mu,(1^N)}(1/q) for every mu. */
std::map<Partition, QPoly> wedge_char(int N, int n);

/* Brute-force route: alternating isotype of pi^(x)N (x) R_N, weight by
 * weight through S_N characters, peeled into sl_n irreducibles. */
std::map<Partition, QPoly> wedge_brute_force(int N, int n);

/* Number of words of content beta fixed by a permutation of cycle type rho. */
std::int64_t fixed_words(const Partition& rho, const Composition& beta);

/*
 * q^{n(mu0')} * wedge_char(N, n) with N = mn + i and mu0' = (n^m, i); i = n
 * is folded into (0, m+1).  CheckFailure unless the largest exponent over
 * all components is 0 and is attained at mu0.
 */
std::map<Partition, QPoly> normalized_wedge_char(int i, int m, int n);

/* Partition mu0 = ((n^m, i))'. */
Partition wedge_ground_state(int i, int m, int n);

/*
 * chi_mu(q) = q^{n(mu')+|mu|} prod_{i<j} (1 - q^{mu_i-mu_j+j-i}) / (q)_oo^{n-1},
 * mu padded to n rows, exact through q^D.
 */
QSeries winf_char(const Partition& mu, int n, int D);

struct StabilizationReport {
    Partition mu_bar;  // normalized: fewer than n rows
    int n = 0;
    int i = 0;
    int depth = 0;
    std::vector<int> ms;                      // sequence indices used
    std::vector<Partition> shapes;            // mu for each m
    std::vector<QPoly::Exponent> leading;     // lowest exponent of f_m
    std::vector<std::vector<mpz_class>> windows;
    std::optional<int> stable_from;           // first m from which windows agree through m_max
    std::vector<mpz_class> limit_window;
    std::vector<mpz_class> winf_window;
    QPoly::Exponent shift = 0;                // winf leading exponent minus the limit's
    bool matches_winf = false;
};

/*
 * f_m(q) = q^{-n(mu0')} K_{mu,(1^{nm+i})}(q) with mu_j = mu_bar_j + (m - m_bar),
 * for m = m_bar .. m_max.  Windows are the depth+1 coefficients starting at
 * the lowest exponent.  Failure to stabilize is reported, not thrown.
 * Throws std::invalid_argument when |mu_bar| - i is not a multiple of n.
 */
StabilizationReport limit_stabilization(const Partition& mu_bar, int n, int i, int depth, int m_max);

struct HookFactorizationReport {
    Partition mu;
    int n = 0;
    QPoly hook_product;        // prod_x (1 - q^h(x))
    bool corrected_holds = false;  // exponent mu_i + n - i
    bool printed_holds = false;    // exponent mu_i + i
};

/* Compares the hook product with prod_i (q)_{e_i} / prod_{i<j}(1-q^{mu_i-mu_j+j-i})
 * for both exponent choices.  CheckFailure when the corrected one fails. */
HookFactorizationReport hook_factorization_check(const Partition& mu, int n);

}  // namespace kostka
