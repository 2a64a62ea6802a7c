#pragma once

#include "kostka/multipoly.hpp"
#include "kostka/partition.hpp"
#include "kostka/qpoly.hpp"
#include "kostka/symgroup.hpp"

#include <gmpxx.h>

#include <map>
#include <vector>

namespace kostka {

/* d_k(mu) = N - (mu'_1 + ... + mu'_{N-k}), 1 <= k <= N. */
int dk(const Partition& mu, int k);

/* Generators of the Garsia-Procesi ideal: E_r over every k-subset of the
 * variables, for k - d_k(mu) < r <= k.  Deduplicated up to scalars. */
struct GPIdealSpec {
    Partition mu;
    std::vector<MultiPoly> generators;

    int nvars() const { return mu.size(); }
};

GPIdealSpec cmu_generators(const Partition& mu);

/* Graded S_N-character of Q[z_1..z_N]/(gens), one class function per degree
 * 0..last nonzero degree.  Traces use one permutation per cycle type; for
 * N <= 4 a second, conjugated representative is also evaluated and any
 * disagreement raises CheckFailure.  Raises CheckFailure (naming the degree)
 * when the ideal is not S_N-stable, and when the quotient has not vanished
 * by degree max_degree. */
std::vector<ClassFunction> graded_quotient_character(int nvars, const std::vector<MultiPoly>& gens, int max_degree);

QPoly rmu_hilbert(const Partition& mu);

struct GradedSNDecomposition {
    Partition mu;
    std::map<Partition, QPoly> components;  // lambda -> graded multiplicity of W_lambda
    QPoly hilbert;

    /* Zero for an absent lambda. */
    QPoly component(const Partition& lambda) const;
};

/* Graded decomposition of R_mu into Specht isotypes.  Verifies the
 * dimension identity sum_lambda f^lambda * component = hilbert and that the
 * trivial isotype is exactly the constants; CheckFailure otherwise. */
GradedSNDecomposition rmu_decompose(const Partition& mu);

/* Same, for an arbitrary generator set in |mu| variables (used for negative
 * controls: a non-stable set fails with the offending degree). */
GradedSNDecomposition decompose_quotient(const Partition& mu, const std::vector<MultiPoly>& gens);

/* Filtered dimensions of the coordinate ring of the orbit of
 * (a_1^mu_1, ..., a_l^mu_l): successive differences of the evaluation ranks. */
std::vector<int> amu_graded_dims(const Partition& mu, const std::vector<mpq_class>& points);

/* Built-in point sets: (1, 2, 3, ...) and the alternate (1, 3, 9, ...). */
std::vector<mpq_class> default_points(int count, bool alternate = false);

}  // namespace kostka
