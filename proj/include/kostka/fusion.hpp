#pragma once

#include "kostka/linalg.hpp"
#include "kostka/partition.hpp"
#include "kostka/qpoly.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace kostka {

/* Sparse square matrix stored by columns: column j is the image of e_j. */
class SparseMatrix {
public:
    SparseMatrix() = default;
    explicit SparseMatrix(int dim) : columns_(dim) {}

    int dim() const { return static_cast<int>(columns_.size()); }
    const SparseVec& column(int j) const { return columns_[j]; }
    void set_column(int j, SparseVec v) { columns_[j] = std::move(v); }

    SparseVec apply(const SparseVec& v) const;
    friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
    SparseMatrix operator-(const SparseMatrix& o) const;
    bool operator==(const SparseMatrix& o) const { return columns_ == o.columns_; }

private:
    std::vector<SparseVec> columns_;
};

/*
 * Sym^m(C^n) as polynomials of degree m in x_1..x_n.  Basis vector j is the
 * monomial with exponent vector basis[j]; index 0 is x_1^m, the highest
 * weight vector.  E_ab = x_a d/dx_b (0-based a, b); the weight of a basis
 * monomial is its exponent vector.
 */
struct SymPowerModule {
    int n = 0;
    int m = 0;
    std::vector<Composition> basis;
    std::map<Composition, int> index;
    std::vector<std::vector<SparseMatrix>> e;  // e[a][b], a != b
    std::vector<SparseMatrix> h;               // h[a] = E_aa - E_{a+1,a+1}, a < n-1

    int dim() const { return static_cast<int>(basis.size()); }
};

SymPowerModule build_sym_module(int n, int m);

/* Tensor product of symmetric powers with a flat mixed-radix basis. */
class FusionSpace {
public:
    FusionSpace(const Composition& mu, int n, std::vector<mpq_class> points);

    int n() const { return n_; }
    const Composition& mu() const { return mu_; }
    const std::vector<mpq_class>& points() const { return points_; }
    int dim() const { return dim_; }
    const std::vector<SymPowerModule>& factors() const { return factors_; }

    /* Per-factor basis indices of a flat index, and back. */
    std::vector<int> split(int flat) const;
    int join(const std::vector<int>& parts) const;
    /* Sum of the factor weights. */
    Composition weight(int flat) const;

    /* sum_i z_i^k * (E_ab acting in factor i). */
    SparseMatrix fusion_operator(int a, int b, int k) const;

    /* v_{mu_1} (x) ... (x) v_{mu_m}. */
    SparseVec cyclic_vector() const;

private:
    Composition mu_;
    int n_;
    std::vector<mpq_class> points_;
    std::vector<SymPowerModule> factors_;
    std::vector<int> stride_;
    int dim_ = 1;
};

/*
 * Filtration of the tensor product by t-degree.  levels[d] holds the vectors
 * added at degree d: together with all earlier levels they span F^(<=d).
 * Every stored vector is a weight vector; weights[d][j] is the weight of
 * levels[d][j].
 */
struct FilteredSpace {
    Composition mu;
    int n = 0;
    std::vector<mpq_class> points;
    int total_dim = 0;
    int max_t_degree = 0;
    std::vector<std::vector<SparseVec>> levels;
    std::vector<std::vector<Composition>> weights;

    std::vector<int> graded_dims() const;
    std::vector<int> cumulative_dims() const;
};

/* Points (0, 1, 2, ...) and the alternate (1, 3, 9, ...). */
std::vector<mpq_class> fusion_default_points(int count, bool alternate = false);

/*
 * Closes the cyclic vector under E_ab (x) t^k, a > b, 0 <= k <= max_t_degree
 * (default |mu| - 1), level by level.  Throws std::invalid_argument on
 * repeated or missing points and CheckFailure when the filtration stalls
 * below the full dimension.
 */
FilteredSpace generate_filtration(const Composition& mu, int n, const std::vector<mpq_class>& points,
                                  std::optional<int> max_t_degree = std::nullopt);

struct GradedSlnDecomposition {
    std::vector<std::map<Partition, std::int64_t>> per_degree;
    std::map<Partition, QPoly> assembled;

    QPoly component(const Partition& lambda) const;
};

/* Weight multiplicities -> irreducible multiplicities by peeling dominant
 * weights in lexicographically decreasing order.  CheckFailure on a negative
 * multiplicity or a nonzero residue. */
std::map<Partition, std::int64_t> peel_weights(std::map<Composition, std::int64_t> weights, int n);

GradedSlnDecomposition graded_decompose(const FilteredSpace& fs);

/* lambda -> graded multiplicity of pi_lambda in the fusion product. */
std::map<Partition, QPoly> fusion_character(const Composition& mu, int n,
                                            std::optional<std::vector<mpq_class>> points = std::nullopt);

struct SchurWeylReport {
    int N = 0;
    int n = 0;
    std::vector<int> fusion_dims;
    std::vector<int> expected_dims;
    bool character_match = false;
};

/* Compares the fusion product of N copies of C^n with the coinvariant ring
 * route, degree by degree, both in dimension and in weight multiplicities.
 * Raises CheckFailure naming the first offending degree. */
SchurWeylReport schur_weyl_check(int N, int n);

}  // namespace kostka
