#include "kostka/fusion.hpp"

#include "kostka/errors.hpp"
#include "kostka/gp_ring.hpp"
#include "kostka/kostka.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace kostka {

SparseVec SparseMatrix::apply(const SparseVec& v) const
{
    std::vector<SparseVec::Entry> acc;
    for (const auto& [j, c] : v.entries())
        for (const auto& [i, a] : columns_.at(j).entries())
            acc.emplace_back(i, c * a);
    return SparseVec::from_entries(std::move(acc));
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b)
{
    SparseMatrix r(b.dim());
    for (int j = 0; j < b.dim(); ++j)
        r.columns_[j] = a.apply(b.columns_[j]);
    return r;
}

SparseMatrix SparseMatrix::operator-(const SparseMatrix& o) const
{
    SparseMatrix r = *this;
    for (int j = 0; j < dim(); ++j)
        r.columns_[j].axpy(-1, o.columns_.at(j));
    return r;
}

SymPowerModule build_sym_module(int n, int m)
{
    if (n < 2 || m < 0)
        throw std::invalid_argument("build_sym_module: need n >= 2 and m >= 0");
    SymPowerModule mod;
    mod.n = n;
    mod.m = m;
    mod.basis = compositions_of(m, n);  // lexicographically decreasing: x_1^m first
    for (int j = 0; j < mod.dim(); ++j)
        mod.index.emplace(mod.basis[j], j);

    mod.e.assign(n, std::vector<SparseMatrix>(n, SparseMatrix(mod.dim())));
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (a == b)
                continue;
            for (int j = 0; j < mod.dim(); ++j) {
                const Composition& alpha = mod.basis[j];
                if (alpha[b] == 0)
                    continue;
                Composition beta = alpha;
                ++beta[a];
                --beta[b];
                mod.e[a][b].set_column(j, SparseVec::from_entries({{mod.index.at(beta), alpha[b]}}));
            }
        }
    }
    for (int a = 0; a + 1 < n; ++a) {
        SparseMatrix h(mod.dim());
        for (int j = 0; j < mod.dim(); ++j)
            h.set_column(j, SparseVec::from_entries({{j, mod.basis[j][a] - mod.basis[j][a + 1]}}));
        mod.h.push_back(std::move(h));
    }
    return mod;
}

// ---------------------------------------------------------------------------

FusionSpace::FusionSpace(const Composition& mu, int n, std::vector<mpq_class> points)
    : mu_(mu), n_(n), points_(std::move(points))
{
    if (points_.size() != mu_.size())
        throw std::invalid_argument("need one evaluation point per factor");
    for (std::size_t i = 0; i < points_.size(); ++i)
        for (std::size_t j = i + 1; j < points_.size(); ++j)
            if (points_[i] == points_[j])
                throw std::invalid_argument("evaluation points must be pairwise distinct");
    for (int m : mu_) {
        if (m < 0)
            throw std::invalid_argument("negative symmetric power");
        factors_.push_back(build_sym_module(n, m));
    }
    stride_.assign(factors_.size(), 1);
    for (int i = static_cast<int>(factors_.size()) - 1; i >= 0; --i) {
        stride_[i] = dim_;
        dim_ *= factors_[i].dim();
    }
}

std::vector<int> FusionSpace::split(int flat) const
{
    std::vector<int> parts(factors_.size());
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        parts[i] = flat / stride_[i];
        flat %= stride_[i];
    }
    return parts;
}

int FusionSpace::join(const std::vector<int>& parts) const
{
    int flat = 0;
    for (std::size_t i = 0; i < parts.size(); ++i)
        flat += parts[i] * stride_[i];
    return flat;
}

Composition FusionSpace::weight(int flat) const
{
    Composition w(n_, 0);
    const auto parts = split(flat);
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (int a = 0; a < n_; ++a)
            w[a] += factors_[i].basis[parts[i]][a];
    return w;
}

SparseMatrix FusionSpace::fusion_operator(int a, int b, int k) const
{
    if (a < 0 || b < 0 || a >= n_ || b >= n_ || a == b)
        throw std::invalid_argument("fusion_operator: index out of range");
    if (k < 0)
        throw std::invalid_argument("fusion_operator: negative t-degree");
    std::vector<mpq_class> scale;
    for (const mpq_class& z : points_) {
        mpq_class p = 1;
        for (int e = 0; e < k; ++e)
            p *= z;
        scale.push_back(p);
    }
    SparseMatrix op(dim_);
    for (int j = 0; j < dim_; ++j) {
        const auto parts = split(j);
        std::vector<SparseVec::Entry> acc;
        for (std::size_t i = 0; i < factors_.size(); ++i) {
            if (scale[i] == 0)
                continue;
            for (const auto& [r, c] : factors_[i].e[a][b].column(parts[i]).entries()) {
                auto moved = parts;
                moved[i] = r;
                acc.emplace_back(join(moved), c * scale[i]);
            }
        }
        op.set_column(j, SparseVec::from_entries(std::move(acc)));
    }
    return op;
}

SparseVec FusionSpace::cyclic_vector() const
{
    return SparseVec::unit(0);
}

// ---------------------------------------------------------------------------

std::vector<int> FilteredSpace::graded_dims() const
{
    std::vector<int> out;
    for (const auto& l : levels)
        out.push_back(static_cast<int>(l.size()));
    return out;
}

std::vector<int> FilteredSpace::cumulative_dims() const
{
    std::vector<int> out;
    int total = 0;
    for (const auto& l : levels)
        out.push_back(total += static_cast<int>(l.size()));
    return out;
}

std::vector<mpq_class> fusion_default_points(int count, bool alternate)
{
    std::vector<mpq_class> pts;
    mpq_class p = 1;
    for (int i = 0; i < count; ++i) {
        pts.push_back(alternate ? p : mpq_class(i));
        p *= 3;
    }
    return pts;
}

FilteredSpace generate_filtration(const Composition& mu, int n, const std::vector<mpq_class>& points,
                                  std::optional<int> max_t_degree)
{
    const FusionSpace space(mu, n, points);
    int size = 0;
    for (int m : mu)
        size += m;
    const int kmax = max_t_degree.value_or(std::max(size - 1, 0));

    FilteredSpace fs;
    fs.mu = mu;
    fs.n = n;
    fs.points = points;
    fs.total_dim = space.dim();
    fs.max_t_degree = kmax;

    // ops[k] lists the lowering operators E_ab (x) t^k, a > b
    std::vector<std::vector<SparseMatrix>> ops(kmax + 1);
    for (int k = 0; k <= kmax; ++k)
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < a; ++b)
                ops[k].push_back(space.fusion_operator(a, b, k));

    std::map<Composition, EchelonBasis> spans;  // one per weight space
    int found = 0;

    // Adds v to level d when it is new; returns whether it was.
    auto add = [&](SparseVec v, int d) {
        if (v.is_zero())
            return false;
        Composition w = space.weight(v.lead());
        if (!spans[w].insert(v))
            return false;
        fs.levels[d].push_back(std::move(v));
        fs.weights[d].push_back(std::move(w));
        ++found;
        return true;
    };
    // Closes level d under the t-degree 0 operators.
    auto close = [&](int d, std::size_t from) {
        for (std::size_t q = from; q < fs.levels[d].size(); ++q)
            for (const SparseMatrix& op : ops[0])
                add(op.apply(fs.levels[d][q]), d);
    };

    int idle = 0;
    for (int d = 0; found < fs.total_dim; ++d) {
        fs.levels.emplace_back();
        fs.weights.emplace_back();
        if (d == 0) {
            add(space.cyclic_vector(), 0);
        } else {
            for (int k = 1; k <= std::min(kmax, d); ++k)
                for (std::size_t q = 0; q < fs.levels[d - k].size(); ++q)
                    for (const SparseMatrix& op : ops[k])
                        add(op.apply(fs.levels[d - k][q]), d);
        }
        close(d, 0);
        idle = fs.levels[d].empty() ? idle + 1 : 0;
        if (found < fs.total_dim && idle >= std::max(kmax, 1))
            throw CheckFailure("filtration stalled at dimension " + std::to_string(found) + " of " +
                               std::to_string(fs.total_dim) + " (degree " + std::to_string(d) + ")");
    }
    return fs;
}

// ---------------------------------------------------------------------------

QPoly GradedSlnDecomposition::component(const Partition& lambda) const
{
    auto it = assembled.find(lambda);
    return it == assembled.end() ? QPoly{} : it->second;
}

std::map<Partition, std::int64_t> peel_weights(std::map<Composition, std::int64_t> weights, int n)
{
    std::map<Partition, std::int64_t> out;
    if (weights.empty())
        return out;
    int N = 0;
    for (int x : weights.begin()->first)
        N += x;
    const std::vector<Composition> all = compositions_of(N, n);
    for (const Partition& lambda : partitions_of(N, n)) {
        const std::int64_t c = weights[lambda.padded(n)];
        if (c < 0)
            throw CheckFailure("negative multiplicity " + std::to_string(c) + " for highest weight " +
                               lambda.to_string());
        if (c == 0)
            continue;
        out.emplace(lambda, c);
        for (const Composition& beta : all)
            if (const std::int64_t k = ssyt_count(lambda, beta); k != 0)
                weights[beta] -= c * k;
    }
    for (const auto& [beta, c] : weights)
        if (c != 0)
            throw CheckFailure("weight multiplicities are not a character: residue at a non-dominant weight");
    return out;
}

GradedSlnDecomposition graded_decompose(const FilteredSpace& fs)
{
    const int total = fs.cumulative_dims().empty() ? 0 : fs.cumulative_dims().back();
    if (total != fs.total_dim)
        throw std::invalid_argument("graded_decompose needs a full-dimensional filtration");
    GradedSlnDecomposition out;
    for (std::size_t d = 0; d < fs.levels.size(); ++d) {
        std::map<Composition, std::int64_t> wts;
        for (const Composition& w : fs.weights[d])
            ++wts[w];
        auto mults = peel_weights(std::move(wts), fs.n);
        for (const auto& [lambda, c] : mults)
            out.assembled[lambda].add_term(static_cast<QPoly::Exponent>(d), c);
        out.per_degree.push_back(std::move(mults));
    }
    return out;
}

std::map<Partition, QPoly> fusion_character(const Composition& mu, int n, std::optional<std::vector<mpq_class>> points)
{
    const auto pts = points.value_or(fusion_default_points(static_cast<int>(mu.size())));
    return graded_decompose(generate_filtration(mu, n, pts)).assembled;
}

SchurWeylReport schur_weyl_check(int N, int n)
{
    const Composition ones(N, 1);
    const FilteredSpace fs = generate_filtration(ones, n, fusion_default_points(N));
    const GradedSNDecomposition ring = rmu_decompose(Partition::column(N));

    SchurWeylReport rep;
    rep.N = N;
    rep.n = n;
    rep.fusion_dims = fs.graded_dims();

    std::map<int, std::map<Composition, std::int64_t>> expected_weights;
    std::map<int, std::int64_t> expected;
    for (const auto& [lambda, poly] : ring.components) {
        if (lambda.length() > n)
            continue;
        const std::int64_t dim = sln_irrep_dim(lambda, n);
        for (const auto& [d, c] : poly.terms()) {
            expected[static_cast<int>(d)] += dim * c.get_si();
            for (const Composition& beta : compositions_of(N, n))
                if (const std::int64_t k = ssyt_count(lambda, beta); k != 0)
                    expected_weights[static_cast<int>(d)][beta] += c.get_si() * k;
        }
    }
    const int top = std::max(static_cast<int>(rep.fusion_dims.size()),
                             expected.empty() ? 0 : expected.rbegin()->first + 1);
    for (int d = 0; d < top; ++d) {
        const int got = d < static_cast<int>(rep.fusion_dims.size()) ? rep.fusion_dims[d] : 0;
        const auto want = expected.count(d) ? expected.at(d) : 0;
        rep.expected_dims.push_back(static_cast<int>(want));
        if (got != want)
            throw CheckFailure("Schur-Weyl dimension mismatch at degree " + std::to_string(d) + ": fusion " +
                               std::to_string(got) + ", ring route " + std::to_string(want));
        std::map<Composition, std::int64_t> wts;
        if (d < static_cast<int>(fs.weights.size()))
            for (const Composition& w : fs.weights[d])
                ++wts[w];
        auto& want_w = expected_weights[d];
        std::erase_if(want_w, [](const auto& kv) { return kv.second == 0; });
        if (wts != want_w)
            throw CheckFailure("Schur-Weyl character mismatch at degree " + std::to_string(d));
    }
    rep.character_match = true;
    return rep;
}

}  // namespace kostka
