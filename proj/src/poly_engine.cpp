#include "kostka/poly_engine.hpp"

#include "kostka/errors.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace kostka {

namespace {

void require_homogeneous(const std::vector<MultiPoly>& gens, int nvars)
{
    for (const MultiPoly& g : gens) {
        if (g.nvars() != nvars)
            throw std::invalid_argument("generator " + g.to_string() + " lives in the wrong number of variables");
        if (!g.is_homogeneous())
            throw std::invalid_argument("generator " + g.to_string() + " is not homogeneous");
    }
}

}  // namespace

// ---------------------------------------------------------------------------
// Dense ideal slices

SparseVec GradedSliceBasis::coordinates(const MultiPoly& p) const
{
    std::vector<SparseVec::Entry> entries;
    for (const auto& [m, c] : p.terms()) {
        if (m.degree() != degree)
            throw std::invalid_argument("polynomial is not in degree " + std::to_string(degree));
        // monomials are stored in decreasing order
        auto it = std::lower_bound(monomials.begin(), monomials.end(), m,
                                   [](const Monomial& a, const Monomial& b) { return b < a; });
        entries.emplace_back(static_cast<int>(it - monomials.begin()), c);
    }
    return SparseVec::from_entries(std::move(entries));
}

MultiPoly GradedSliceBasis::reduce(const MultiPoly& p) const
{
    const SparseVec r = basis.reduce(coordinates(p));
    MultiPoly out(nvars);
    for (const auto& [col, c] : r.entries())
        out.add_term(monomials[col], c);
    return out;
}

GradedSliceBasis ideal_slice(int nvars, const std::vector<MultiPoly>& gens, int d)
{
    require_homogeneous(gens, nvars);
    GradedSliceBasis s;
    s.nvars = nvars;
    s.degree = d;
    s.monomials = monomials_of_degree(nvars, d);
    for (const MultiPoly& g : gens) {
        if (g.is_zero())
            continue;
        const int gd = g.homogeneous_degree();
        if (gd > d)
            continue;
        for (const Monomial& m : monomials_of_degree(nvars, d - gd))
            s.basis.insert(s.coordinates(g.times_monomial(m)));
    }
    s.basis.fully_reduce();
    for (int j = 0; j < static_cast<int>(s.monomials.size()); ++j)
        (s.basis.is_pivot(j) ? s.pivots : s.complement).push_back(s.monomials[j]);
    return s;
}

// ---------------------------------------------------------------------------
// Incremental quotient

GradedQuotient::GradedQuotient(int nvars, std::vector<MultiPoly> gens) : nvars_(nvars), gens_(std::move(gens))
{
    if (nvars < 0 || nvars > kMaxVariables)
        throw std::invalid_argument("GradedQuotient: unsupported number of variables");
    require_homogeneous(gens_, nvars);
    for (const MultiPoly& g : gens_)
        if (!g.is_zero())
            gens_by_degree_[g.homogeneous_degree()].push_back(&g);
}

int GradedQuotient::dim(int d)
{
    if (d < 0)
        return 0;
    build_through(d);
    return static_cast<int>(slices_[d].standard.size());
}

const std::vector<Monomial>& GradedQuotient::standard_monomials(int d)
{
    build_through(d);
    return slices_[d].standard;
}

void GradedQuotient::build_through(int d)
{
    while (static_cast<int>(slices_.size()) <= d)
        build_next();
}

SparseVec GradedQuotient::lift_to(const Slice& lower, int var, const SparseVec& coords,
                                  const std::map<Monomial, int>& u_index) const
{
    std::vector<SparseVec::Entry> entries;
    entries.reserve(coords.nnz());
    for (const auto& [k, c] : coords.entries())
        entries.emplace_back(u_index.at(lower.standard[k].times_variable(var)), c);
    return SparseVec::from_entries(std::move(entries));
}

void GradedQuotient::build_next()
{
    const int D = static_cast<int>(slices_.size());

    // U: candidate monomials, largest first
    std::vector<Monomial> u;
    if (D == 0) {
        u.push_back(Monomial{});
    } else {
        std::set<Monomial> seen;
        for (const Monomial& s : slices_[D - 1].standard)
            for (int i = 0; i < nvars_; ++i)
                seen.insert(s.times_variable(i));
        u.assign(seen.rbegin(), seen.rend());
    }
    std::map<Monomial, int> u_index;
    for (int k = 0; k < static_cast<int>(u.size()); ++k)
        u_index.emplace(u[k], k);

    EchelonBasis relations;

    if (D >= 2) {
        // Koszul relations through the standard monomials two degrees down
        const Slice& lower = slices_[D - 1];
        const std::vector<Monomial> lower2 = slices_[D - 2].standard;
        for (const Monomial& m : lower2) {
            for (int i = 0; i < nvars_; ++i) {
                for (int j = i + 1; j < nvars_; ++j) {
                    const Monomial a = m.times_variable(j);
                    const Monomial b = m.times_variable(i);
                    if (lower.standard_index.count(a) && lower.standard_index.count(b))
                        continue;  // both sides name the same monomial of U
                    SparseVec r = lift_to(lower, i, normal_form(a), u_index);
                    r.axpy(-1, lift_to(slices_[D - 1], j, normal_form(b), u_index));
                    if (!r.is_zero())
                        relations.insert(std::move(r));
                }
            }
        }
    }

    if (auto it = gens_by_degree_.find(D); it != gens_by_degree_.end()) {
        for (const MultiPoly* g : it->second) {
            SparseVec r;
            for (const auto& [mono, c] : g->terms()) {
                if (auto ui = u_index.find(mono); ui != u_index.end()) {
                    r.axpy(c, SparseVec::unit(ui->second));
                    continue;
                }
                // every factor mono/z_i is non-standard; any one will do
                const int var = mono.first_variable();
                const SparseVec lower_nf = normal_form(mono.divided_by_variable(var));
                r.axpy(c, lift_to(slices_[D - 1], var, lower_nf, u_index));
            }
            if (!r.is_zero())
                relations.insert(std::move(r));
        }
    }

    relations.fully_reduce();

    Slice slice;
    for (int k = 0; k < static_cast<int>(u.size()); ++k) {
        if (relations.is_pivot(k))
            continue;
        slice.standard_index.emplace(u[k], static_cast<int>(slice.standard.size()));
        slice.standard.push_back(u[k]);
    }
    for (const Monomial& s : slice.standard)
        slice.normal_forms.emplace(s, SparseVec::unit(slice.standard_index.at(s)));
    for (const auto& [pivot, row] : relations.rows()) {
        // row = u[pivot] + sum a_t u[t] with t standard, so [u[pivot]] = -sum a_t [u[t]]
        std::vector<SparseVec::Entry> nf;
        for (std::size_t e = 1; e < row.entries().size(); ++e) {
            const auto& [col, c] = row.entries()[e];
            nf.emplace_back(slice.standard_index.at(u[col]), -c);
        }
        slice.normal_forms.emplace(u[pivot], SparseVec::from_entries(std::move(nf)));
    }
    slices_.push_back(std::move(slice));
}

const SparseVec& GradedQuotient::normal_form(const Monomial& m)
{
    const int d = m.degree();
    build_through(d);
    if (auto it = slices_[d].normal_forms.find(m); it != slices_[d].normal_forms.end())
        return it->second;
    if (slices_[d].standard.empty())
        return slices_[d].normal_forms.emplace(m, SparseVec{}).first->second;

    // m lies outside U: m = z_var * m' with m' non-standard one degree down
    const int var = m.first_variable();
    const SparseVec lower = normal_form(m.divided_by_variable(var));  // copy: recursion may rehash
    SparseVec out;
    for (const auto& [k, c] : lower.entries()) {
        const Monomial image = slices_[d - 1].standard[k].times_variable(var);
        out.axpy(c, slices_[d].normal_forms.at(image));
    }
    return slices_[d].normal_forms.emplace(m, std::move(out)).first->second;
}

SparseVec GradedQuotient::normal_form(const MultiPoly& p)
{
    if (!p.is_homogeneous())
        throw std::invalid_argument("normal_form expects a homogeneous polynomial");
    SparseVec out;
    for (const auto& [m, c] : p.terms())
        out.axpy(c, normal_form(m));
    return out;
}

bool GradedQuotient::in_ideal(const MultiPoly& p)
{
    // homogeneous components are tested separately
    std::map<int, MultiPoly> parts;
    for (const auto& [m, c] : p.terms())
        parts.try_emplace(m.degree(), nvars_).first->second.add_term(m, c);
    for (const auto& [d, part] : parts)
        if (!normal_form(part).is_zero())
            return false;
    return true;
}

mpq_class GradedQuotient::trace(const Permutation& sigma, int d)
{
    if (sigma.size() != nvars_)
        throw std::invalid_argument("trace: permutation size differs from the number of variables");
    for (const auto& [gd, gens] : gens_by_degree_) {
        if (gd > d)
            break;
        for (const MultiPoly* g : gens)
            if (!normal_form(permute_poly(sigma, *g)).is_zero())
                throw CheckFailure("ideal is not stable under the permutation at degree " + std::to_string(gd) +
                                   ": image of generator " + g->to_string() + " is not in the ideal");
    }
    build_through(d);
    mpq_class tr = 0;
    const std::vector<Monomial> basis = slices_[d].standard;
    for (int k = 0; k < static_cast<int>(basis.size()); ++k)
        tr += normal_form(basis[k].permuted(sigma)).at(k);
    return tr;
}

QuotientDims quotient_dims(int nvars, const std::vector<MultiPoly>& gens, int d_max)
{
    GradedQuotient q(nvars, gens);
    QuotientDims out;
    for (int d = 0; d <= d_max; ++d) {
        const int dim = q.dim(d);
        out.dims.push_back(dim);
        if (dim == 0) {
            out.exhausted = true;
            break;
        }
    }
    return out;
}

mpq_class quotient_trace(int nvars, const std::vector<MultiPoly>& gens, const Permutation& sigma, int d)
{
    GradedQuotient q(nvars, gens);
    return q.trace(sigma, d);
}

// ---------------------------------------------------------------------------
// Orbit evaluation

std::vector<std::vector<mpq_class>> orbit_points(const Composition& mu, const std::vector<mpq_class>& points)
{
    if (mu.size() != points.size())
        throw std::invalid_argument("need exactly one evaluation point per part");
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (points[i] == points[j])
                throw std::invalid_argument("evaluation points must be pairwise distinct");
    // permute indices of the repeated tuple, then map to values
    std::vector<int> labels;
    for (std::size_t i = 0; i < mu.size(); ++i)
        for (int k = 0; k < mu[i]; ++k)
            labels.push_back(static_cast<int>(i));
    std::sort(labels.begin(), labels.end());
    std::vector<std::vector<mpq_class>> out;
    do {
        std::vector<mpq_class> x;
        x.reserve(labels.size());
        for (int l : labels)
            x.push_back(points[l]);
        out.push_back(std::move(x));
    } while (std::next_permutation(labels.begin(), labels.end()));
    return out;
}

std::vector<int> orbit_evaluation_ranks(const Composition& mu, const std::vector<mpq_class>& points,
                                        std::optional<int> d_max)
{
    const auto orbit = orbit_points(mu, points);
    const int size = static_cast<int>(orbit.size());
    const int nvars = orbit.empty() ? 0 : static_cast<int>(orbit.front().size());

    EchelonBasis span;
    std::vector<SparseVec> fresh;  // basis vectors added at the previous degree

    std::vector<SparseVec::Entry> ones;
    for (int p = 0; p < size; ++p)
        ones.emplace_back(p, 1);
    SparseVec one = SparseVec::from_entries(std::move(ones));
    span.insert(one);
    fresh.push_back(std::move(one));
    std::vector<int> ranks{span.rank()};

    // V_d = V_{d-1} + sum_i z_i * (vectors new in degree d-1)
    for (int d = 1; !d_max || d <= *d_max; ++d) {
        if (span.rank() == size) {
            if (!d_max)
                break;
            ranks.push_back(size);
            continue;
        }
        std::vector<SparseVec> next;
        for (const SparseVec& v : fresh) {
            for (int i = 0; i < nvars; ++i) {
                std::vector<SparseVec::Entry> e;
                for (const auto& [p, c] : v.entries())
                    e.emplace_back(p, c * orbit[p][i]);
                SparseVec w = SparseVec::from_entries(std::move(e));
                SparseVec r = span.reduce(w);
                if (!r.is_zero()) {
                    span.insert(r);
                    next.push_back(std::move(w));
                }
            }
        }
        fresh = std::move(next);
        ranks.push_back(span.rank());
        if (fresh.empty() && span.rank() < size)
            throw CheckFailure("evaluation ranks stalled below the orbit size");
    }
    return ranks;
}

}  // namespace kostka
