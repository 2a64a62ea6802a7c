#include "kostka/gp_ring.hpp"

#include "kostka/errors.hpp"
#include "kostka/kostka.hpp"
#include "kostka/poly_engine.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

namespace kostka {

int dk(const Partition& mu, int k)
{
    const int n = mu.size();
    if (k < 1 || k > n)
        throw std::invalid_argument("dk: k must lie in 1.." + std::to_string(n));
    const Partition c = conjugate(mu);
    int s = 0;
    for (int j = 1; j <= n - k; ++j)
        s += c.part(j);
    return n - s;
}

namespace {

void for_each_subset(int n, int k, const std::function<void(const std::vector<int>&)>& f)
{
    std::vector<int> s(k);
    std::iota(s.begin(), s.end(), 0);
    while (true) {
        f(s);
        int i = k - 1;
        while (i >= 0 && s[i] == n - k + i)
            --i;
        if (i < 0)
            return;
        ++s[i];
        for (int j = i + 1; j < k; ++j)
            s[j] = s[j - 1] + 1;
    }
}

// Second representative of a cycle type: the consecutive-block permutation
// conjugated by i -> -i mod N.
Permutation second_representative(const Partition& rho)
{
    const int n = rho.size();
    std::vector<int> tau(n);
    for (int i = 0; i < n; ++i)
        tau[i] = (n - i) % n;
    const Permutation t(tau);
    return t * Permutation::of_cycle_type(rho) * t.inverse();
}

}  // namespace

GPIdealSpec cmu_generators(const Partition& mu)
{
    const int n = mu.size();
    if (n > kMaxVariables)
        throw std::invalid_argument("cmu_generators: at most " + std::to_string(kMaxVariables) + " variables");
    std::set<MultiPoly> seen;
    GPIdealSpec spec{mu, {}};
    for (int k = 1; k <= n; ++k) {
        const int d = dk(mu, k);
        for (int r = k - d + 1; r <= k; ++r) {
            for_each_subset(n, k, [&](const std::vector<int>& vars) {
                MultiPoly e = elementary_symmetric(n, r, vars).normalized();
                if (seen.insert(e).second)
                    spec.generators.push_back(std::move(e));
            });
        }
    }
    return spec;
}

std::vector<ClassFunction> graded_quotient_character(int nvars, const std::vector<MultiPoly>& gens, int max_degree)
{
    GradedQuotient quotient(nvars, gens);
    const std::vector<Partition> types = partitions_of(nvars);
    std::vector<ClassFunction> out;
    for (int d = 0;; ++d) {
        if (quotient.dim(d) == 0)
            break;
        if (d > max_degree)
            throw CheckFailure("quotient is still nonzero at degree " + std::to_string(d) + ", past the expected top " +
                               std::to_string(max_degree));
        ClassFunction chi(nvars);
        for (const Partition& rho : types) {
            mpq_class tr = quotient.trace(Permutation::of_cycle_type(rho), d);
            if (nvars <= 4) {
                const mpq_class other = quotient.trace(second_representative(rho), d);
                if (other != tr)
                    throw CheckFailure("trace depends on the representative of cycle type " + rho.to_string() +
                                       " at degree " + std::to_string(d));
            }
            chi.set(rho, std::move(tr));
        }
        out.push_back(std::move(chi));
    }
    return out;
}

QPoly rmu_hilbert(const Partition& mu)
{
    const GPIdealSpec spec = cmu_generators(mu);
    const int top = static_cast<int>(nstat(mu));
    const QuotientDims qd = quotient_dims(spec.nvars(), spec.generators, top + 1);
    if (!qd.exhausted)
        throw CheckFailure("R_" + mu.to_string() + " is nonzero above degree n(mu) = " + std::to_string(top));
    QPoly h;
    for (int d = 0; d < static_cast<int>(qd.dims.size()); ++d)
        h.add_term(d, qd.dims[d]);
    return h;
}

QPoly GradedSNDecomposition::component(const Partition& lambda) const
{
    auto it = components.find(lambda);
    return it == components.end() ? QPoly{} : it->second;
}

GradedSNDecomposition decompose_quotient(const Partition& mu, const std::vector<MultiPoly>& gens)
{
    const int n = mu.size();
    const auto chars = graded_quotient_character(n, gens, static_cast<int>(nstat(mu)));
    GradedSNDecomposition out{mu, {}, {}};
    for (int d = 0; d < static_cast<int>(chars.size()); ++d) {
        out.hilbert.add_term(d, chars[d].at(Partition::column(n)).get_num());  // trace of the identity
        for (const auto& [lambda, m] : decompose_character(chars[d]))
            out.components[lambda].add_term(d, m);
    }

    QPoly total;
    for (const auto& [lambda, k] : out.components)
        total += k * QPoly(static_cast<long>(standard_tableaux_count(lambda)));
    if (!(total == out.hilbert))
        throw CheckFailure("isotype dimensions " + total.to_string() + " do not add up to the Hilbert series " +
                           out.hilbert.to_string());
    if (n > 0 && !(out.component(Partition::row(n)) == QPoly(1)))
        throw CheckFailure("trivial isotype of the quotient is " + out.component(Partition::row(n)).to_string() +
                           ", expected the constants only");
    return out;
}

GradedSNDecomposition rmu_decompose(const Partition& mu)
{
    return decompose_quotient(mu, cmu_generators(mu).generators);
}

std::vector<int> amu_graded_dims(const Partition& mu, const std::vector<mpq_class>& points)
{
    const std::vector<int> ranks = orbit_evaluation_ranks(mu.parts(), points);
    std::vector<int> dims;
    for (std::size_t d = 0; d < ranks.size(); ++d)
        dims.push_back(ranks[d] - (d == 0 ? 0 : ranks[d - 1]));
    return dims;
}

std::vector<mpq_class> default_points(int count, bool alternate)
{
    std::vector<mpq_class> pts;
    mpq_class p = 1;
    for (int i = 0; i < count; ++i) {
        pts.push_back(alternate ? p : mpq_class(i + 1));
        p *= 3;
    }
    return pts;
}

}  // namespace kostka
