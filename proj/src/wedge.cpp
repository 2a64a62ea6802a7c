#include "kostka/wedge.hpp"

#include "kostka/errors.hpp"
#include "kostka/fusion.hpp"
#include "kostka/gp_ring.hpp"
#include "kostka/kostka.hpp"
#include "kostka/symgroup.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace kostka {

QPoly WedgeDecomposition::component(const Partition& mu) const
{
    auto it = components.find(mu);
    return it == components.end() ? QPoly{} : it->second;
}

std::map<Partition, QPoly> wedge_char(int N, int n)
{
    if (N < 0 || n < 1)
        throw std::invalid_argument("wedge_char: need N >= 0 and n >= 1");
    const std::int64_t top = static_cast<std::int64_t>(N) * (N - 1) / 2;
    std::map<Partition, QPoly> out;
    for (const Partition& mu : partitions_of(N, n)) {
        QPoly k = kostka_hook(mu).invert_variable();
        const QPoly via_conjugate = kostka_hook(conjugate(mu)).shifted(-top);
        if (!(k == via_conjugate))
            throw CheckFailure("q^-N(N-1)/2 K_{mu',1^N}(q) differs from K_{mu,1^N}(1/q) at mu = " + mu.to_string());
        out.emplace(mu, std::move(k));
    }
    return out;
}

std::int64_t fixed_words(const Partition& rho, const Composition& beta)
{
    // distribute the cycles among letters so that letter a receives total length beta[a]
    std::map<Composition, std::int64_t> ways{{Composition(beta.size(), 0), 1}};
    for (int len : rho.parts()) {
        std::map<Composition, std::int64_t> next;
        for (const auto& [used, w] : ways) {
            for (std::size_t a = 0; a < beta.size(); ++a) {
                if (used[a] + len > beta[a])
                    continue;
                Composition u = used;
                u[a] += len;
                next[u] += w;
            }
        }
        ways = std::move(next);
    }
    auto it = ways.find(beta);
    return it == ways.end() ? 0 : it->second;
}

std::map<Partition, QPoly> wedge_brute_force(int N, int n)
{
    const Partition ones = Partition::column(N);
    const auto chars = graded_quotient_character(N, cmu_generators(ones).generators, static_cast<int>(nstat(ones)));
    const std::vector<Partition> types = partitions_of(N);
    const mpq_class order = factorial(N);

    std::map<Partition, QPoly> out;
    for (int d = 0; d < static_cast<int>(chars.size()); ++d) {
        std::map<Composition, std::int64_t> weights;
        for (const Composition& beta : compositions_of(N, n)) {
            mpq_class m = 0;
            for (const Partition& rho : types) {
                const mpq_class sgn = (N - rho.length()) % 2 == 0 ? 1 : -1;
                m += class_size(rho) * sgn * fixed_words(rho, beta) * chars[d].at(rho);
            }
            m /= order;
            if (m.get_den() != 1)
                throw CheckFailure("fractional alternating multiplicity at degree " + std::to_string(d));
            if (m != 0)
                weights[beta] = m.get_num().get_si();
        }
        for (const auto& [mu, c] : peel_weights(std::move(weights), n))
            out[mu].add_term(-d, c);  // z -> 1/z negates degrees
    }
    return out;
}

WedgeDecomposition reduced_wedge_decompose(int N, int n)
{
    WedgeDecomposition w;
    w.N = N;
    w.n = n;
    w.character = wedge_char(N, n);
    w.brute_force = wedge_brute_force(N, n);
    for (const Partition& mu : partitions_of(N, n)) {
        const QPoly a = w.character.count(mu) ? w.character.at(mu) : QPoly{};
        const QPoly b = w.brute_force.count(mu) ? w.brute_force.at(mu) : QPoly{};
        if (!(a == b))
            throw CheckFailure("wedge routes disagree at mu = " + mu.to_string() + ": character " + a.to_string() +
                               ", brute force " + b.to_string());
    }
    for (const auto& [mu, p] : w.brute_force)
        if (mu.length() > n)
            throw CheckFailure("brute-force wedge produced a highest weight with too many rows");
    w.components = w.character;
    return w;
}

Partition wedge_ground_state(int i, int m, int n)
{
    std::vector<int> rows(m, n);
    if (i > 0)
        rows.push_back(i);
    return conjugate(Partition(rows));
}

std::map<Partition, QPoly> normalized_wedge_char(int i, int m, int n)
{
    if (n < 1 || m < 0 || i < 0 || i > n)
        throw std::invalid_argument("normalized_wedge_char: need 0 <= i <= n, m >= 0");
    if (i == n) {
        i = 0;
        ++m;
    }
    const int N = m * n + i;
    const Partition mu0 = wedge_ground_state(i, m, n);
    const std::int64_t shift = nstat(conjugate(mu0));
    std::map<Partition, QPoly> out;
    QPoly::Exponent top = 0;
    bool first = true;
    for (auto& [mu, k] : wedge_char(N, n)) {
        QPoly s = k.shifted(shift);
        if (!s.is_zero()) {
            top = first ? s.max_degree() : std::max(top, s.max_degree());
            first = false;
        }
        out.emplace(mu, std::move(s));
    }
    if (top != 0 || out.at(mu0).max_degree() != 0)
        throw CheckFailure("normalized wedge character does not peak at q^0 on the ground state " + mu0.to_string());
    return out;
}

QSeries winf_char(const Partition& mu, int n, int D)
{
    if (mu.length() > n)
        throw std::invalid_argument("winf_char: mu has more than n rows");
    const std::vector<int> p = mu.padded(n);
    QPoly num = QPoly::monomial(nstat(conjugate(mu)) + mu.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            num *= one_minus_q_power(p[i] - p[j] + j - i);
    const QSeries inv = QSeries::inverse_euler(n - 1, D);
    return QSeries(D, num * inv.poly());
}

StabilizationReport limit_stabilization(const Partition& mu_bar_in, int n, int i, int depth, int m_max)
{
    if (mu_bar_in.length() > n)
        throw std::invalid_argument("limit_stabilization: mu_bar has more than n rows");
    if (depth < 0)
        throw std::invalid_argument("limit_stabilization: negative depth");
    // full columns of height n only move the sequence index
    std::vector<int> rows = mu_bar_in.padded(n);
    const int base = rows.empty() ? 0 : rows.back();
    for (int& r : rows)
        r -= base;
    const Partition mu_bar(rows);

    StabilizationReport rep;
    rep.mu_bar = mu_bar;
    rep.n = n;
    rep.i = i;
    rep.depth = depth;
    const int excess = mu_bar.size() - i;
    if (i < 0 || i >= n || excess < 0 || excess % n != 0)
        throw std::invalid_argument("limit_stabilization: |mu_bar| - i must be a nonnegative multiple of n");
    const int m_bar = excess / n;

    for (int m = m_bar; m <= m_max; ++m) {
        std::vector<int> mu = mu_bar.padded(n);
        for (int& r : mu)
            r += m - m_bar;
        const Partition shape(mu);
        const std::int64_t norm = nstat(conjugate(wedge_ground_state(i, m, n)));
        const QPoly f = kostka_hook(shape).shifted(-norm);
        rep.ms.push_back(m);
        rep.shapes.push_back(shape);
        rep.leading.push_back(f.min_degree());
        rep.windows.push_back(f.coeff_list(f.min_degree(), f.min_degree() + depth));
    }

    for (int k = static_cast<int>(rep.ms.size()) - 2; k >= 0; --k) {
        if (rep.windows[k] != rep.windows.back() || rep.leading[k] != rep.leading.back())
            break;
        rep.stable_from = rep.ms[k];
    }
    if (!rep.stable_from)
        return rep;

    rep.limit_window = rep.windows.back();
    const QPoly::Exponent chi_lead = nstat(conjugate(mu_bar)) + mu_bar.size();
    const QSeries chi = winf_char(mu_bar, n, static_cast<int>(chi_lead) + depth);
    rep.winf_window = chi.coeff_list(chi_lead);
    rep.shift = chi_lead - rep.leading.back();
    rep.matches_winf = rep.winf_window == rep.limit_window;
    return rep;
}

HookFactorizationReport hook_factorization_check(const Partition& mu, int n)
{
    if (mu.length() > n)
        throw std::invalid_argument("hook_factorization_check: mu has more than n rows");
    const std::vector<int> p = mu.padded(n);
    HookFactorizationReport rep;
    rep.mu = mu;
    rep.n = n;
    rep.hook_product = 1;
    for (int h : hooks(mu))
        rep.hook_product *= one_minus_q_power(h);

    QPoly denom = 1;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            denom *= one_minus_q_power(p[i] - p[j] + j - i);
    // compare hook * denom with the Pochhammer product to avoid division
    auto holds = [&](const std::function<int(int)>& exponent) {
        QPoly num = 1;
        for (int i = 0; i < n; ++i)
            num *= q_pochhammer(exponent(i));
        return rep.hook_product * denom == num;
    };
    // rows are 1-based in the formulas: row r = i + 1
    rep.corrected_holds = holds([&](int i) { return p[i] + n - (i + 1); });
    rep.printed_holds = holds([&](int i) { return p[i] + (i + 1); });
    if (!rep.corrected_holds)
        throw CheckFailure("hook product factorization fails for mu = " + mu.to_string() + ", n = " +
                           std::to_string(n));
    return rep;
}

}  // namespace kostka
