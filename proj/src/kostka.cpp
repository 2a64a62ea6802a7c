#include "kostka/kostka.hpp"

#include "kostka/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace kostka {

namespace {

void check_sizes(const Partition& lambda, const Composition& nu)
{
    const int total = std::accumulate(nu.begin(), nu.end(), 0);
    if (total != lambda.size())
        throw std::invalid_argument("shape " + lambda.to_string() + " and content of size " + std::to_string(total) +
                                    " differ in size");
    for (int x : nu)
        if (x < 0)
            throw std::invalid_argument("content entries must be nonnegative");
}

/* Calls emit(new_shape) for every way of adding a horizontal strip of k
 * cells to `shape` that stays inside `outer`. */
template <typename F>
void horizontal_strips(const std::vector<int>& shape, const std::vector<int>& outer, int k, F&& emit)
{
    std::vector<int> next(shape);
    const int rows = static_cast<int>(outer.size());
    auto rec = [&](auto&& self, int row, int left) -> void {
        if (left == 0) {
            emit(next);
            return;
        }
        if (row == rows)
            return;
        // cells in row `row` may not pass the old length of the row above
        const int cap = std::min(outer[row], row == 0 ? outer[0] : shape[row - 1]);
        const int room = cap - shape[row];
        for (int add = std::min(room, left); add >= 0; --add) {
            next[row] = shape[row] + add;
            self(self, row + 1, left - add);
        }
        next[row] = shape[row];
    };
    rec(rec, 0, k);
}

}  // namespace

std::vector<Tableau> semistandard_tableaux(const Partition& shape, const Composition& nu)
{
    check_sizes(shape, nu);
    const std::vector<int>& outer = shape.parts();
    std::vector<Tableau> out;
    Tableau cur(outer.size());
    std::vector<int> lengths(outer.size(), 0);

    auto rec = [&](auto&& self, std::size_t letter) -> void {
        if (letter == nu.size()) {
            out.push_back(cur);
            return;
        }
        const std::vector<int> before = lengths;
        horizontal_strips(before, outer, nu[letter], [&](const std::vector<int>& after) {
            for (std::size_t r = 0; r < after.size(); ++r)
                for (int c = before[r]; c < after[r]; ++c)
                    cur[r].push_back(static_cast<int>(letter) + 1);
            lengths = after;
            self(self, letter + 1);
            lengths = before;
            for (std::size_t r = 0; r < after.size(); ++r)
                cur[r].resize(before[r]);
        });
    };
    rec(rec, 0);
    return out;
}

std::int64_t ssyt_count(const Partition& lambda, const Composition& nu)
{
    check_sizes(lambda, nu);
    const std::vector<int>& outer = lambda.parts();
    std::map<std::vector<int>, std::int64_t> layer{{std::vector<int>(outer.size(), 0), 1}};
    for (int k : nu) {
        std::map<std::vector<int>, std::int64_t> next;
        for (const auto& [shape, count] : layer)
            horizontal_strips(shape, outer, k, [&](const std::vector<int>& after) { next[after] += count; });
        layer = std::move(next);
    }
    auto it = layer.find(outer);
    return it == layer.end() ? 0 : it->second;
}

std::int64_t standard_tableaux_count(const Partition& shape)
{
    return ssyt_count(shape, Composition(shape.size(), 1));
}

std::vector<int> reading_word(const Tableau& t)
{
    std::vector<int> w;
    for (auto row = t.rbegin(); row != t.rend(); ++row)
        w.insert(w.end(), row->begin(), row->end());
    return w;
}

std::int64_t charge(const std::vector<int>& word)
{
    std::vector<int> w(word);
    std::int64_t total = 0;
    while (!w.empty()) {
        const int top = *std::max_element(w.begin(), w.end());
        const int n = static_cast<int>(w.size());
        std::vector<bool> taken(n, false);
        int pos = n;  // scanning starts just right of the end
        int index = 0;
        for (int letter = 1; letter <= top; ++letter) {
            bool wrapped = false;
            int found = -1;
            for (int step = 1; step <= n; ++step) {
                int p = pos - step;
                if (p < 0) {
                    p += n;
                    wrapped = true;
                }
                if (!taken[p] && w[p] == letter) {
                    found = p;
                    break;
                }
            }
            if (found < 0)
                throw std::invalid_argument("charge: word content is not a partition");
            if (letter > 1 && wrapped)
                ++index;
            total += index;
            taken[found] = true;
            pos = found;
        }
        std::vector<int> rest;
        for (int p = 0; p < n; ++p)
            if (!taken[p])
                rest.push_back(w[p]);
        w.swap(rest);
    }
    return total;
}

QPoly charge_kostka(const Partition& lambda, const Partition& mu)
{
    QPoly k;
    for (const Tableau& t : semistandard_tableaux(lambda, mu.parts()))
        k.add_term(charge(reading_word(t)), 1);
    return k;
}

QPoly kostka_hook(const Partition& mu)
{
    QPoly denom(1);
    for (int h : hooks(mu))
        denom *= one_minus_q_power(h);
    QPoly ratio = divide_exact(q_pochhammer(mu.size()), denom, "hook formula for " + mu.to_string());
    return ratio.shifted(nstat(conjugate(mu)));
}

QPoly tilde_transform(const QPoly& k, const Partition& mu)
{
    QPoly out = k.invert_variable().shifted(nstat(mu));
    if (out.has_negative_exponents())
        throw CheckFailure("tilde transform of " + k.to_string() + " for " + mu.to_string() +
                           " has negative exponent: " + out.to_string());
    return out;
}

std::int64_t sln_irrep_dim(const Partition& lambda, int n)
{
    if (n < 1)
        throw std::invalid_argument("sln_irrep_dim: n must be positive");
    const std::vector<int> l = lambda.padded(n);
    mpz_class num = 1, den = 1;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            num *= l[i] - l[j] + j - i;
            den *= j - i;
        }
    mpz_class q = num / den;
    if (q * den != num || !q.fits_slong_p())
        throw CheckFailure("Weyl dimension is not an integer for " + lambda.to_string());
    return q.get_si();
}

}  // namespace kostka
