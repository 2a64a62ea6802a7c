#include "kostka/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace kostka {

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    while (!parts_.empty() && parts_.back() == 0)
        parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw std::invalid_argument("partition parts must be positive: " + to_string());
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing: " + to_string());
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_composition(const Composition& c)
{
    std::vector<int> parts;
    for (int x : c) {
        if (x < 0)
            throw std::invalid_argument("composition entries must be nonnegative");
        if (x > 0)
            parts.push_back(x);
    }
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

Partition Partition::parse(std::string_view text)
{
    std::vector<int> parts;
    std::string token;
    auto flush = [&](bool final_token) {
        if (token.empty()) {
            if (!final_token || !parts.empty())
                throw std::invalid_argument("empty part in partition \"" + std::string(text) + "\"");
            return;
        }
        int value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc() || ptr != token.data() + token.size())
            throw std::invalid_argument("bad part \"" + token + "\" in partition");
        parts.push_back(value);
        token.clear();
    };
    bool any = false;
    for (char ch : text) {
        if (ch == ' ' || ch == '\t')
            continue;
        any = true;
        if (ch == ',')
            flush(false);
        else
            token.push_back(ch);
    }
    if (any)
        flush(true);
    for (int p : parts)
        if (p <= 0)
            throw std::invalid_argument("partition parts must be positive");
    if (!std::is_sorted(parts.begin(), parts.end(), std::greater<>()))
        throw std::invalid_argument("partition parts must be weakly decreasing");
    return Partition(std::move(parts));
}

std::vector<int> Partition::padded(int n) const
{
    if (n < length())
        throw std::invalid_argument("partition " + to_string() + " has more than " + std::to_string(n) + " parts");
    std::vector<int> out(parts_);
    out.resize(n, 0);
    return out;
}

std::string Partition::to_string() const
{
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(parts_[i]);
    }
    return s;
}

std::ostream& operator<<(std::ostream& os, const Partition& p)
{
    return os << '(' << p.to_string() << ')';
}

namespace {

void partitions_rec(int remaining, int max_part, int max_len, std::vector<int>& cur, std::vector<Partition>& out)
{
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    if (static_cast<int>(cur.size()) == max_len)
        return;
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(remaining - p, p, max_len, cur, out);
        cur.pop_back();
    }
}

void compositions_rec(int remaining, int slots, Composition& cur, std::vector<Composition>& out)
{
    if (slots == 1) {
        cur.push_back(remaining);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int x = remaining; x >= 0; --x) {
        cur.push_back(x);
        compositions_rec(remaining - x, slots - 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n, int max_len)
{
    if (n < 0)
        throw std::invalid_argument("partitions_of: negative size");
    std::vector<Partition> out;
    std::vector<int> cur;
    partitions_rec(n, n, max_len, cur, out);
    return out;
}

std::vector<Partition> partitions_of(int n) { return partitions_of(n, std::max(n, 0)); }

std::vector<Composition> compositions_of(int n, int k)
{
    std::vector<Composition> out;
    if (k <= 0) {
        if (n == 0)
            out.emplace_back();
        return out;
    }
    Composition cur;
    compositions_rec(n, k, cur, out);
    return out;
}

Partition conjugate(const Partition& mu)
{
    std::vector<int> out;
    if (mu.empty())
        return {};
    out.reserve(mu.part(1));
    for (int j = 1; j <= mu.part(1); ++j) {
        int count = 0;
        for (int p : mu.parts())
            count += (p >= j);
        out.push_back(count);
    }
    return Partition(std::move(out));
}

std::int64_t nstat(const Partition& mu)
{
    std::int64_t s = 0;
    for (int i = 0; i < mu.length(); ++i)
        s += static_cast<std::int64_t>(i) * mu[i];
    return s;
}

std::vector<int> hooks(const Partition& mu)
{
    const Partition conj = conjugate(mu);
    std::vector<int> out;
    out.reserve(mu.size());
    for (int i = 1; i <= mu.length(); ++i)
        for (int j = 1; j <= mu.part(i); ++j)
            out.push_back(mu.part(i) - j + conj.part(j) - i + 1);
    return out;
}

bool dominance_leq(const Partition& nu, const Partition& lambda)
{
    if (nu.size() != lambda.size())
        throw std::invalid_argument("dominance_leq: sizes differ (" + nu.to_string() + " vs " + lambda.to_string() + ")");
    int a = 0, b = 0;
    const int len = std::max(nu.length(), lambda.length());
    for (int i = 1; i <= len; ++i) {
        a += nu.part(i);
        b += lambda.part(i);
        if (a > b)
            return false;
    }
    return true;
}

std::int64_t factorial(int n)
{
    if (n < 0 || n > 20)
        throw std::invalid_argument("factorial out of int64 range");
    std::int64_t f = 1;
    for (int i = 2; i <= n; ++i)
        f *= i;
    return f;
}

std::int64_t multinomial(const Partition& mu)
{
    std::int64_t r = factorial(mu.size());
    for (int p : mu.parts())
        r /= factorial(p);
    return r;
}

}  // namespace kostka
