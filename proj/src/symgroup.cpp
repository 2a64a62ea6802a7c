#include "kostka/symgroup.hpp"

#include "kostka/errors.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <stdexcept>

namespace kostka {

Permutation::Permutation(std::vector<int> image) : image_(std::move(image))
{
    std::vector<bool> seen(image_.size(), false);
    for (int x : image_) {
        if (x < 0 || x >= size() || seen[x])
            throw std::invalid_argument("not a permutation");
        seen[x] = true;
    }
}

Permutation Permutation::identity(int n)
{
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    return Permutation(std::move(img));
}

Permutation Permutation::of_cycle_type(const Partition& rho)
{
    std::vector<int> img(rho.size());
    int start = 0;
    for (int len : rho.parts()) {
        for (int k = 0; k < len; ++k)
            img[start + k] = start + (k + 1) % len;
        start += len;
    }
    return Permutation(std::move(img));
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles)
{
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    for (const auto& c : cycles)
        for (std::size_t k = 0; k < c.size(); ++k)
            img[c[k]] = c[(k + 1) % c.size()];
    return Permutation(std::move(img));
}

Partition Permutation::cycle_type() const
{
    std::vector<bool> seen(image_.size(), false);
    std::vector<int> lens;
    for (int i = 0; i < size(); ++i) {
        if (seen[i])
            continue;
        int len = 0;
        for (int j = i; !seen[j]; j = image_[j]) {
            seen[j] = true;
            ++len;
        }
        lens.push_back(len);
    }
    return Partition::from_composition(lens);
}

int Permutation::sign() const
{
    const Partition ct = cycle_type();
    return ((size() - ct.length()) % 2 == 0) ? 1 : -1;
}

Permutation Permutation::inverse() const
{
    std::vector<int> inv(image_.size());
    for (int i = 0; i < size(); ++i)
        inv[image_[i]] = i;
    return Permutation(std::move(inv));
}

Permutation operator*(const Permutation& a, const Permutation& b)
{
    if (a.size() != b.size())
        throw std::invalid_argument("permutation sizes differ");
    std::vector<int> img(a.size());
    for (int i = 0; i < a.size(); ++i)
        img[i] = a(b(i));
    return Permutation(std::move(img));
}

// ---------------------------------------------------------------------------

ClassFunction::ClassFunction(int n) : n_(n)
{
    for (const Partition& rho : partitions_of(n))
        values_.emplace(rho, 0);
}

const mpq_class& ClassFunction::at(const Partition& rho) const
{
    auto it = values_.find(rho);
    if (it == values_.end())
        throw std::invalid_argument("cycle type " + rho.to_string() + " is not a class of S_" + std::to_string(n_));
    return it->second;
}

void ClassFunction::set(const Partition& rho, mpq_class v)
{
    auto it = values_.find(rho);
    if (it == values_.end())
        throw std::invalid_argument("cycle type " + rho.to_string() + " is not a class of S_" + std::to_string(n_));
    it->second = std::move(v);
}

mpq_class ClassFunction::inner(const ClassFunction& other) const
{
    if (other.n_ != n_)
        throw std::invalid_argument("class functions on different groups");
    mpq_class s = 0;
    for (const auto& [rho, v] : values_)
        s += mpq_class(class_size(rho)) * v * other.at(rho);
    s /= mpq_class(factorial(n_));
    return s;
}

ClassFunction& ClassFunction::operator+=(const ClassFunction& o)
{
    if (o.n_ != n_)
        throw std::invalid_argument("class functions on different groups");
    for (auto& [rho, v] : values_)
        v += o.at(rho);
    return *this;
}

ClassFunction operator*(const ClassFunction& a, const ClassFunction& b)
{
    if (a.n_ != b.n_)
        throw std::invalid_argument("class functions on different groups");
    ClassFunction r(a.n_);
    for (auto& [rho, v] : r.values_)
        v = a.at(rho) * b.at(rho);
    return r;
}

ClassFunction ClassFunction::scaled(const mpq_class& c) const
{
    ClassFunction r(*this);
    for (auto& [rho, v] : r.values_)
        v *= c;
    return r;
}

// ---------------------------------------------------------------------------

std::int64_t class_size(const Partition& rho)
{
    std::int64_t z = 1;
    std::map<int, int> mult;
    for (int p : rho.parts())
        ++mult[p];
    for (const auto& [k, m] : mult) {
        for (int i = 0; i < m; ++i)
            z *= k;
        z *= factorial(m);
    }
    return factorial(rho.size()) / z;
}

namespace {

/* Beta-set of lambda with exactly `len` beads: lambda_i + len - i. */
std::vector<int> beta_set(const Partition& lambda, int len)
{
    std::vector<int> b(len);
    for (int i = 0; i < len; ++i)
        b[i] = lambda.part(i + 1) + len - 1 - i;
    return b;
}

Partition from_beta(std::vector<int> beads)
{
    std::sort(beads.begin(), beads.end(), std::greater<>());
    const int len = static_cast<int>(beads.size());
    std::vector<int> parts(len);
    for (int i = 0; i < len; ++i)
        parts[i] = beads[i] - (len - 1 - i);
    return Partition(std::move(parts));
}

std::int64_t mn_rec(const Partition& lambda, const std::vector<int>& rho_parts, std::size_t idx)
{
    if (idx == rho_parts.size())
        return lambda.empty() ? 1 : 0;
    const int r = rho_parts[idx];
    const int len = lambda.length();
    std::vector<int> beads = beta_set(lambda, len);
    std::int64_t total = 0;
    for (int i = 0; i < len; ++i) {
        const int target = beads[i] - r;
        if (target < 0 || std::find(beads.begin(), beads.end(), target) != beads.end())
            continue;
        // leg length = beads strictly between target and beads[i]
        int between = 0;
        for (int b : beads)
            between += (b > target && b < beads[i]);
        std::vector<int> moved(beads);
        moved[i] = target;
        const std::int64_t sub = mn_rec(from_beta(moved), rho_parts, idx + 1);
        total += (between % 2 == 0) ? sub : -sub;
    }
    return total;
}

struct CharacterMemo {
    std::shared_mutex mutex;
    std::map<std::pair<Partition, Partition>, std::int64_t> table;
};

CharacterMemo& character_memo()
{
    static CharacterMemo memo;
    return memo;
}

}  // namespace

std::int64_t irr_char(const Partition& lambda, const Partition& rho)
{
    if (lambda.size() != rho.size())
        throw std::invalid_argument("irr_char: " + lambda.to_string() + " and " + rho.to_string() +
                                    " are partitions of different sizes");
    auto& memo = character_memo();
    const auto key = std::make_pair(lambda, rho);
    {
        std::shared_lock lock(memo.mutex);
        auto it = memo.table.find(key);
        if (it != memo.table.end())
            return it->second;
    }
    const std::int64_t value = mn_rec(lambda, rho.parts(), 0);
    std::unique_lock lock(memo.mutex);
    memo.table.emplace(key, value);  // concurrent first-writers insert the same value
    return value;
}

ClassFunction irreducible_character(const Partition& lambda)
{
    ClassFunction f(lambda.size());
    for (const Partition& rho : partitions_of(lambda.size()))
        f.set(rho, irr_char(lambda, rho));
    return f;
}

ClassFunction sign_character(int n)
{
    ClassFunction f(n);
    for (const Partition& rho : partitions_of(n))
        f.set(rho, ((n - rho.length()) % 2 == 0) ? 1 : -1);
    return f;
}

std::map<Partition, mpq_class> decompose_class_function(const ClassFunction& f)
{
    std::map<Partition, mpq_class> out;
    for (const Partition& lambda : partitions_of(f.degree())) {
        mpq_class m = f.inner(irreducible_character(lambda));
        if (m != 0)
            out.emplace(lambda, m);
    }
    return out;
}

std::map<Partition, std::int64_t> decompose_character(const ClassFunction& f)
{
    std::map<Partition, std::int64_t> out;
    for (const auto& [lambda, m] : decompose_class_function(f)) {
        if (m.get_den() != 1 || m < 0 || !m.get_num().fits_slong_p())
            throw CheckFailure("multiplicity of W_" + lambda.to_string() + " is " + m.get_str() +
                               ", not a nonnegative integer");
        out.emplace(lambda, m.get_num().get_si());
    }
    return out;
}

}  // namespace kostka
