#include "kostka/multipoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace kostka {

Monomial::Monomial(const std::vector<int>& exponents)
{
    if (exponents.size() > static_cast<std::size_t>(kMaxVariables))
        throw std::invalid_argument("at most 8 variables are supported");
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        if (exponents[i] < 0 || exponents[i] > 255)
            throw std::invalid_argument("monomial exponent out of range");
        bits_ |= static_cast<std::uint64_t>(exponents[i]) << shift(static_cast<int>(i));
    }
}

Monomial Monomial::variable(int i)
{
    Monomial m;
    m.bits_ = std::uint64_t{1} << shift(i);
    return m;
}

int Monomial::degree() const
{
    int d = 0;
    for (int i = 0; i < kMaxVariables; ++i)
        d += exponent(i);
    return d;
}

std::vector<int> Monomial::exponents(int nvars) const
{
    std::vector<int> e(nvars);
    for (int i = 0; i < nvars; ++i)
        e[i] = exponent(i);
    return e;
}

Monomial Monomial::times_variable(int i) const
{
    if (exponent(i) == 255)
        throw std::overflow_error("monomial exponent overflow");
    Monomial m(*this);
    m.bits_ += std::uint64_t{1} << shift(i);
    return m;
}

Monomial Monomial::divided_by_variable(int i) const
{
    if (exponent(i) == 0)
        throw std::logic_error("monomial not divisible by variable");
    Monomial m(*this);
    m.bits_ -= std::uint64_t{1} << shift(i);
    return m;
}

Monomial Monomial::operator*(const Monomial& o) const
{
    Monomial m;
    for (int i = 0; i < kMaxVariables; ++i) {
        const int e = exponent(i) + o.exponent(i);
        if (e > 255)
            throw std::overflow_error("monomial exponent overflow");
        m.bits_ |= static_cast<std::uint64_t>(e) << shift(i);
    }
    return m;
}

int Monomial::first_variable() const
{
    for (int i = 0; i < kMaxVariables; ++i)
        if (exponent(i) > 0)
            return i;
    return -1;
}

Monomial Monomial::permuted(const Permutation& sigma) const
{
    Monomial m;
    for (int i = 0; i < sigma.size(); ++i)
        m.bits_ |= static_cast<std::uint64_t>(exponent(i)) << shift(sigma(i));
    return m;
}

std::string Monomial::to_string(int nvars) const
{
    std::ostringstream os;
    bool any = false;
    for (int i = 0; i < nvars; ++i) {
        const int e = exponent(i);
        if (e == 0)
            continue;
        if (any)
            os << "*";
        os << "z" << (i + 1);
        if (e > 1)
            os << "^" << e;
        any = true;
    }
    return any ? os.str() : "1";
}

std::vector<Monomial> monomials_of_degree(int nvars, int d)
{
    std::vector<Monomial> out;
    for (const Composition& c : compositions_of(d, nvars))
        out.emplace_back(c);
    return out;
}

std::int64_t monomial_count(int nvars, int d)
{
    if (nvars == 0)
        return d == 0 ? 1 : 0;
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), d + nvars - 1, nvars - 1);
    return c.get_si();
}

// ---------------------------------------------------------------------------

MultiPoly::MultiPoly(int nvars) : nvars_(nvars)
{
    if (nvars < 0 || nvars > kMaxVariables)
        throw std::invalid_argument("number of variables must be between 0 and 8");
}

MultiPoly MultiPoly::constant(int nvars, const mpq_class& c)
{
    MultiPoly p(nvars);
    p.add_term(Monomial{}, c);
    return p;
}

MultiPoly MultiPoly::variable(int nvars, int i)
{
    if (i < 0 || i >= nvars)
        throw std::invalid_argument("variable index out of range");
    return term(nvars, Monomial::variable(i));
}

MultiPoly MultiPoly::term(int nvars, const Monomial& m, const mpq_class& c)
{
    MultiPoly p(nvars);
    p.add_term(m, c);
    return p;
}

void MultiPoly::add_term(const Monomial& m, const mpq_class& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

mpq_class MultiPoly::coeff(const Monomial& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? mpq_class(0) : it->second;
}

int MultiPoly::homogeneous_degree() const
{
    if (terms_.empty())
        return -1;
    const int d = terms_.begin()->first.degree();
    for (const auto& [m, c] : terms_)
        if (m.degree() != d)
            return -1;
    return d;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o)
{
    if (o.nvars_ != nvars_)
        throw std::invalid_argument("polynomials in different numbers of variables");
    for (const auto& [m, c] : o.terms_)
        add_term(m, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o)
{
    if (o.nvars_ != nvars_)
        throw std::invalid_argument("polynomials in different numbers of variables");
    for (const auto& [m, c] : o.terms_)
        add_term(m, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b)
{
    if (a.nvars_ != b.nvars_)
        throw std::invalid_argument("polynomials in different numbers of variables");
    MultiPoly r(a.nvars_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_)
            r.add_term(ma * mb, ca * cb);
    return r;
}

MultiPoly MultiPoly::scaled(const mpq_class& c) const
{
    MultiPoly r(nvars_);
    if (c == 0)
        return r;
    for (const auto& [m, v] : terms_)
        r.terms_.emplace(m, v * c);
    return r;
}

MultiPoly MultiPoly::times_monomial(const Monomial& mono) const
{
    MultiPoly r(nvars_);
    for (const auto& [m, v] : terms_)
        r.terms_.emplace(m * mono, v);
    return r;
}

MultiPoly MultiPoly::normalized() const
{
    if (terms_.empty())
        return *this;
    return scaled(1 / terms_.rbegin()->second);
}

mpq_class MultiPoly::evaluate(const std::vector<mpq_class>& point) const
{
    if (static_cast<int>(point.size()) != nvars_)
        throw std::invalid_argument("evaluation point has wrong dimension");
    mpq_class total = 0;
    for (const auto& [m, c] : terms_) {
        mpq_class v = c;
        for (int i = 0; i < nvars_; ++i)
            for (int e = 0; e < m.exponent(i); ++e)
                v *= point[i];
        total += v;
    }
    return total;
}

bool MultiPoly::operator<(const MultiPoly& o) const
{
    if (nvars_ != o.nvars_)
        return nvars_ < o.nvars_;
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    for (; a != terms_.end() && b != o.terms_.end(); ++a, ++b) {
        if (!(a->first == b->first))
            return a->first < b->first;
        if (a->second != b->second)
            return a->second < b->second;
    }
    return a == terms_.end() && b != o.terms_.end();
}

std::string MultiPoly::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const mpq_class& c = it->second;
        const mpq_class mag = abs(c);
        os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
        first = false;
        const bool unit = (it->first == Monomial{});
        if (mag != 1 || unit) {
            os << mag.get_str();
            if (!unit)
                os << "*";
        }
        if (!unit)
            os << it->first.to_string(nvars_);
    }
    return os.str();
}

MultiPoly elementary_symmetric(int nvars, int m, const std::vector<int>& vars)
{
    const int k = static_cast<int>(vars.size());
    if (m < 0 || m > k)
        throw std::invalid_argument("elementary_symmetric: degree " + std::to_string(m) + " exceeds " +
                                    std::to_string(k) + " variables");
    for (int v : vars)
        if (v < 0 || v >= nvars)
            throw std::invalid_argument("elementary_symmetric: variable index out of range");
    MultiPoly p(nvars);
    std::vector<int> pick;
    auto rec = [&](auto&& self, int from) -> void {
        if (static_cast<int>(pick.size()) == m) {
            std::vector<int> e(nvars, 0);
            for (int i : pick)
                e[vars[i]] += 1;
            p.add_term(Monomial(e), 1);
            return;
        }
        for (int i = from; i < k; ++i) {
            pick.push_back(i);
            self(self, i + 1);
            pick.pop_back();
        }
    };
    rec(rec, 0);
    return p;
}

MultiPoly power_sum(int a, int nvars)
{
    if (a < 1)
        throw std::invalid_argument("power_sum: exponent must be positive");
    MultiPoly p(nvars);
    for (int i = 0; i < nvars; ++i) {
        std::vector<int> e(nvars, 0);
        e[i] = a;
        p.add_term(Monomial(e), 1);
    }
    return p;
}

MultiPoly permute_poly(const Permutation& sigma, const MultiPoly& p)
{
    if (sigma.size() != p.nvars())
        throw std::invalid_argument("permutation and polynomial sizes differ");
    MultiPoly r(p.nvars());
    for (const auto& [m, c] : p.terms())
        r.add_term(m.permuted(sigma), c);
    return r;
}

}  // namespace kostka
