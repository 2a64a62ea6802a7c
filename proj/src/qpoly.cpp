#include "kostka/qpoly.hpp"

#include "kostka/errors.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace kostka {

QPoly::QPoly(long constant)
{
    if (constant != 0)
        terms_.emplace(0, mpz_class(constant));
}

QPoly QPoly::monomial(Exponent e, const mpz_class& c)
{
    QPoly p;
    p.add_term(e, c);
    return p;
}

QPoly QPoly::from_coeffs(const std::vector<long>& coeffs, Exponent shift)
{
    QPoly p;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        p.add_term(shift + static_cast<Exponent>(i), mpz_class(coeffs[i]));
    return p;
}

mpz_class QPoly::coeff(Exponent e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? mpz_class(0) : it->second;
}

void QPoly::add_term(Exponent e, const mpz_class& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

QPoly::Exponent QPoly::min_degree() const
{
    if (terms_.empty())
        throw std::logic_error("min_degree of zero polynomial");
    return terms_.begin()->first;
}

QPoly::Exponent QPoly::max_degree() const
{
    if (terms_.empty())
        throw std::logic_error("max_degree of zero polynomial");
    return terms_.rbegin()->first;
}

std::vector<mpz_class> QPoly::coeff_list(Exponent lo, Exponent hi) const
{
    std::vector<mpz_class> out;
    for (Exponent e = lo; e <= hi; ++e)
        out.push_back(coeff(e));
    return out;
}

std::vector<mpz_class> QPoly::coeff_list() const
{
    if (is_zero())
        return {};
    if (min_degree() < 0)
        throw std::logic_error("coeff_list: negative exponents present");
    return coeff_list(0, max_degree());
}

mpz_class QPoly::at_one() const
{
    mpz_class s = 0;
    for (const auto& [e, c] : terms_)
        s += c;
    return s;
}

bool QPoly::nonnegative_coefficients() const
{
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second > 0; });
}

QPoly QPoly::invert_variable() const
{
    QPoly r;
    for (const auto& [e, c] : terms_)
        r.terms_.emplace(-e, c);
    return r;
}

QPoly QPoly::shifted(Exponent k) const
{
    QPoly r;
    for (const auto& [e, c] : terms_)
        r.terms_.emplace(e + k, c);
    return r;
}

QPoly& QPoly::operator+=(const QPoly& o)
{
    for (const auto& [e, c] : o.terms_)
        add_term(e, c);
    return *this;
}

QPoly& QPoly::operator-=(const QPoly& o)
{
    for (const auto& [e, c] : o.terms_)
        add_term(e, -c);
    return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b)
{
    QPoly r;
    for (const auto& [ea, ca] : a.terms())
        for (const auto& [eb, cb] : b.terms())
            r.add_term(ea + eb, ca * cb);
    return r;
}

QPoly& QPoly::operator*=(const QPoly& o) { return *this = *this * o; }

QPoly QPoly::operator-() const
{
    QPoly r;
    for (const auto& [e, c] : terms_)
        r.terms_.emplace(e, -c);
    return r;
}

std::string QPoly::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        mpz_class mag = abs(c);
        if (first) {
            if (c < 0)
                os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (e == 0) {
            os << mag.get_str();
            continue;
        }
        if (mag != 1)
            os << mag.get_str() << "*";
        os << "q";
        if (e != 1)
            os << "^" << e;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const QPoly& p) { return os << p.to_string(); }

QDivision divide(const QPoly& numerator, const QPoly& divisor)
{
    if (divisor.is_zero())
        throw std::invalid_argument("division by the zero polynomial");
    if (numerator.has_negative_exponents() || divisor.has_negative_exponents())
        throw std::invalid_argument("divide: Laurent polynomials are not supported");
    const auto dlead_exp = divisor.max_degree();
    const mpz_class dlead = divisor.coeff(dlead_exp);
    if (abs(dlead) != 1)
        throw std::invalid_argument("divide: divisor must be monic up to sign");

    QDivision out;
    QPoly rem = numerator;
    while (!rem.is_zero() && rem.max_degree() >= dlead_exp) {
        const auto e = rem.max_degree() - dlead_exp;
        const mpz_class c = rem.coeff(rem.max_degree()) * dlead;  // dlead^-1 == dlead for +-1
        out.quotient.add_term(e, c);
        for (const auto& [de, dc] : divisor.terms())
            rem.add_term(de + e, -c * dc);
    }
    out.remainder = std::move(rem);
    return out;
}

QPoly divide_exact(const QPoly& numerator, const QPoly& divisor, const std::string& context)
{
    QDivision d = divide(numerator, divisor);
    if (!d.remainder.is_zero())
        throw CheckFailure(context + ": division left remainder " + d.remainder.to_string());
    return d.quotient;
}

QPoly one_minus_q_power(int k)
{
    QPoly p(1);
    p.add_term(k, -1);
    return p;
}

QPoly q_pochhammer(int m)
{
    if (m < 0)
        throw std::invalid_argument("q_pochhammer: negative index");
    QPoly p(1);
    for (int i = 1; i <= m; ++i)
        p *= one_minus_q_power(i);
    return p;
}

// ---------------------------------------------------------------------------

QSeries::QSeries(int order, QPoly known) : order_(order)
{
    for (const auto& [e, c] : known.terms())
        if (e <= order)
            poly_.add_term(e, c);
}

QSeries QSeries::from_poly(const QPoly& p, int order) { return QSeries(order, p); }

QSeries QSeries::inverse_euler(int k, int order)
{
    if (k < 0)
        throw std::invalid_argument("inverse_euler: negative power");
    // dense coefficients of prod_{j>=1} 1/(1-q^j), applied k times
    std::vector<mpz_class> c(std::max(order, 0) + 1, 0);
    if (order < 0)
        return QSeries(order, QPoly{});
    c[0] = 1;
    for (int rep = 0; rep < k; ++rep)
        for (int j = 1; j <= order; ++j)
            for (int e = j; e <= order; ++e)
                c[e] += c[e - j];
    QPoly p;
    for (int e = 0; e <= order; ++e)
        p.add_term(e, c[e]);
    return QSeries(order, p);
}

mpz_class QSeries::coeff(QPoly::Exponent e) const
{
    if (e > order_)
        throw std::out_of_range("QSeries: coefficient beyond truncation order");
    return poly_.coeff(e);
}

std::vector<mpz_class> QSeries::coeff_list(QPoly::Exponent lo) const { return poly_.coeff_list(lo, order_); }

QSeries operator*(const QSeries& a, const QSeries& b)
{
    // A term q^e of a is known up to e <= Da; multiplied by the lowest term
    // of b it stays exact only up to Da + val(b).
    auto valuation = [](const QSeries& s) -> QPoly::Exponent {
        return s.poly_.is_zero() ? s.order_ + 1 : std::min<QPoly::Exponent>(s.poly_.min_degree(), 0);
    };
    const auto order = std::min(a.order_ + valuation(b), b.order_ + valuation(a));
    return QSeries(static_cast<int>(order), a.poly_ * b.poly_);
}

std::string QSeries::to_string() const { return poly_.to_string() + " + O(q^" + std::to_string(order_ + 1) + ")"; }

}  // namespace kostka
