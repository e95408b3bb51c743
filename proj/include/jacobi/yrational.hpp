#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"
#include "ylaurent.hpp"

namespace jacobi {

namespace detail {

// Dense polynomial in t = y^(1/2), lowest coefficient first.
using DensePoly = std::vector<Rat>;

inline void trim(DensePoly &p)
{
    while (!p.empty() && is_zero(p.back()))
        p.pop_back();
}

// Requires p.lowest() == 0 when p is nonzero.
inline DensePoly to_dense(const YLaurent &p)
{
    DensePoly d;
    if (p.is_zero())
        return d;
    d.resize(static_cast<std::size_t>(p.highest() - p.lowest() + 1));
    for (const auto &[e, c] : p.terms())
        d[static_cast<std::size_t>(e - p.lowest())] = c;
    return d;
}

inline YLaurent from_dense(const DensePoly &d, int shift = 0)
{
    std::vector<YLaurent::Term> ts;
    for (std::size_t i = 0; i < d.size(); ++i)
        if (!is_zero(d[i]))
            ts.emplace_back(static_cast<int>(i) + shift, d[i]);
    return YLaurent::from_terms(std::move(ts));
}

inline DensePoly poly_rem(DensePoly a, const DensePoly &b)
{
    const std::size_t db = b.size() - 1;
    const Rat lead_inv = inverse(b.back());
    Rat f;
    while (!a.empty() && a.size() - 1 >= db) {
        f = a.back() * lead_inv;
        const std::size_t off = a.size() - 1 - db;
        for (std::size_t i = 0; i <= db; ++i)
            a[off + i] -= f * b[i];
        a.pop_back();
        trim(a);
    }
    return a;
}

inline DensePoly make_monic(DensePoly p)
{
    if (p.empty())
        return p;
    const Rat inv = inverse(p.back());
    for (auto &c : p)
        c *= inv;
    return p;
}

inline DensePoly poly_gcd(DensePoly a, DensePoly b)
{
    trim(a);
    trim(b);
    while (!b.empty()) {
        DensePoly r = make_monic(poly_rem(std::move(a), b));
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(std::move(a));
}

// Positive rational c with p/c primitive integral.
inline Rat content(const YLaurent &p)
{
    Int g = 0, l = 1;
    for (const auto &[e, c] : p.terms()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    }
    Rat r(g, l);
    r.canonicalize();
    return r;
}

} // namespace detail

/// Quotient of two Laurent polynomials in y^(1/2), kept in a canonical form.
///
/// Canonical form: the denominator is a primitive integral polynomial with a
/// positive nonzero constant term, and it shares no factor with the numerator.
/// Equality is therefore a plain comparison of the two parts.
class YRational {
public:
    YRational() : den_(1) {}
    YRational(const Rat &c) : num_(c), den_(1) {}
    YRational(long c) : YRational(Rat(c)) {}
    YRational(const YLaurent &p) : num_(p), den_(1) {}
    YRational(YLaurent num, YLaurent den) : num_(std::move(num)), den_(std::move(den))
    {
        if (den_.is_zero())
            throw math_error("YRational with zero denominator");
        canonicalize();
    }

    const YLaurent &num() const { return num_; }
    const YLaurent &den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_laurent() const { return den_.is_constant(); }

    YLaurent to_laurent() const
    {
        if (!is_laurent())
            throw math_error("rational function " + to_string() + " has a pole");
        return num_;
    }

    friend YRational operator+(const YRational &a, const YRational &b)
    {
        if (a.is_zero())
            return b;
        if (b.is_zero())
            return a;
        if (a.den_ == b.den_) {
            if (a.den_.is_constant())
                return YRational(a.num_ + b.num_, Unchecked{});
            return YRational(a.num_ + b.num_, a.den_);
        }
        return YRational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend YRational operator-(const YRational &a) { return YRational(-a.num_, a.den_, Unchecked{}); }
    friend YRational operator-(const YRational &a, const YRational &b) { return a + (-b); }
    friend YRational operator*(const YRational &a, const YRational &b)
    {
        if (a.is_zero() || b.is_zero())
            return {};
        if (a.den_.is_constant() && b.den_.is_constant())
            return YRational(a.num_ * b.num_, Unchecked{});
        return YRational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend YRational operator*(const YRational &a, const Rat &c)
    {
        if (jacobi::is_zero(c))
            return {};
        return YRational(a.num_ * c, a.den_, Unchecked{});
    }
    friend YRational operator*(const Rat &c, const YRational &a) { return a * c; }
    YRational &operator+=(const YRational &o) { return *this = *this + o; }
    YRational &operator-=(const YRational &o) { return *this = *this - o; }
    YRational &operator*=(const YRational &o) { return *this = *this * o; }

    friend bool operator==(const YRational &a, const YRational &b)
    {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    YRational inverse() const
    {
        if (is_zero())
            throw math_error("inverse of zero rational function");
        return YRational(den_, num_);
    }

    /// The derivation y d/dy, by the quotient rule.
    YRational y_ddy() const
    {
        if (den_.is_constant())
            return YRational(num_.y_ddy(), Unchecked{});
        return YRational(num_.y_ddy() * den_ - num_ * den_.y_ddy(), den_ * den_);
    }

    YRational power_substituted(int h) const
    {
        return YRational(num_.power_substituted(h), den_.power_substituted(h));
    }

    std::string to_string() const
    {
        if (den_.is_constant())
            return num_.to_string();
        return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
    }

private:
    struct Unchecked {};
    // Denominator 1 (or an already canonical denominator) is kept as is.
    YRational(YLaurent num, Unchecked) : num_(std::move(num)), den_(1) {}
    YRational(YLaurent num, YLaurent den, Unchecked) : num_(std::move(num)), den_(std::move(den))
    {
        if (num_.is_zero())
            den_ = YLaurent(1);
    }

    void canonicalize()
    {
        if (num_.is_zero()) {
            den_ = YLaurent(1);
            return;
        }
        // Move monomial factors of the denominator into the numerator.
        const int s = den_.lowest();
        if (s != 0) {
            num_ = num_.shifted(-s);
            den_ = den_.shifted(-s);
        }
        if (!den_.is_constant()) {
            const int ns = num_.lowest();
            auto g = detail::poly_gcd(detail::to_dense(num_.shifted(-ns)), detail::to_dense(den_));
            if (g.size() > 1) {
                const YLaurent gl = detail::from_dense(g);
                num_ = divide_exact(num_, gl);
                den_ = divide_exact(den_, gl);
                const int s2 = den_.lowest();
                if (s2 != 0) {
                    num_ = num_.shifted(-s2);
                    den_ = den_.shifted(-s2);
                }
            }
        }
        Rat c = detail::content(den_);
        if (sgn(den_.terms().front().second) < 0)
            c = -c;
        if (c != 1) {
            const Rat ci = jacobi::inverse(c);
            num_ = num_ * ci;
            den_ = den_ * ci;
        }
    }

    YLaurent num_;
    YLaurent den_;
};

inline bool is_zero(const YRational &x) { return x.is_zero(); }
inline bool is_unit(const YRational &x) { return !x.is_zero(); }
inline YRational inverse(const YRational &x) { return x.inverse(); }

} // namespace jacobi
