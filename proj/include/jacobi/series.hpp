#pragma once

#include <algorithm>
#include <cmath>
#include <concepts>
#include <map>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "cyclotomic.hpp"
#include "rational.hpp"
#include "ylaurent.hpp"
#include "yrational.hpp"

namespace jacobi {

/// Coefficient rings usable in a FourierSeries.
template <class R>
concept CoefficientRing = requires(const R &a, const R &b, const Rat &c) {
    { a + b } -> std::convertible_to<R>;
    { a - b } -> std::convertible_to<R>;
    { a * b } -> std::convertible_to<R>;
    { a * c } -> std::convertible_to<R>;
    { is_zero(a) } -> std::convertible_to<bool>;
    { is_unit(a) } -> std::convertible_to<bool>;
    { a == b } -> std::convertible_to<bool>;
    R(c);
};

/// Exponent of q in units of 1/Den.
template <long Den = 24>
long q_units(const Rat &e)
{
    Rat u = e * Den;
    if (!is_integral(u))
        throw math_error("q-exponent " + e.get_str() + " is not a multiple of 1/" + std::to_string(Den));
    return to_long(u.get_num());
}

template <long Den = 24>
Rat q_rat(long units)
{
    return make_rat(units, Den);
}

/// Truncated Fourier series in q with exponents in (1/Den)Z.
///
/// Every series carries a cap: coefficients of exponents above it are unknown,
/// everything at or below it is known (absent terms are zero). Exact data uses
/// the cap kInfinite.
template <class R, long Den = 24>
class FourierSeries {
public:
    using Coeff = R;
    using Term = std::pair<long, R>;
    static constexpr long kDen = Den;

    FourierSeries() = default;
    FourierSeries(const R &c) requires(!std::is_same_v<R, Rat>)
    {
        if (!jacobi::is_zero(c))
            terms_.emplace_back(0, c);
    }
    FourierSeries(const Rat &c)
    {
        if (!jacobi::is_zero(c))
            terms_.emplace_back(0, R(c));
    }
    FourierSeries(long c) : FourierSeries(Rat(c)) {}

    static FourierSeries zero(long cap = kInfinite)
    {
        FourierSeries s;
        s.cap_ = cap;
        return s;
    }

    static FourierSeries monomial(long e, const R &c, long cap = kInfinite)
    {
        FourierSeries s;
        s.cap_ = cap;
        if (e <= cap && !jacobi::is_zero(c))
            s.terms_.emplace_back(e, c);
        return s;
    }

    static FourierSeries from_terms(std::vector<Term> ts, long cap)
    {
        std::sort(ts.begin(), ts.end(), [](const Term &a, const Term &b) { return a.first < b.first; });
        FourierSeries s;
        s.cap_ = cap;
        for (auto &t : ts) {
            if (t.first > cap)
                break;
            if (!s.terms_.empty() && s.terms_.back().first == t.first)
                s.terms_.back().second = s.terms_.back().second + t.second;
            else
                s.terms_.push_back(std::move(t));
            if (jacobi::is_zero(s.terms_.back().second))
                s.terms_.pop_back();
        }
        return s;
    }

    static FourierSeries from_map(std::map<long, R> m, long cap)
    {
        FourierSeries s;
        s.cap_ = cap;
        for (auto &[e, c] : m)
            if (e <= cap && !jacobi::is_zero(c))
                s.terms_.emplace_back(e, std::move(c));
        return s;
    }

    const std::vector<Term> &terms() const { return terms_; }
    long cap() const { return cap_; }
    bool is_exact() const { return cap_ >= kInfinite; }
    bool is_zero() const { return terms_.empty(); }

    /// Lowest stored exponent; for a zero series the cap.
    long valuation() const { return terms_.empty() ? cap_ : terms_.front().first; }
    const R &leading() const
    {
        if (terms_.empty())
            throw math_error("leading coefficient of a zero series");
        return terms_.front().second;
    }

    R coeff(long e) const
    {
        if (e > cap_)
            throw cap_underflow("coefficient at q^" + q_rat<Den>(e).get_str() + " is beyond the cap q^" +
                                q_rat<Den>(cap_).get_str());
        auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                                   [](const Term &t, long x) { return t.first < x; });
        if (it != terms_.end() && it->first == e)
            return it->second;
        return R(Rat(0));
    }
    R coeff_at(const Rat &e) const { return coeff(q_units<Den>(e)); }

    FourierSeries truncated(long cap) const
    {
        if (cap > cap_)
            throw cap_underflow("cannot truncate at q^" + q_rat<Den>(cap).get_str() + " above the cap q^" +
                                q_rat<Den>(cap_).get_str());
        FourierSeries s;
        s.cap_ = cap;
        for (const auto &t : terms_)
            if (t.first <= cap)
                s.terms_.push_back(t);
        return s;
    }
    FourierSeries truncated_at(const Rat &cap) const { return truncated(q_units<Den>(cap)); }

    /// Multiplication by q^(shift/Den).
    FourierSeries shifted(long shift) const
    {
        FourierSeries s = *this;
        for (auto &t : s.terms_)
            t.first += shift;
        s.cap_ = cap_add(cap_, shift);
        return s;
    }

    template <class F>
    auto map_coeffs(F &&f) const
    {
        using R2 = std::decay_t<decltype(f(std::declval<const R &>()))>;
        std::vector<typename FourierSeries<R2, Den>::Term> ts;
        for (const auto &[e, c] : terms_)
            ts.emplace_back(e, f(c));
        return FourierSeries<R2, Den>::from_terms(std::move(ts), cap_);
    }

    friend FourierSeries operator+(const FourierSeries &a, const FourierSeries &b) { return merge(a, b, false); }
    friend FourierSeries operator-(const FourierSeries &a, const FourierSeries &b) { return merge(a, b, true); }
    friend FourierSeries operator-(const FourierSeries &a)
    {
        FourierSeries s = a;
        for (auto &t : s.terms_)
            t.second = -t.second;
        return s;
    }
    friend FourierSeries operator*(const FourierSeries &a, const FourierSeries &b) { return mul(a, b, kInfinite); }
    friend FourierSeries operator*(const FourierSeries &a, const Rat &c)
    {
        if (jacobi::is_zero(c))
            return zero(a.cap_);
        FourierSeries s = a;
        for (auto &t : s.terms_)
            t.second = t.second * c;
        return s;
    }
    friend FourierSeries operator*(const Rat &c, const FourierSeries &a) { return a * c; }
    friend FourierSeries operator*(const FourierSeries &a, const R &c) requires(!std::is_same_v<R, Rat>)
    {
        return a * FourierSeries(c);
    }
    FourierSeries &operator+=(const FourierSeries &o) { return *this = *this + o; }
    FourierSeries &operator-=(const FourierSeries &o) { return *this = *this - o; }
    FourierSeries &operator*=(const FourierSeries &o) { return *this = *this * o; }

    /// Product with the result cap additionally bounded by limit.
    static FourierSeries mul(const FourierSeries &a, const FourierSeries &b, long limit)
    {
        long cap = std::min({cap_add(a.cap_, b.valuation()), cap_add(b.cap_, a.valuation()), limit});
        if (a.is_zero() || b.is_zero())
            return zero(cap);
        std::map<long, R> acc;
        for (const auto &[ea, ca] : a.terms_) {
            if (ea + b.terms_.front().first > cap)
                break;
            for (const auto &[eb, cb] : b.terms_) {
                const long e = ea + eb;
                if (e > cap)
                    break;
                auto it = acc.find(e);
                if (it == acc.end())
                    acc.emplace(e, ca * cb);
                else
                    it->second = it->second + ca * cb;
            }
        }
        return from_map(std::move(acc), cap);
    }

    /// Exact equality: same cap and same terms.
    friend bool operator==(const FourierSeries &a, const FourierSeries &b)
    {
        return a.cap_ == b.cap_ && a.terms_ == b.terms_;
    }

private:
    static FourierSeries merge(const FourierSeries &a, const FourierSeries &b, bool subtract)
    {
        FourierSeries s;
        s.cap_ = std::min(a.cap_, b.cap_);
        auto i = a.terms_.begin(), j = b.terms_.begin();
        while (i != a.terms_.end() || j != b.terms_.end()) {
            const bool take_i = j == b.terms_.end() || (i != a.terms_.end() && i->first < j->first);
            const bool take_j = i == a.terms_.end() || (j != b.terms_.end() && j->first < i->first);
            long e;
            R c;
            if (take_i) {
                e = i->first;
                c = i->second;
                ++i;
            } else if (take_j) {
                e = j->first;
                c = subtract ? R(-j->second) : j->second;
                ++j;
            } else {
                e = i->first;
                c = subtract ? R(i->second - j->second) : R(i->second + j->second);
                ++i;
                ++j;
            }
            if (e > s.cap_)
                break;
            if (!jacobi::is_zero(c))
                s.terms_.emplace_back(e, std::move(c));
        }
        return s;
    }

    std::vector<Term> terms_;
    long cap_ = kInfinite;
};

template <long Den = 24>
using RatSeries = FourierSeries<Rat, Den>;
using LaurentSeries = FourierSeries<YLaurent>;
using RationalSeries = FourierSeries<YRational>;
template <long Den = 24>
using CycloSeries = FourierSeries<Cyclotomic, Den>;

/// Scalar-series times coefficient-series (e.g. eta powers times theta).
template <class R, long Den>
    requires(!std::is_same_v<R, Rat>)
FourierSeries<R, Den> operator*(const FourierSeries<R, Den> &a, const FourierSeries<Rat, Den> &b)
{
    long cap = std::min(cap_add(a.cap(), b.valuation()), cap_add(b.cap(), a.valuation()));
    if (a.is_zero() || b.is_zero())
        return FourierSeries<R, Den>::zero(cap);
    std::map<long, R> acc;
    for (const auto &[ea, ca] : a.terms())
        for (const auto &[eb, cb] : b.terms()) {
            const long e = ea + eb;
            if (e > cap)
                break;
            auto it = acc.find(e);
            if (it == acc.end())
                acc.emplace(e, ca * cb);
            else
                it->second = it->second + ca * cb;
        }
    return FourierSeries<R, Den>::from_map(std::move(acc), cap);
}
template <class R, long Den>
    requires(!std::is_same_v<R, Rat>)
FourierSeries<R, Den> operator*(const FourierSeries<Rat, Den> &b, const FourierSeries<R, Den> &a)
{
    return a * b;
}

/// Embeds a series over Q into a series over a larger coefficient ring.
template <class R, long Den>
FourierSeries<R, Den> lift(const FourierSeries<Rat, Den> &s)
{
    return s.map_coeffs([](const Rat &c) { return R(c); });
}

namespace detail {

inline YLaurent divide_coeff(const YLaurent &r, const YLaurent &lead) { return divide_exact(r, lead); }
template <class R>
R divide_coeff(const R &r, const R &lead)
{
    return r * inverse(lead);
}

} // namespace detail

/// Quotient a/b by long division in q.
///
/// Over YLaurent the leading coefficient of b need not be a unit: each step is an
/// exact Laurent division and fails loudly when the quotient is not a Laurent
/// series. Over the other rings the leading coefficient must be a unit.
template <class R, long Den>
FourierSeries<R, Den> divide(const FourierSeries<R, Den> &a, const FourierSeries<R, Den> &b)
{
    using S = FourierSeries<R, Den>;
    if (b.is_zero())
        throw math_error("division by a series with no known nonzero term");
    if constexpr (!std::is_same_v<R, YLaurent>)
        if (!is_unit(b.leading()))
            throw math_error("leading coefficient of the divisor is not a unit");
    const long vb = b.valuation();
    const long va = a.valuation();
    const long vc = a.is_zero() ? cap_add(a.cap(), -vb) : va - vb;
    const long cap = std::min(cap_add(a.cap(), -vb), cap_add(b.cap(), vc - vb));
    if (a.is_zero())
        return S::zero(cap);
    if (cap >= kInfinite) {
        if (b.terms().size() != 1)
            throw math_error("division of exact series needs a finite cap; truncate first");
        std::vector<typename S::Term> ts;
        for (const auto &[e, c] : a.terms())
            ts.emplace_back(e - vb, detail::divide_coeff(c, b.leading()));
        return S::from_terms(std::move(ts), kInfinite);
    }
    const R &lead = b.leading();
    std::map<long, R> a_map(a.terms().begin(), a.terms().end());
    std::map<long, R> quot;
    // Exponents of the quotient lie in vc + (differences generated by a and b).
    for (long e = vc; e <= cap; ++e) {
        auto it = a_map.find(e + vb);
        R r = it == a_map.end() ? R(Rat(0)) : it->second;
        bool any = it != a_map.end();
        for (std::size_t k = 1; k < b.terms().size(); ++k) {
            const long j = b.terms()[k].first - vb;
            if (e - j < vc)
                break;
            auto q = quot.find(e - j);
            if (q != quot.end()) {
                r = r - b.terms()[k].second * q->second;
                any = true;
            }
        }
        if (!any || is_zero(r))
            continue;
        quot.emplace(e, detail::divide_coeff(r, lead));
    }
    return S::from_map(std::move(quot), cap);
}

template <class R, long Den>
FourierSeries<R, Den> invert(const FourierSeries<R, Den> &a)
{
    if (a.is_zero() || !is_unit(a.leading()))
        throw math_error("series is not invertible: leading coefficient is not a unit");
    return divide(FourierSeries<R, Den>(Rat(1)), a);
}

template <class R, long Den>
FourierSeries<R, Den> pow(const FourierSeries<R, Den> &a, long k)
{
    if (k < 0)
        return pow(invert(a), -k);
    FourierSeries<R, Den> r(Rat(1)), b = a;
    while (k) {
        if (k & 1)
            r = r * b;
        k >>= 1;
        if (k)
            b = b * b;
    }
    return r;
}

/// exp(a) for a series with no terms of exponent <= 0.
template <class R, long Den>
FourierSeries<R, Den> exp(const FourierSeries<R, Den> &a)
{
    if (!a.is_zero() && a.valuation() <= 0)
        throw math_error("exp needs a series with zero constant term and no negative exponents");
    const long cap = a.cap();
    if (a.is_zero())
        return FourierSeries<R, Den>::monomial(0, R(Rat(1)), cap);
    // With theta = q d/dq: theta(E) = theta(a) E, so e E_e = sum_j j a_j E_{e-j}.
    if (cap >= kInfinite)
        throw math_error("exp of an exact series needs a finite cap; truncate first");
    std::map<long, R> out;
    out.emplace(0, R(Rat(1)));
    for (long e = 1; e <= cap; ++e) {
        R acc(Rat(0));
        bool any = false;
        for (const auto &[j, c] : a.terms()) {
            if (j > e)
                break;
            auto it = out.find(e - j);
            if (it == out.end())
                continue;
            acc = acc + c * it->second * Rat(j);
            any = true;
        }
        if (any && !is_zero(acc))
            out.emplace(e, acc * make_rat(1, e));
    }
    return FourierSeries<R, Den>::from_map(std::move(out), cap);
}

/// log(a) for a series 1 + (positive exponents).
template <class R, long Den>
FourierSeries<R, Den> log(const FourierSeries<R, Den> &a)
{
    if (a.is_zero() || a.valuation() != 0 || !(a.leading() == R(Rat(1))))
        throw math_error("log needs a series with constant term 1 and no negative exponents");
    const long cap = a.cap();
    if (cap >= kInfinite && a.terms().size() > 1)
        throw math_error("log of an exact series needs a finite cap; truncate first");
    if (a.terms().size() == 1)
        return FourierSeries<R, Den>::zero(cap);
    // a * theta(L) = theta(a), a_0 = 1.
    std::map<long, R> dl;
    for (long e = 1; e <= cap; ++e) {
        R acc = a.coeff(e) * Rat(e);
        bool any = !is_zero(acc);
        for (std::size_t k = 1; k < a.terms().size(); ++k) {
            const long j = a.terms()[k].first;
            if (j >= e)
                break;
            auto it = dl.find(e - j);
            if (it == dl.end())
                continue;
            acc = acc - a.terms()[k].second * it->second;
            any = true;
        }
        if (any && !is_zero(acc))
            dl.emplace(e, acc);
    }
    std::map<long, R> out;
    for (auto &[e, c] : dl)
        out.emplace(e, c * make_rat(1, e));
    return FourierSeries<R, Den>::from_map(std::move(out), cap);
}

namespace detail {

inline std::optional<Rat> rat_sqrt(const Rat &x)
{
    if (sgn(x) < 0)
        return std::nullopt;
    if (!mpz_perfect_square_p(x.get_num_mpz_t()) || !mpz_perfect_square_p(x.get_den_mpz_t()))
        return std::nullopt;
    Int n, d;
    mpz_sqrt(n.get_mpz_t(), x.get_num_mpz_t());
    mpz_sqrt(d.get_mpz_t(), x.get_den_mpz_t());
    Rat r(n, d);
    r.canonicalize();
    return r;
}

inline std::optional<Rat> coeff_sqrt(const Rat &x) { return rat_sqrt(x); }
inline std::optional<YLaurent> coeff_sqrt(const YLaurent &x)
{
    if (!x.is_monomial() || x.lowest() % 2 != 0)
        return std::nullopt;
    auto r = rat_sqrt(x.terms()[0].second);
    if (!r)
        return std::nullopt;
    return YLaurent::monomial(x.lowest() / 2, *r);
}

} // namespace detail

/// Square root with positive leading coefficient; the lowest term must be a square.
template <class R, long Den>
FourierSeries<R, Den> sqrt(const FourierSeries<R, Den> &a)
{
    if (a.is_zero())
        throw math_error("sqrt of a series with no known nonzero term");
    const long v = a.valuation();
    if (v % 2 != 0)
        throw math_error("sqrt needs an even leading exponent");
    auto root = detail::coeff_sqrt(a.leading());
    if (!root)
        throw math_error("leading coefficient of sqrt argument is not a perfect square");
    const R lead_inv = inverse(a.leading());
    auto normalized = a.shifted(-v) * FourierSeries<R, Den>(lead_inv);
    auto half_log = log(normalized) * make_rat(1, 2);
    return (exp(half_log) * FourierSeries<R, Den>(*root)).shifted(v / 2);
}

/// The derivation q d/dq.
template <class R, long Den>
FourierSeries<R, Den> q_ddq(const FourierSeries<R, Den> &a)
{
    std::vector<typename FourierSeries<R, Den>::Term> ts;
    for (const auto &[e, c] : a.terms())
        if (e != 0)
            ts.emplace_back(e, c * make_rat(e, Den));
    return FourierSeries<R, Den>::from_terms(std::move(ts), a.cap());
}

/// The derivation y d/dy, i.e. (2 pi i)^-1 d/dz.
template <class R, long Den>
    requires requires(const R &c) { c.y_ddy(); }
FourierSeries<R, Den> y_ddy(const FourierSeries<R, Den> &a)
{
    return a.map_coeffs([](const R &c) { return c.y_ddy(); });
}

/// Substitution y -> y^h.
template <class R, long Den>
    requires requires(const R &c) { c.power_substituted(1); }
FourierSeries<R, Den> substitute_y_power(const FourierSeries<R, Den> &a, int h)
{
    return a.map_coeffs([h](const R &c) { return c.power_substituted(h); });
}

/// Substitution y -> zeta_N (and y^(1/2) -> zeta_2N when half-integral exponents occur).
template <long Den>
CycloSeries<Den> substitute_root(const FourierSeries<YLaurent, Den> &a, int n)
{
    if (!is_supported_order(n))
        throw math_error("unsupported root of unity order " + std::to_string(n));
    std::vector<YLaurent::Term> all;
    for (const auto &[e, c] : a.terms())
        for (const auto &t : c.terms())
            all.push_back(t);
    const int m = evaluation_order(YLaurent::from_terms(all), n);
    return a.map_coeffs([n, m](const YLaurent &c) { return evaluate_at_root(c, n, m); });
}

/// Support bound of a weak Jacobi form of index t: a term q^n y^l satisfies l^2 <= 4tn + t^2.
struct SupportBound {
    Half index;

    bool admits(const Rat &n, const Rat &l) const
    {
        const Rat t = index.to_rat();
        return l * l <= 4 * t * n + t * t;
    }
    // Lower bound for n + s*l over the region n > n0 allowed by the support.
    long double min_shifted(long double n0, long double s) const
    {
        const long double t = static_cast<long double>(index.twice) / 2.0L;
        const long double as = std::fabs(s);
        auto g = [&](long double n) { return n - as * std::sqrt(std::max(0.0L, 4 * t * n + t * t)); };
        const long double turn = t * (4 * as * as - 1) / 4;
        return turn > n0 ? g(turn) : g(n0);
    }
};

/// Substitution y -> zeta_M^k q^s, landing in the lattice (1/Den2)Z.
///
/// Unknown terms of the input can move below its cap when s < 0 (or above when
/// s > 0 and l < 0), so the output cap is derived from the support bound of the
/// input as a weak Jacobi form. Every stored term is checked against the bound.
template <long Den2, long Den>
CycloSeries<Den2> substitute_y_qpower(const FourierSeries<YLaurent, Den> &a, int order, long k, const Rat &s,
                                      const SupportBound &bound)
{
    static_assert(Den2 % Den == 0, "output lattice must refine the input lattice");
    if (!is_supported_order(order))
        throw math_error("unsupported root of unity order " + std::to_string(order));
    std::map<long, Cyclotomic> acc;
    for (const auto &[e, c] : a.terms()) {
        const Rat n = q_rat<Den>(e);
        for (const auto &[l2, v] : c.terms()) {
            const Rat l = make_rat(l2, 2);
            if (!bound.admits(n, l))
                throw math_error("term q^" + n.get_str() + " y^" + l.get_str() +
                                 " violates the weak Jacobi support bound for index " + to_string(bound.index));
            const long out = q_units<Den2>(n + l * s);
            // zeta_M^(k*l) with l half-integral requires k*l*... integral in units of 1/M.
            const Rat rk = Rat(k) * l;
            if (!is_integral(rk))
                throw math_error("root of unity power is not integral; use an order divisible by 2");
            Cyclotomic z = Cyclotomic::root_power(order, to_long(rk.get_num())) * v;
            auto it = acc.find(out);
            if (it == acc.end())
                acc.emplace(out, z);
            else
                it->second = it->second + z;
        }
    }
    long cap = kInfinite;
    if (!a.is_exact()) {
        const long double n0 = static_cast<long double>(a.cap()) / Den;
        const long double sd = s.get_d();
        const long double g = bound.min_shifted(n0, sd);
        cap = static_cast<long>(std::ceil(g * Den2)) - 2;
    }
    return CycloSeries<Den2>::from_map(std::move(acc), cap);
}

/// Real part extraction: all coefficients must be rational.
template <long Den>
RatSeries<Den> to_rational(const CycloSeries<Den> &a)
{
    return a.map_coeffs([](const Cyclotomic &c) { return c.to_rat(); });
}

/// Substitution q -> q^k (k a positive integer).
template <class R, long Den>
FourierSeries<R, Den> rescale_q(const FourierSeries<R, Den> &a, long k)
{
    if (k <= 0)
        throw std::invalid_argument("q -> q^k needs k > 0");
    std::vector<typename FourierSeries<R, Den>::Term> ts;
    for (const auto &[e, c] : a.terms())
        ts.emplace_back(e * k, c);
    return FourierSeries<R, Den>::from_terms(std::move(ts), a.is_exact() ? kInfinite : a.cap() * k);
}

/// Moves a series to a finer lattice.
template <long Den2, class R, long Den>
FourierSeries<R, Den2> refine(const FourierSeries<R, Den> &a)
{
    static_assert(Den2 % Den == 0);
    std::vector<typename FourierSeries<R, Den2>::Term> ts;
    for (const auto &[e, c] : a.terms())
        ts.emplace_back(e * (Den2 / Den), c);
    return FourierSeries<R, Den2>::from_terms(std::move(ts), a.is_exact() ? kInfinite : a.cap() * (Den2 / Den));
}

/// Converts a YRational series whose coefficients are all Laurent polynomials.
template <long Den>
FourierSeries<YLaurent, Den> to_laurent(const FourierSeries<YRational, Den> &a)
{
    return a.map_coeffs([](const YRational &c) { return c.to_laurent(); });
}

template <long Den>
FourierSeries<YRational, Den> to_rational_functions(const FourierSeries<YLaurent, Den> &a)
{
    return a.map_coeffs([](const YLaurent &c) { return YRational(c); });
}

/// First exponent (up to the common cap, optionally bounded) where a and b differ.
template <class R, long Den>
std::optional<long> first_difference(const FourierSeries<R, Den> &a, const FourierSeries<R, Den> &b,
                                     long upto = kInfinite)
{
    const long cap = std::min({a.cap(), b.cap(), upto});
    const auto d = (a - b);
    for (const auto &[e, c] : d.terms())
        if (e <= cap)
            return e;
    return std::nullopt;
}

template <class R, long Den>
bool agree(const FourierSeries<R, Den> &a, const FourierSeries<R, Den> &b, long upto = kInfinite)
{
    return !first_difference(a, b, upto).has_value();
}

} // namespace jacobi
