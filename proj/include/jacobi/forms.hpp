#pragma once

#include <cmath>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "jacobi_form.hpp"
#include "series.hpp"

// Named building blocks. Every constructor takes the cap in units of q^(1/24)
// and returns a series whose cap is exactly that value.
namespace jacobi {

inline long qcap_units(const Rat &qcap) { return q_units<24>(qcap); }

inline Rat bernoulli(unsigned n)
{
    std::vector<Rat> b(n + 1);
    b[0] = 1;
    for (unsigned m = 1; m <= n; ++m) {
        Rat s = 0;
        for (unsigned k = 0; k < m; ++k)
            s += binomial(m + 1, k) * b[k];
        b[m] = -s / Rat(m + 1);
    }
    return b[n];
}

inline Int divisor_sigma(long n, unsigned k)
{
    Int s = 0, p;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d)
            continue;
        mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(d), k);
        s += p;
        if (d != n / d) {
            mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(n / d), k);
            s += p;
        }
    }
    return s;
}

// Integer q-orders n with 24n <= cap.
inline long whole_orders(long cap) { return floor_div(cap, 24); }

/// prod (1 - q^n), the pentagonal series.
inline RatSeries<> pentagonal(long cap)
{
    std::vector<RatSeries<>::Term> ts;
    for (long k = 0;; ++k) {
        bool any = false;
        for (long s : {k, -k - 1}) {
            const long e = 24 * (s * (3 * s - 1) / 2);
            if (e > cap)
                continue;
            any = true;
            ts.emplace_back(e, Rat(s % 2 == 0 ? 1 : -1));
        }
        if (!any)
            break;
    }
    return RatSeries<>::from_terms(std::move(ts), cap);
}

/// eta^k for any integer k.
inline RatSeries<> eta_power(long k, long cap)
{
    auto p = pentagonal(cap - k);
    if (k < 0)
        p = invert(p);
    return pow(p, k < 0 ? -k : k).shifted(k);
}

inline RatSeries<> eta(long cap) { return eta_power(1, cap); }
inline RatSeries<> delta(long cap) { return eta_power(24, cap); }

/// G_k = -B_k/(2k) + sum sigma_(k-1)(n) q^n for even k >= 2.
inline RatSeries<> eisenstein_G(unsigned k, long cap)
{
    if (k < 2 || k % 2)
        throw std::invalid_argument("Eisenstein series need an even weight >= 2");
    std::vector<RatSeries<>::Term> ts;
    ts.emplace_back(0, -bernoulli(k) / Rat(2 * k));
    for (long n = 1; n <= whole_orders(cap); ++n)
        ts.emplace_back(24 * n, Rat(divisor_sigma(n, k - 1)));
    return RatSeries<>::from_terms(std::move(ts), cap);
}

/// E_k = G_k normalized to constant term 1.
inline RatSeries<> eisenstein_E(unsigned k, long cap)
{
    return eisenstein_G(k, cap) * (-Rat(2 * k) / bernoulli(k));
}

/// theta(tau, z) = sum over odd n of (-1)^((n-1)/2) q^(n^2/8) y^(n/2).
inline LaurentSeries theta_sum(long cap)
{
    std::vector<LaurentSeries::Term> ts;
    for (long n = 1; 3 * n * n <= cap; n += 2) {
        for (long s : {n, -n}) {
            const Rat c = mod_pos((s - 1) / 2, 2) == 0 ? 1 : -1;
            ts.emplace_back(3 * s * s, YLaurent::monomial(static_cast<int>(s), c));
        }
    }
    return LaurentSeries::from_terms(std::move(ts), cap);
}

/// theta = -q^(1/8) y^(-1/2) prod (1 - q^(n-1) y)(1 - q^n y^-1)(1 - q^n).
inline LaurentSeries theta_product(long cap)
{
    const long inner = cap - 3;
    LaurentSeries acc = LaurentSeries::monomial(0, YLaurent::monomial(-1, -1), inner);
    const YLaurent one(1);
    for (long n = 1; 24 * (n - 1) <= inner; ++n) {
        auto f1 = LaurentSeries::from_terms({{0, one}, {24 * (n - 1), YLaurent::monomial(2, -1)}}, kInfinite);
        acc = LaurentSeries::mul(acc, f1, inner);
        if (24 * n > inner)
            continue;
        auto f2 = LaurentSeries::from_terms({{0, one}, {24 * n, YLaurent::monomial(-2, -1)}}, kInfinite);
        auto f3 = LaurentSeries::from_terms({{0, one}, {24 * n, YLaurent(-1)}}, kInfinite);
        acc = LaurentSeries::mul(LaurentSeries::mul(acc, f2, inner), f3, inner);
    }
    return acc.shifted(3);
}

inline LaurentSeries theta(long cap) { return theta_sum(cap); }

/// s * eta^k truncated at cap.
inline LaurentSeries times_eta_power(const LaurentSeries &s, long k, long cap)
{
    const long v = s.is_zero() ? 0 : s.valuation();
    return (s * lift<YLaurent>(eta_power(k, cap - v))).truncated(cap);
}

/// D theta / theta = -1/2 - y/(1-y) + sum_(n,k>=1) q^(nk) (y^-k - y^k), D = y d/dy.
inline RationalSeries dlog_theta(long cap)
{
    std::vector<RationalSeries::Term> ts;
    const YLaurent num = YLaurent::from_terms({{0, make_rat(-1, 2)}, {2, make_rat(-1, 2)}});
    const YLaurent den = YLaurent::from_terms({{0, Rat(1)}, {2, Rat(-1)}});
    ts.emplace_back(0, YRational(num, den));
    for (long big = 1; big <= whole_orders(cap); ++big) {
        std::vector<YLaurent::Term> yt;
        for (long k = 1; k <= big; ++k)
            if (big % k == 0) {
                yt.emplace_back(static_cast<int>(-2 * k), Rat(1));
                yt.emplace_back(static_cast<int>(2 * k), Rat(-1));
            }
        ts.emplace_back(24 * big, YRational(YLaurent::from_terms(std::move(yt))));
    }
    return RationalSeries::from_terms(std::move(ts), cap);
}

/// P_2, ..., P_nmax with P_2 = -D(D theta/theta) - 2 G_2 and P_(n+1) = D P_n.
inline std::vector<RationalSeries> wp_jets(unsigned nmax, long cap)
{
    if (nmax < 2)
        throw std::invalid_argument("wp_jets needs nmax >= 2");
    std::vector<RationalSeries> out;
    out.push_back(-y_ddy(dlog_theta(cap)) - lift<YRational>(eisenstein_G(2, cap)) * Rat(2));
    for (unsigned n = 3; n <= nmax; ++n)
        out.push_back(y_ddy(out.back()));
    return out;
}

inline LaurentSeries phi_m1_half(long cap) { return times_eta_power(theta(cap + 3), -3, cap); }

inline LaurentSeries phi_m2_1(long cap)
{
    const auto t = theta(cap + 3);
    return times_eta_power(t * t, -6, cap);
}

/// 12 [(D theta)^2 - theta D^2 theta - 2 G_2 theta^2] / eta^6.
inline LaurentSeries phi_0_1(long cap)
{
    const auto t = theta(cap + 3);
    const auto dt = y_ddy(t);
    const auto ddt = y_ddy(dt);
    const auto g2 = lift<YLaurent>(eisenstein_G(2, cap + 3));
    const auto core = dt * dt - t * ddt - g2 * t * t * Rat(2);
    return times_eta_power(core, -6, cap) * Rat(12);
}

/// theta(2z)/theta(z).
inline LaurentSeries phi_0_3half(long cap)
{
    const auto t = theta(cap + 3);
    return divide(substitute_y_power(t, 2), t).truncated(cap);
}

/// theta(3z)/theta(z).
inline LaurentSeries phi_0_4(long cap)
{
    const auto t = theta(cap + 3);
    return divide(substitute_y_power(t, 3), t).truncated(cap);
}

inline int chi_minus4(long m)
{
    const long r = mod_pos(m, 4);
    return r == 1 ? 1 : r == 3 ? -1 : 0;
}

inline int chi_12(long n)
{
    const long r = mod_pos(n, 12);
    return (r == 1 || r == 11) ? 1 : (r == 5 || r == 7) ? -1 : 0;
}

/// (1/2) eta^-4 sum (3m - n) (-4/m) (12/n) q^((3m^2+n^2)/24) y^((m+n)/2).
inline LaurentSeries phi_0_2(long cap)
{
    const long inner = cap + 4;
    std::vector<LaurentSeries::Term> ts;
    const long mm = static_cast<long>(std::sqrt(static_cast<double>(inner) / 3)) + 1;
    const long nn = static_cast<long>(std::sqrt(static_cast<double>(inner))) + 1;
    for (long m = -mm; m <= mm; ++m) {
        if (chi_minus4(m) == 0)
            continue;
        for (long n = -nn; n <= nn; ++n) {
            const long e = 3 * m * m + n * n;
            if (e > inner || chi_12(n) == 0)
                continue;
            const Rat c(chi_minus4(m) * chi_12(n) * (3 * m - n));
            ts.emplace_back(e, YLaurent::monomial(static_cast<int>(m + n), c));
        }
    }
    return times_eta_power(LaurentSeries::from_terms(std::move(ts), inner), -4, cap) * make_rat(1, 2);
}

inline LaurentSeries phi_0_3(long cap)
{
    const auto f = phi_0_3half(cap);
    return f * f;
}

/// theta^12 / eta^12.
inline LaurentSeries xi_0_6(long cap)
{
    const auto t = theta(cap + 3);
    return times_eta_power(pow(t, 12), -12, cap);
}

/// q^(1/24) y^(-1/2) prod (1+q^(n-1)y)(1+q^n y^-1)(1-q^(2n-1)y^2)(1-q^(2n-1)y^-2)(1-q^n).
inline LaurentSeries theta_3half_product(long cap)
{
    const long inner = cap - 1;
    LaurentSeries acc = LaurentSeries::monomial(0, YLaurent::monomial(-1, 1), inner);
    const YLaurent one(1);
    auto factor = [&](long e, const YLaurent &c) {
        if (e > inner)
            return;
        acc = LaurentSeries::mul(acc, LaurentSeries::from_terms({{0, one}, {e, c}}, kInfinite), inner);
    };
    for (long n = 1; 24 * (n - 1) <= inner; ++n) {
        factor(24 * (n - 1), YLaurent::monomial(2, 1));
        factor(24 * n, YLaurent::monomial(-2, 1));
        factor(24 * (2 * n - 1), YLaurent::monomial(4, -1));
        factor(24 * (2 * n - 1), YLaurent::monomial(-4, -1));
        factor(24 * n, YLaurent(-1));
    }
    return acc.shifted(1);
}

/// eta(tau) theta(tau, 2z) / theta(tau, z).
inline LaurentSeries theta_3half_quotient(long cap)
{
    return times_eta_power(phi_0_3half(cap - 1), 1, cap);
}

// Level-2 theta series.

/// sum q^(n^2/2) y^n
inline LaurentSeries theta00(long cap)
{
    std::vector<LaurentSeries::Term> ts;
    for (long n = 0; 12 * n * n <= cap; ++n)
        for (long s : n == 0 ? std::vector<long>{0} : std::vector<long>{n, -n})
            ts.emplace_back(12 * s * s, YLaurent::monomial(static_cast<int>(2 * s), 1));
    return LaurentSeries::from_terms(std::move(ts), cap);
}

/// sum (-1)^n q^(n^2/2) y^n
inline LaurentSeries theta01(long cap)
{
    std::vector<LaurentSeries::Term> ts;
    for (long n = 0; 12 * n * n <= cap; ++n)
        for (long s : n == 0 ? std::vector<long>{0} : std::vector<long>{n, -n})
            ts.emplace_back(12 * s * s, YLaurent::monomial(static_cast<int>(2 * s), n % 2 ? -1 : 1));
    return LaurentSeries::from_terms(std::move(ts), cap);
}

/// sum q^((n+1/2)^2/2) y^(n+1/2)
inline LaurentSeries theta10(long cap)
{
    std::vector<LaurentSeries::Term> ts;
    for (long k = 1; 3 * k * k <= cap; k += 2)
        for (long s : {k, -k})
            ts.emplace_back(3 * s * s, YLaurent::monomial(static_cast<int>(s), 1));
    return LaurentSeries::from_terms(std::move(ts), cap);
}

/// Value at y = 1.
inline RatSeries<> at_y_one(const LaurentSeries &s)
{
    return s.map_coeffs([](const YLaurent &c) {
        Rat a = 0;
        for (const auto &t : c.terms())
            a += t.second;
        return a;
    });
}

/// theta_ab(z)/theta_ab(0).
inline LaurentSeries theta_quotient(const std::function<LaurentSeries(long)> &f, long cap)
{
    const auto t = f(cap + 3);
    return divide(t, lift<YLaurent>(at_y_one(t))).truncated(cap);
}

inline LaurentSeries xi00(long cap) { return theta_quotient(theta00, cap); }
inline LaurentSeries xi01(long cap) { return theta_quotient(theta01, cap); }
inline LaurentSeries xi10(long cap) { return theta_quotient(theta10, cap); }

/// theta_00(2 tau) / theta_01(2 tau).
inline RatSeries<> gamma_series(long cap)
{
    std::vector<RatSeries<>::Term> a, b;
    const long nn = static_cast<long>(std::sqrt(static_cast<double>(cap) / 24)) + 1;
    for (long n = -nn; n <= nn; ++n) {
        if (24 * n * n > cap)
            continue;
        a.emplace_back(24 * n * n, Rat(1));
        b.emplace_back(24 * n * n, Rat(n % 2 ? -1 : 1));
    }
    return divide(RatSeries<>::from_terms(std::move(a), cap), RatSeries<>::from_terms(std::move(b), cap));
}

// Named forms with their (weight, index, eta character) tags.

inline const std::vector<std::string> &jacobi_form_names()
{
    static const std::vector<std::string> names = {
        "theta",  "theta00", "theta01", "theta10", "eta",    "delta",  "E4",      "E6",
        "phi_m1_half", "phi_m2_1", "phi_0_1", "phi_0_3half", "phi_0_2", "phi_0_3", "phi_0_4", "xi_0_6",
        "theta_3half"};
    return names;
}

inline JacobiForm named_form(const std::string &name, long cap)
{
    const auto h = [](int twice) { return Half::from_twice(twice); };
    auto scalar = [](const RatSeries<> &s) { return lift<YLaurent>(s); };
    if (name == "theta")
        return {h(1), h(1), 3, theta(cap)};
    if (name == "theta00")
        return {h(1), h(1), 0, theta00(cap)};
    if (name == "theta01")
        return {h(1), h(1), 0, theta01(cap)};
    if (name == "theta10")
        return {h(1), h(1), 0, theta10(cap)};
    if (name == "eta")
        return {h(1), h(0), 1, scalar(eta(cap))};
    if (name == "delta")
        return {h(24), h(0), 0, scalar(delta(cap))};
    if (name.size() > 1 && (name[0] == 'E' || name[0] == 'G') && name.find_first_not_of("0123456789", 1) == std::string::npos) {
        const unsigned k = static_cast<unsigned>(std::stoul(name.substr(1)));
        auto s = name[0] == 'E' ? eisenstein_E(k, cap) : eisenstein_G(k, cap);
        return {h(static_cast<int>(2 * k)), h(0), 0, scalar(s)};
    }
    if (name == "phi_m1_half")
        return {h(-2), h(1), 0, phi_m1_half(cap)};
    if (name == "phi_m2_1")
        return {h(-4), h(2), 0, phi_m2_1(cap)};
    if (name == "phi_0_1")
        return {h(0), h(2), 0, phi_0_1(cap)};
    if (name == "phi_0_3half")
        return {h(0), h(3), 0, phi_0_3half(cap)};
    if (name == "phi_0_2")
        return {h(0), h(4), 0, phi_0_2(cap)};
    if (name == "phi_0_3")
        return {h(0), h(6), 0, phi_0_3(cap)};
    if (name == "phi_0_4")
        return {h(0), h(8), 0, phi_0_4(cap)};
    if (name == "xi_0_6")
        return {h(0), h(12), 0, xi_0_6(cap)};
    if (name == "theta_3half")
        return {h(1), h(3), 1, theta_3half_product(cap)};
    throw std::invalid_argument("unknown form '" + name + "'");
}

} // namespace jacobi
