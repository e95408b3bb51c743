#pragma once

#include <array>
#include <cmath>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "forms.hpp"
#include "jacobi_form.hpp"
#include "ring.hpp"

namespace jacobi {

/// phi(tau, h z): index h^2 t.
inline JacobiForm hecke_rescale(const JacobiForm &a, int h)
{
    if (h <= 0)
        throw std::invalid_argument("hecke_rescale needs h > 0");
    return {a.weight, Half::from_twice(h * h * a.index.twice), a.eta_character, substitute_y_power(a.series, h)};
}

// ---------------------------------------------------------------------------
// Second-quantized elliptic genus

inline constexpr const char *kSqegConvention = "m >= 0, n > 0, all l (including m = 0, l <= 0) with f(mn, l) != 0";

/// sum_n p^n chi(M^(n); q, y): slice n is a (q, y)-series through the q cap.
struct ThreeVarSeries {
    std::vector<LaurentSeries> slices;
    long qcap = 0;
    std::string convention = kSqegConvention;

    long pmax() const { return static_cast<long>(slices.size()) - 1; }
    Rat coeff(long p, const Rat &q, const Rat &y) const
    {
        const Rat y2 = 2 * y;
        if (p < 0 || p > pmax() || !is_integral(y2))
            return 0;
        return slices[static_cast<std::size_t>(p)].coeff(q_units(q)).coeff(static_cast<int>(to_long(y2.get_num())));
    }
    friend ThreeVarSeries operator*(const ThreeVarSeries &a, const ThreeVarSeries &b)
    {
        const long pm = std::min(a.pmax(), b.pmax());
        ThreeVarSeries r;
        r.qcap = std::min(a.qcap, b.qcap);
        for (long n = 0; n <= pm; ++n) {
            LaurentSeries s = LaurentSeries::zero(r.qcap);
            for (long j = 0; j <= n; ++j)
                s = s + a.slices[static_cast<std::size_t>(j)] * b.slices[static_cast<std::size_t>(n - j)];
            r.slices.push_back(s.truncated(r.qcap));
        }
        return r;
    }
};

/// Input range needed for the p^pmax slice through q-units qcap.
inline long sqeg_required_cap(long pmax, long qcap) { return pmax * qcap; }

/// prod_(m >= 0, n > 0, l) (1 - q^m y^l p^n)^(-f(mn, l)) through p^pmax and q-units qcap.
inline ThreeVarSeries sqeg_expand(const LaurentSeries &f, long pmax, long qcap)
{
    if (pmax < 0 || qcap < 0)
        throw std::invalid_argument("sqeg needs pmax >= 0 and qcap >= 0");
    const long need = sqeg_required_cap(pmax, qcap);
    if (f.cap() < need)
        throw cap_underflow("sqeg through p^" + std::to_string(pmax) + ", q^" + q_rat(qcap).get_str() +
                            " needs the input through q^" + q_rat(need).get_str() + ", have q^" +
                            q_rat(f.cap()).get_str());
    for (const auto &[e, c] : f.terms()) {
        if (e % 24)
            throw math_error("sqeg input must have integral q-exponents");
        for (const auto &[l, v] : c.terms())
            if (!is_integral(v))
                throw math_error("sqeg input must have integral coefficients");
    }
    // log = sum_N p^N sum_(k | N) (1/k) sum_(m, l) f(m N/k, l) q^(mk) y^(lk).
    std::vector<LaurentSeries> log_slices(static_cast<std::size_t>(pmax + 1), LaurentSeries::zero(qcap));
    for (long big = 1; big <= pmax; ++big) {
        std::vector<LaurentSeries::Term> ts;
        for (long k = 1; k <= big; ++k) {
            if (big % k)
                continue;
            const long n = big / k;
            for (long m = 0; 24 * m * k <= qcap; ++m) {
                const auto &c = f.coeff(24 * m * n);
                if (c.is_zero())
                    continue;
                ts.emplace_back(24 * m * k, c.power_substituted(static_cast<int>(k)) * make_rat(1, k));
            }
        }
        log_slices[static_cast<std::size_t>(big)] = LaurentSeries::from_terms(std::move(ts), qcap);
    }
    ThreeVarSeries r;
    r.qcap = qcap;
    r.slices.push_back(LaurentSeries(Rat(1)).truncated(qcap));
    for (long big = 1; big <= pmax; ++big) {
        LaurentSeries acc = LaurentSeries::zero(qcap);
        for (long j = 1; j <= big; ++j)
            acc = acc + log_slices[static_cast<std::size_t>(j)] * r.slices[static_cast<std::size_t>(big - j)] * Rat(j);
        acc = (acc * make_rat(1, big)).truncated(qcap);
        for (const auto &[e, c] : acc.terms())
            if (!c.has_integral_coefficients())
                throw math_error("non-integral sqeg coefficient in the p^" + std::to_string(big) + " slice at q^" +
                                 q_rat(e).get_str());
        r.slices.push_back(acc);
    }
    return r;
}

// ---------------------------------------------------------------------------
// Delta_2

/// (-4 | n): 1 for n = 1 mod 4, -1 for n = 3 mod 4, 0 for even n.
inline int chi4(long n)
{
    switch (mod_pos(n, 4)) {
    case 1: return 1;
    case 3: return -1;
    default: return 0;
    }
}

/// Coefficients at q^(n/4) y^(l/2) s^(m/2), keyed by (n, l, m).
struct SiegelSeries {
    std::map<std::array<long, 3>, Int> coeffs;
    long bound = 0;

    Int coeff(long n, long l, long m) const
    {
        auto it = coeffs.find({n, l, m});
        return it == coeffs.end() ? Int(0) : it->second;
    }
    /// The s^(m/2) slice as a (q, y)-series, complete for n + m <= bound.
    LaurentSeries slice(long m) const
    {
        std::vector<LaurentSeries::Term> ts;
        for (const auto &[k, v] : coeffs)
            if (k[2] == m)
                ts.emplace_back(6 * k[0], YLaurent::monomial(static_cast<int>(k[1]), Rat(v)));
        return LaurentSeries::from_terms(std::move(ts), 6 * (bound - m));
    }
};

inline SiegelSeries delta2_expand(long bound)
{
    if (bound < 2)
        throw std::invalid_argument("delta2 needs bound >= 2");
    SiegelSeries s;
    s.bound = bound;
    for (long n = 1; n < bound; n += 4)
        for (long m = 1; n + m <= bound; m += 4) {
            const long disc = 2 * n * m;
            const long lmax = static_cast<long>(std::sqrt(static_cast<double>(disc))) + 1;
            for (long l = -lmax; l <= lmax; ++l) {
                const long nn = disc - l * l;
                if (nn <= 0)
                    continue;
                const long big = std::lround(std::sqrt(static_cast<double>(nn)));
                if (big * big != nn)
                    continue;
                const long g = std::gcd(std::gcd(n, std::labs(l)), m);
                long div = 0;
                for (long a = 1; a <= g; ++a)
                    if (g % a == 0)
                        div += chi4(a);
                const long v = big * chi4(big * l) * div;
                if (v != 0)
                    s.coeffs[{n, l, m}] += v;
            }
        }
    return s;
}

/// Antisymmetry under l -> -l on the computed support.
inline CheckResult delta2_antisymmetry(const SiegelSeries &s)
{
    for (const auto &[k, v] : s.coeffs)
        if (s.coeff(k[0], -k[1], k[2]) != -v)
            return CheckResult::fail("coefficient at (" + std::to_string(k[0]) + "/4, " + std::to_string(k[1]) +
                                     "/2, " + std::to_string(k[2]) + "/2) is " + v.get_str() +
                                     " but its mirror is " + s.coeff(k[0], -k[1], k[2]).get_str());
    return CheckResult::ok(std::to_string(s.coeffs.size()) + " coefficients antisymmetric in l");
}

/// The m = 1 slice against eta^3 theta.
inline CheckResult delta2_first_slice(const SiegelSeries &s)
{
    const auto sl = s.slice(1);
    const long cap = sl.cap();
    const auto ref = times_eta_power(theta(cap + 3), 3, cap);
    return compare_series(sl, ref, cap);
}

} // namespace jacobi
