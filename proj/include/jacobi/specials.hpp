#pragma once

#include <string>
#include <utility>
#include <vector>

#include "forms.hpp"
#include "genus.hpp"
#include "ring.hpp"

namespace jacobi {

inline constexpr long kRestrictDen = 288;
using RestrictedSeries = CycloSeries<kRestrictDen>;

/// phi(tau, lambda tau + mu) * q^(t lambda^2) * e(t lambda mu).
struct RestrictedValue {
    Rat lambda;
    Rat mu;
    Half index;
    RestrictedSeries base;  // y -> e(mu) q^lambda
    Rat q_shift;            // t lambda^2
    Cyclotomic root_factor; // e(t lambda mu)

    RestrictedSeries value() const
    {
        const auto z = root_factor;
        return base.shifted(q_units<kRestrictDen>(q_shift)).map_coeffs([&z](const Cyclotomic &c) { return c * z; });
    }
    RatSeries<kRestrictDen> rational() const { return to_rational(value()); }
};

inline bool is_torsion_denominator(const Rat &x)
{
    const Int d = x.get_den();
    return d == 1 || d == 2 || d == 3 || d == 4 || d == 6;
}

/// With with_phase = false the constant e(t lambda mu) is left as 1.
inline RestrictedValue restrict(const JacobiForm &a, const Rat &lambda, const Rat &mu, bool with_phase = true)
{
    if (!is_torsion_denominator(lambda) || !is_torsion_denominator(mu))
        throw math_error("restriction point needs denominators in {1, 2, 3, 4, 6}");
    bool half = false;
    for (const auto &[e, c] : a.series.terms())
        for (const auto &t : c.terms())
            half = half || t.first % 2 != 0;
    const int den = static_cast<int>(to_long(mu.get_den()));
    const int order = half ? 2 * den : den;
    if (!is_supported_order(order))
        throw math_error("restriction at mu = " + mu.get_str() + " needs a root of unity of order " +
                         std::to_string(order));
    const long k = to_long(Rat(mu * order).get_num());
    RestrictedValue r;
    r.lambda = lambda;
    r.mu = mu;
    r.index = a.index;
    r.base = substitute_y_qpower<kRestrictDen>(a.series, order, k, lambda, SupportBound{a.index});
    const Rat t = a.index.to_rat();
    r.q_shift = t * lambda * lambda;
    if (!with_phase) {
        r.root_factor = Cyclotomic::root_power(1, 0);
        return r;
    }
    const Rat phase = t * lambda * mu;
    const int porder = static_cast<int>(to_long(phase.get_den()));
    if (!is_supported_order(porder))
        throw math_error("prefactor e(" + phase.get_str() + ") needs an unsupported root of unity");
    r.root_factor = Cyclotomic::root_power(porder, to_long(phase.get_num()));
    return r;
}

/// phi(tau, 1/n) as a rational series in the original lattice.
inline RatSeries<> value_at(const LaurentSeries &s, int n) { return to_rational(substitute_root(s, n)); }

/// 1/24-unit series value of a q-exponent-preserving restriction.
inline RatSeries<> coarsen(const RatSeries<kRestrictDen> &s)
{
    constexpr long f = kRestrictDen / 24;
    std::vector<RatSeries<>::Term> ts;
    for (const auto &[e, c] : s.terms()) {
        if (e % f)
            throw math_error("exponent outside the 1/24 lattice");
        ts.emplace_back(e / f, c);
    }
    return RatSeries<>::from_terms(std::move(ts), s.is_exact() ? kInfinite : floor_div(s.cap(), f));
}

// ---------------------------------------------------------------------------
// alpha, beta, gamma and the Hauptmodul identities

struct ABG {
    RatSeries<> alpha, beta, gamma;
};

inline ABG abg_functions(long cap)
{
    return {value_at(phi_0_1(cap), 2), value_at(phi_0_2(cap), 3), gamma_series(cap)};
}

using NamedCheck = std::pair<std::string, CheckResult>;

inline std::vector<NamedCheck> abg_checks(long cap)
{
    const auto f = abg_functions(cap);
    std::vector<NamedCheck> out;
    const auto g4 = pow(f.gamma, 4) * Rat(16) - RatSeries<>(Rat(8));
    out.emplace_back("alpha = 16 gamma^4 - 8", compare_series(f.alpha, g4, cap));
    auto positive = [cap](const RatSeries<> &s) {
        for (long e = 0; e <= cap; e += 24)
            if (sgn(s.coeff(e)) <= 0)
                return CheckResult::fail("coefficient of q^" + q_rat(e).get_str() + " is " + s.coeff(e).get_str());
        return CheckResult::ok("positive through q^" + q_rat(cap).get_str());
    };
    out.emplace_back("alpha coefficients positive", positive(f.alpha));
    out.emplace_back("gamma coefficients positive", positive(f.gamma));
    const auto g = f.gamma;
    out.emplace_back("phi_0_2(1/4) = 4 gamma^2", compare_series(value_at(phi_0_2(cap), 4), g * g * Rat(4), cap));
    out.emplace_back("phi_0_3(1/4) = 2 gamma", compare_series(value_at(phi_0_3(cap), 4), g * Rat(2), cap));
    out.emplace_back("phi_0_4(1/4) = 1", compare_series(value_at(phi_0_4(cap), 4), RatSeries<>(Rat(1)), cap));
    out.emplace_back("phi_0_1(1/4) = 2(4 gamma^4 + 1)/gamma",
                     compare_series(value_at(phi_0_1(cap), 4),
                                    divide(pow(g, 4) * Rat(8) + RatSeries<>(Rat(2)), g), cap));
    return out;
}

namespace detail {

inline RatSeries<> delta_ratio(long n, long cap)
{
    const auto d = delta(n * cap + 48);
    return divide(rescale_q(d, n).truncated(cap + 24), d).truncated(cap);
}

} // namespace detail

inline std::vector<NamedCheck> hauptmodul_checks(long cap)
{
    std::vector<NamedCheck> out;
    const auto xi = xi_0_6(cap);
    const auto x2 = value_at(xi, 2), x3 = value_at(xi, 3), x4 = value_at(xi, 4), x6 = value_at(xi, 6);
    const auto r2 = detail::delta_ratio(2, cap), r3 = detail::delta_ratio(3, cap), r4 = detail::delta_ratio(4, cap);
    out.emplace_back("xi_0_6(1/2) = 2^12 Delta(2t)/Delta(t)", compare_series(x2, r2 * Rat(4096), cap));
    out.emplace_back("xi_0_6(1/3)^2 = 3^12 Delta(3t)/Delta(t)", compare_series(x3 * x3, r3 * Rat(531441), cap));
    out.emplace_back("xi_0_6(1/4)^2 = 2^12 Delta(4t)/Delta(t)", compare_series(x4 * x4, r4 * Rat(4096), cap));
    const auto r42 = divide(detail::delta_ratio(4, cap + 24), detail::delta_ratio(2, cap + 24)).truncated(cap);
    out.emplace_back("xi_0_6(1/4)^2 = 2^12 Delta(4t)/Delta(2t)", compare_series(x4 * x4, r42 * Rat(4096), cap));
    {
        const auto d = delta(6 * cap + 48);
        const auto num = d * rescale_q(d, 6);
        const auto den = rescale_q(d, 2) * rescale_q(d, 3);
        out.emplace_back("xi_0_6(1/6)^2 = Delta(t)Delta(6t)/(Delta(2t)Delta(3t))",
                         compare_series(x6 * x6, divide(num.truncated(cap + 120), den).truncated(cap), cap));
    }
    const auto f = abg_functions(cap);
    out.emplace_back("alpha^2 - 64 = 2^12 Delta(2t)/Delta(t)",
                     compare_series(f.alpha * f.alpha - RatSeries<>(Rat(64)), r2 * Rat(4096), cap));
    const auto b = pow(f.beta, 3) - RatSeries<>(Rat(27));
    out.emplace_back("(beta^3 - 27)^2 = 3^12 Delta(3t)/Delta(t)", compare_series(b * b, r3 * Rat(531441), cap));
    const auto gi = invert(f.gamma);
    const auto c = (f.gamma * f.gamma - gi * gi) * Rat(4);
    out.emplace_back("(4(gamma^2 - gamma^-2))^2 = 2^12 Delta(4t)/Delta(2t)",
                     compare_series(c * c, r42 * Rat(4096), cap));
    return out;
}

// ---------------------------------------------------------------------------
// Values at z = -(tau+1)/2

struct AhatValues {
    std::vector<RatSeries<>> phi; // phi[m-1] for m = 1..4
    RatSeries<> xi6;
};

namespace detail {

// q^(m/4) phi(tau, -(tau+1)/2), through q-units cap.
inline RatSeries<> ahat_of(const std::function<LaurentSeries(long)> &f, int m, long cap)
{
    const SupportBound bound{Half::integer(m)};
    long in = cap + 24;
    for (;;) {
        auto s = substitute_y_qpower<24>(f(in), 2, 1, make_rat(-1, 2), bound);
        auto r = to_rational(s).shifted(6L * m);
        if (r.cap() >= cap)
            return r.truncated(cap);
        in += 24;
    }
}

} // namespace detail

inline AhatValues ahat_values(long cap)
{
    AhatValues v;
    const std::function<LaurentSeries(long)> fs[4] = {phi_0_1, phi_0_2, phi_0_3, phi_0_4};
    for (int m = 1; m <= 4; ++m)
        v.phi.push_back(detail::ahat_of(fs[m - 1], m, cap));
    v.xi6 = detail::ahat_of(xi_0_6, 6, cap);
    return v;
}

inline std::vector<NamedCheck> ahat_checks(long cap)
{
    const auto v = ahat_values(cap);
    std::vector<NamedCheck> out;
    out.emplace_back("phi_hat_2 = -2", compare_series(v.phi[1], RatSeries<>(Rat(-2)), cap));
    out.emplace_back("phi_hat_3 = 0", compare_series(v.phi[2], RatSeries<>::zero(kInfinite), cap));
    out.emplace_back("phi_hat_4 = -1", compare_series(v.phi[3], RatSeries<>(Rat(-1)), cap));
    {
        const auto lead = RatSeries<>::from_terms({{-6, Rat(-1)}, {6, Rat(20)}}, 6);
        out.emplace_back("phi_hat_1 = -q^(-1/4) + 20 q^(1/4) + ...", compare_series(v.phi[0], lead, 6));
    }
    out.emplace_back("xi_hat_6 = phi_hat_1^2 + 64",
                     compare_series(v.xi6, v.phi[0] * v.phi[0] + RatSeries<>(Rat(64)), cap));
    {
        const auto t = at_y_one(theta00(cap + 24));
        const auto q = divide(t, eta(cap + 24));
        out.emplace_back("xi_hat_6 = (theta00/eta)^12", compare_series(v.xi6, pow(q, 12), cap));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Congruences

struct CongruenceReport {
    std::string claim;
    Int modulus;                            // for q^n, n > 0
    Int constant_modulus;                   // for q^0
    std::vector<std::pair<Rat, Int>> residues; // (q-exponent, residue)
    bool pass = true;
};

/// Checks s = a c + b q(...): q^0 coefficient divisible by a, q^(n>0) by b.
template <long Den>
CongruenceReport coefficient_congruence(std::string claim, const RatSeries<Den> &s, const Int &a, const Int &b,
                                        long cap)
{
    CongruenceReport r{std::move(claim), b, a, {}, true};
    for (const auto &[e, c] : s.terms()) {
        if (e > cap)
            break;
        if (e < 0 || !is_integral(c)) {
            r.pass = false;
            r.residues.emplace_back(q_rat<Den>(e), Int(-1));
            continue;
        }
        const Int &m = e == 0 ? a : b;
        Int res;
        mpz_fdiv_r(res.get_mpz_t(), c.get_num_mpz_t(), m.get_mpz_t());
        r.residues.emplace_back(q_rat<Den>(e), res);
        if (res != 0)
            r.pass = false;
    }
    if (r.residues.empty())
        r.residues.emplace_back(Rat(0), Int(0));
    return r;
}

inline CongruenceReport scalar_congruence(std::string claim, const Int &value, const Int &modulus)
{
    Int res;
    mpz_fdiv_r(res.get_mpz_t(), value.get_mpz_t(), modulus.get_mpz_t());
    return {std::move(claim), modulus, modulus, {{Rat(0), res}}, res == 0};
}

inline std::vector<CongruenceReport> abg_congruences(long cap)
{
    const auto f = abg_functions(cap);
    return {coefficient_congruence("alpha - 8 = 0 mod 2^8", f.alpha - RatSeries<>(Rat(8)), 256, 256, cap),
            coefficient_congruence("beta - 3 = 0 mod 3^3", f.beta - RatSeries<>(Rat(3)), 27, 27, cap)};
}

namespace detail {

// (constant multiplier, q-modulus) of the value patterns, by index class.
inline std::pair<long, long> half_pattern(long t)
{
    static const std::pair<long, long> p[4] = {{1, 8192}, {8, 256}, {2, 4096}, {16, 512}};
    return p[mod_pos(t, 4)];
}
inline std::pair<long, long> third_pattern(long t)
{
    static const std::pair<long, long> p[3] = {{1, 729}, {9, 81}, {3, 27}};
    return p[mod_pos(t, 3)];
}

} // namespace detail

inline std::vector<CongruenceReport> congruence_report(const ManifoldData &m, long cap)
{
    std::vector<CongruenceReport> out;
    const Int e = m.euler();
    out.push_back(scalar_congruence("d*e(M) = 0 mod 24", Int(m.d) * e, 24));
    if (mod_pos(m.d, 8) == 2)
        out.push_back(scalar_congruence("e(M) = 0 mod 8 (d = 2 mod 8)", e, 8));
    if (m.d % 2 != 0)
        return out;
    const auto eg = elliptic_genus(m, cap).core.series;
    const long t = m.d / 2;
    if (mod_pos(m.d, 8) == 2)
        out.push_back(coefficient_congruence("chi(M; 1/2) = 16c + 2^9 q(...)", value_at(eg, 2), 16, 512, cap));
    {
        const auto [a, b] = detail::third_pattern(t);
        out.push_back(coefficient_congruence("chi(M; 1/3) = " + std::to_string(a) + "c + " + std::to_string(b) +
                                                 " q(...)",
                                             value_at(eg, 3), a, b, cap));
    }
    if (mod_pos(m.d, 8) == 2)
        out.push_back(coefficient_congruence("chi(M; 1/4) = 4c + 2^4 q(...)", value_at(eg, 4), 4, 16, cap));
    return out;
}

/// Value patterns at z = 1/2 and 1/3 for the basis forms psi_(0,m)^(n), m <= mmax.
inline std::vector<CongruenceReport> basis_value_patterns(int mmax, long cap)
{
    std::vector<CongruenceReport> out;
    for (int m = 1; m <= mmax; ++m) {
        const auto rep = q0_basis(m, cap);
        for (std::size_t n = 0; n < rep.forms.size(); ++n) {
            const auto &s = rep.forms[n].series;
            const std::string name = "psi_0_" + std::to_string(m) + "^(" + std::to_string(n + 1) + ")";
            const auto [a2, b2] = detail::half_pattern(m);
            out.push_back(coefficient_congruence(name + "(1/2) = " + std::to_string(a2) + "c + " +
                                                     std::to_string(b2) + " q(...)",
                                                 value_at(s, 2), a2, b2, cap));
            const auto [a3, b3] = detail::third_pattern(m);
            out.push_back(coefficient_congruence(name + "(1/3) = " + std::to_string(a3) + "c + " +
                                                     std::to_string(b3) + " q(...)",
                                                 value_at(s, 3), a3, b3, cap));
        }
    }
    return out;
}

} // namespace jacobi
