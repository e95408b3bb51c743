#pragma once

#include <functional>
#include <future>
#include <string>
#include <vector>

#include "forms.hpp"
#include "genus.hpp"
#include "jet.hpp"
#include "lift.hpp"
#include "ring.hpp"
#include "specials.hpp"

namespace jacobi {

// ---------------------------------------------------------------------------
// Identities

template <class T>
CheckResult compare_jets(const UJet<T> &a, const UJet<T> &b, long upto)
{
    const std::size_t n = std::min(a.order(), b.order());
    for (std::size_t k = 0; k <= n; ++k) {
        auto c = compare_series(a[k], b[k], upto);
        if (!c.pass)
            return CheckResult::fail("u^" + std::to_string(k) + ": " + c.detail);
    }
    return CheckResult::ok("jets agree through u^" + std::to_string(n) + ", q^" + q_rat(upto).get_str());
}

inline YLaurent sym(std::initializer_list<std::pair<int, long>> terms)
{
    std::vector<YLaurent::Term> ts;
    for (const auto &[e, c] : terms) {
        ts.emplace_back(2 * e, Rat(c));
        if (e != 0)
            ts.emplace_back(-2 * e, Rat(c));
    }
    return YLaurent::from_terms(std::move(ts));
}

inline CheckResult compare_terms(const LaurentSeries &s, const std::vector<std::pair<long, YLaurent>> &expected)
{
    for (const auto &[e, want] : expected) {
        const auto &got = s.coeff(e);
        if (!(got == want))
            return CheckResult::fail("q^" + q_rat(e).get_str() + ": " + got.to_string() + " vs " + want.to_string());
    }
    return CheckResult::ok(std::to_string(expected.size()) + " coefficients match");
}

/// theta / eta^3 at y = e^w against w exp(-sum 2 G_2k w^2k / (2k)!).
inline CheckResult sigma_identity(std::size_t order, long cap)
{
    const auto lhs = substitute_exp_jet(phi_m1_half(cap), order);
    UJet<RatSeries<>> x(order);
    for (std::size_t k = 2; k <= order; k += 2)
        x[k] = eisenstein_G(static_cast<unsigned>(k), cap) * (-Rat(2) * inverse(factorial(static_cast<unsigned>(k))));
    const auto e = exp(x);
    UJet<RatSeries<>> rhs(order);
    for (std::size_t k = 1; k <= order; ++k)
        rhs[k] = e[k - 1];
    return compare_jets(lhs, rhs, cap);
}

/// jet_cocycle(theta) against theta exp(-sum P_n u^n / n!).
inline CheckResult wp_jet_identity(std::size_t order, long cap)
{
    const auto left = jet_cocycle(named_form("theta", cap + 24), order);
    const auto p = wp_jets(static_cast<unsigned>(order), cap + 24);
    UJet<RationalSeries> x(order);
    for (std::size_t n = 2; n <= order; ++n)
        x[n] = p[n - 2] * (-inverse(factorial(static_cast<unsigned>(n))));
    const UJet<RationalSeries> t(order, to_rational_functions(theta(cap + 24)));
    return compare_jets(left, t * exp(x), cap);
}


inline GeneratorPoly gen(Gen g, int e = 1) { return GeneratorPoly::generator(g, e); }

// ---------------------------------------------------------------------------
// Suites

struct SuiteCheck {
    std::string name;
    std::function<std::vector<NamedCheck>()> run;
};

struct Suite {
    std::string name;
    std::string description;
    std::vector<SuiteCheck> checks;
};

namespace detail {

inline SuiteCheck single(std::string name, std::function<CheckResult()> f)
{
    return {name, [name, f] { return std::vector<NamedCheck>{{name, f()}}; }};
}

inline SuiteCheck guarded(std::string name, std::function<std::vector<NamedCheck>()> f) { return {std::move(name), std::move(f)}; }

inline CheckResult basis_check(int m, long cap)
{
    const auto rep = q0_basis(m, cap);
    for (std::size_t n = 0; n < rep.forms.size(); ++n) {
        const auto want = psi_q0(m, static_cast<int>(n + 1));
        if (!(rep.forms[n].series.coeff(0) == want))
            return CheckResult::fail("psi_(0," + std::to_string(m) + ")^(" + std::to_string(n + 1) + ") q^0-term " +
                                     rep.forms[n].series.coeff(0).to_string());
    }
    return CheckResult::ok(std::to_string(rep.forms.size()) + " normal forms");
}

inline std::vector<Suite> build_suites()
{
    std::vector<Suite> s;
    const long q5 = 120, q6 = 144, q8 = 192, q10 = 240, q20 = 480;

    s.push_back({"core", "theta, eta and Eisenstein normalizations", {}});
    auto &core = s.back().checks;
    core.push_back(single("theta sum = theta product", [=] {
        return compare_series(theta_sum(q10), theta_product(q10), q10);
    }));
    core.push_back(single("eta^24 = Delta", [=] {
        return compare_series(pow(eta(q10), 24), delta(q10), q10);
    }));
    core.push_back(single("1728 Delta = E4^3 - E6^2", [=] {
        const auto e4 = eisenstein_E(4, q10), e6 = eisenstein_E(6, q10);
        return compare_series(delta(q10) * Rat(1728), pow(e4, 3) - e6 * e6, q10);
    }));
    core.push_back(single("theta/eta^3 at y = e^w = w exp(-sum 2 G_2k w^2k/(2k)!)", [=] { return sigma_identity(12, q6); }));
    core.push_back(single("jet_cocycle(theta) = theta exp(-sum P_n u^n/n!)", [=] { return wp_jet_identity(6, q5); }));

    s.push_back({"forms", "displayed expansions of the generators", {}});
    auto &forms = s.back().checks;
    forms.push_back(single("phi_0_2 q^0, q^1", [=] {
        return compare_terms(phi_0_2(24), {{0, sym({{1, 1}, {0, 4}})}, {24, sym({{3, 1}, {2, -8}, {1, -1}, {0, 16}})}});
    }));
    forms.push_back(single("phi_0_4 q^0, q^1", [=] {
        return compare_terms(phi_0_4(24), {{0, sym({{1, 1}, {0, 1}})}, {24, sym({{4, -1}, {3, -1}, {1, 1}, {0, 2}})}});
    }));
    forms.push_back(single("phi_0_1 q^1 = 10y^2 - 88y - 132 - 88y^-1 + 10y^-2", [=] {
        return compare_terms(phi_0_1(24), {{0, sym({{1, 1}, {0, 10}})}, {24, sym({{2, 10}, {1, -88}, {0, -132}})}});
    }));
    forms.push_back(single("phi_0_1 q^1 = 10y^2 - 64y + 108 - 64y^-1 + 10y^-2", [=] {
        return compare_terms(phi_0_1(24), {{24, sym({{2, 10}, {1, -64}, {0, 108}})}});
    }));
    forms.push_back(single("xi_0_6 = q (y^1/2 - y^-1/2)^12 + O(q^2)", [=] {
        const auto b = YLaurent::from_terms({{1, Rat(1)}, {-1, Rat(-1)}}).pow(12);
        return compare_terms(xi_0_6(48), {{0, YLaurent()}, {24, b}});
    }));
    forms.push_back(single("P_2 q^0 = 1/12 + y/(1-y)^2", [=] {
        const auto p = wp_jets(2, 24)[0].coeff(0);
        const auto y = YRational(YLaurent::monomial(2, 1));
        const auto one_minus = YRational(YLaurent::from_terms({{0, Rat(1)}, {2, Rat(-1)}}));
        const auto want = YRational(make_rat(1, 12)) + y * inverse(one_minus * one_minus);
        return p == want ? CheckResult::ok("match") : CheckResult::fail(p.to_string());
    }));
    forms.push_back(single("12 P_2 phi_m1_half^2 q^0 = y + 10 + y^-1", [=] {
        const auto p = wp_jets(2, 24)[0] * to_rational_functions(pow(phi_m1_half(24), 2)) * Rat(12);
        const auto c = p.coeff(0).to_laurent();
        return c == sym({{1, 1}, {0, 10}}) ? CheckResult::ok("match") : CheckResult::fail(c.to_string());
    }));

    s.push_back({"ring", "generator relations, bases and decompositions", {}});
    auto &ring = s.back().checks;
    ring.push_back(single("4 phi_0_4 = phi_0_1 phi_0_3 - phi_0_2^2", [=] {
        return compare_series(phi_0_4(q8) * Rat(4), phi_0_1(q8) * phi_0_3(q8) - pow(phi_0_2(q8), 2), q8);
    }));
    ring.push_back(single("xi_0_6 = -phi_0_1^2 phi_0_4 + 9 phi_0_1 phi_0_2 phi_0_3 - 8 phi_0_2^3 - 27 phi_0_3^2", [=] {
        const auto p = gen(Gen::phi_0_1, 2) * gen(Gen::phi_0_4) * Rat(-1) +
                       gen(Gen::phi_0_1) * gen(Gen::phi_0_2) * gen(Gen::phi_0_3) * Rat(9) -
                       gen(Gen::phi_0_2, 3) * Rat(8) - gen(Gen::phi_0_3, 2) * Rat(27);
        return compare_series(xi_0_6(q8), evaluate(p, q8).series, q8);
    }));
    for (int m = 1; m <= 8; ++m)
        ring.push_back(single("q^0 normal forms, index " + std::to_string(m), [=] { return basis_check(m, 72); }));
    ring.push_back(single("psi_(0,2)^(2) = phi_0_1^2 - 24 phi_0_2", [=] {
        const auto p = q0_basis(2, 72).polys[1].to_string();
        return p == "phi_0_1^2 - 24*phi_0_2" ? CheckResult::ok(p) : CheckResult::fail(p);
    }));
    ring.push_back(single("decompose(xi_0_6)", [=] {
        const auto p = decompose_weight0(named_form("xi_0_6", q5), 6).to_string();
        const std::string want = "-phi_0_1^2*phi_0_4 + 9*phi_0_1*phi_0_2*phi_0_3 - 8*phi_0_2^3 - 27*phi_0_3^2";
        return p == want ? CheckResult::ok(p) : CheckResult::fail(p);
    }));
    ring.push_back(single("phi_0_6, phi_0_8, phi_0_12 q^0-terms", [=] {
        const auto p6 = gen(Gen::phi_0_2) * gen(Gen::phi_0_4) - gen(Gen::phi_0_3, 2);
        const auto p8 = gen(Gen::phi_0_2) * p6 - gen(Gen::phi_0_4, 2);
        const auto p12 = gen(Gen::phi_0_4) * p8 - p6 * p6 * Rat(2);
        GeneratorCache cache(24);
        const YLaurent w6 = sym({{1, 1}}), w8 = sym({{1, 2}, {0, -1}}), w12 = sym({{1, 1}, {0, -1}});
        const auto g6 = evaluate(p6, cache).series.coeff(0), g8 = evaluate(p8, cache).series.coeff(0),
                   g12 = evaluate(p12, cache).series.coeff(0);
        if (!(g6 == w6) || !(g8 == w8) || !(g12 == w12))
            return CheckResult::fail(g6.to_string() + "; " + g8.to_string() + "; " + g12.to_string());
        return CheckResult::ok("match");
    }));
    ring.push_back(single("phi_0_1(tau, 2z) = phi_0_2^2 - 8 phi_0_4", [=] {
        const auto h = hecke_rescale(named_form("phi_0_1", q10), 2);
        return compare_series(h.series, phi_0_2(q10) * phi_0_2(q10) - phi_0_4(q10) * Rat(8), q10);
    }));
    ring.push_back(single("theta(tau, 2z)/theta(tau, z) = phi_0_3half", [=] {
        const auto h = hecke_rescale(named_form("theta", q10 + 24), 2);
        return compare_series(divide(h.series, theta(q10 + 24)), phi_0_3half(q10), q10);
    }));

    s.push_back({"eisenstein", "Jacobi-Eisenstein series from q^0-terms", {}});
    auto &eis = s.back().checks;
    eis.push_back(single("E_4,1 q^1 = y^2 + 56y + 126 + 56y^-1 + y^-2", [=] {
        const auto sol = solve_by_q0(4, 1, YLaurent(1), 48);
        if (!sol.unique())
            return CheckResult::fail("kernel is not trivial");
        return compare_terms(sol.form.series, {{0, YLaurent(1)}, {24, sym({{2, 1}, {1, 56}, {0, 126}})}});
    }));
    for (auto [k, m] : std::vector<std::pair<int, int>>{{4, 2}, {4, 3}, {6, 1}, {6, 2}})
        eis.push_back(single("E_" + std::to_string(k) + "," + std::to_string(m) + " unique", [k, m] {
            const auto sol = solve_by_q0(k, m, YLaurent(1), 48);
            return sol.unique() ? CheckResult::ok(sol.particular.to_string()) : CheckResult::fail("kernel dimension " + std::to_string(sol.kernel.size()));
        }));
    eis.push_back(single("(6,3) family with kernel Delta phi_m2_1^3", [=] {
        const auto sol = solve_by_q0(6, 3, YLaurent(1), 48);
        if (sol.kernel.size() != 1)
            return CheckResult::fail("kernel dimension " + std::to_string(sol.kernel.size()));
        const auto k = sol.kernel[0].to_string();
        return k == "phi_m2_1^3*Delta" ? CheckResult::ok(k) : CheckResult::fail(k);
    }));

    s.push_back({"elliptic", "elliptic transformation of every generator", {}});
    for (const char *name : {"theta", "phi_m1_half", "phi_m2_1", "phi_0_1", "phi_0_3half", "phi_0_2", "phi_0_3",
                             "phi_0_4", "xi_0_6", "theta_3half", "E4", "E6", "delta"})
        s.back().checks.push_back(single(std::string("elliptic ") + name, [name] {
            const auto f = named_form(name, 24 * 14);
            return elliptic_check(f);
        }));

    s.push_back({"level2", "theta-quotient identities", {}});
    auto &l2 = s.back().checks;
    l2.push_back(single("phi_0_1 = 4(xi00^2 + xi10^2 + xi01^2)", [=] {
        const auto a = xi00(q6), b = xi10(q6), c = xi01(q6);
        return compare_series(phi_0_1(q6), (a * a + b * b + c * c) * Rat(4), q6);
    }));
    l2.push_back(single("phi_0_3half = 4 xi00 xi10 xi01", [=] {
        return compare_series(phi_0_3half(q6), xi00(q6) * xi10(q6) * xi01(q6) * Rat(4), q6);
    }));
    l2.push_back(single("phi_0_3half = 2 xi00 xi10 xi01", [=] {
        return compare_series(phi_0_3half(q6), xi00(q6) * xi10(q6) * xi01(q6) * Rat(2), q6);
    }));
    l2.push_back(single("phi_0_2 = 2((xi00 xi10)^2 + (xi00 xi01)^2 + (xi10 xi01)^2)", [=] {
        const auto a = xi00(q6), b = xi10(q6), c = xi01(q6);
        const auto ab = a * b, ac = a * c, bc = b * c;
        return compare_series(phi_0_2(q6), (ab * ab + ac * ac + bc * bc) * Rat(2), q6);
    }));
    l2.push_back(single("gamma = 1 + O(q)", [=] {
        const auto g = gamma_series(24);
        return g.coeff(0) == 1 ? CheckResult::ok("1") : CheckResult::fail(g.coeff(0).get_str());
    }));
    l2.push_back(single("theta_3half product = eta theta(2z)/theta(z)", [=] {
        return compare_series(theta_3half_product(q10), theta_3half_quotient(q10), q10);
    }));

    s.push_back({"special", "values at torsion points and alpha, beta, gamma", {}});
    auto &sp = s.back().checks;
    sp.push_back(single("phi_0_m(tau, 0) = 12, 6, 4, 3", [=] {
        const long want[4] = {12, 6, 4, 3};
        const std::function<LaurentSeries(long)> f[4] = {phi_0_1, phi_0_2, phi_0_3, phi_0_4};
        for (int i = 0; i < 4; ++i) {
            const auto v = coarsen(restrict(JacobiForm(Half{}, Half::integer(i + 1), 0, f[i](q10)), 0, 0).rational());
            auto c = compare_series(v, RatSeries<>(Rat(want[i])), q10);
            if (!c.pass)
                return CheckResult::fail("phi_0_" + std::to_string(i + 1) + ": " + c.detail);
        }
        return CheckResult::ok("through q^10");
    }));
    sp.push_back(single("phi_0_2, phi_0_3, phi_0_4 at 1/2 = 2, 0, -1; phi_0_3, phi_0_4 at 1/3 = 1, 0; phi_0_4 at 1/4 = 1", [=] {
        struct V {
            std::function<LaurentSeries(long)> f;
            int m, n;
            long want;
        };
        const std::vector<V> vs = {{phi_0_2, 2, 2, 2}, {phi_0_3, 3, 2, 0}, {phi_0_4, 4, 2, -1},
                                   {phi_0_3, 3, 3, 1}, {phi_0_4, 4, 3, 0},  {phi_0_4, 4, 4, 1}};
        for (const auto &v : vs) {
            const auto r = restrict(JacobiForm(Half{}, Half::integer(v.m), 0, v.f(q10)), 0, make_rat(1, v.n));
            auto c = compare_series(coarsen(r.rational()), RatSeries<>(Rat(v.want)), q10);
            if (!c.pass)
                return CheckResult::fail("phi_0_" + std::to_string(v.m) + "(1/" + std::to_string(v.n) + "): " + c.detail);
        }
        return CheckResult::ok("through q^10");
    }));
    sp.push_back(single("alpha = 8 + 2^8 q + 2^11 q^2 + 11 2^10 q^3 + 3 2^14 q^4 + 359 2^9 q^5", [=] {
        const auto a = abg_functions(q5).alpha;
        const auto want = RatSeries<>::from_terms(
            {{0, Rat(8)}, {24, Rat(256)}, {48, Rat(2048)}, {72, Rat(11264)}, {96, Rat(49152)}, {120, Rat(183808)}}, q5);
        return compare_series(a, want, q5);
    }));
    sp.push_back(single("beta = 3 + 27 q + ...", [=] {
        const auto b = abg_functions(24).beta;
        return b.coeff(0) == 3 && b.coeff(24) == 27 ? CheckResult::ok("3, 27")
                                                      : CheckResult::fail(b.coeff(0).get_str() + ", " + b.coeff(24).get_str());
    }));
    sp.push_back(guarded("alpha, beta, gamma relations", [=] { return abg_checks(q10); }));

    s.push_back({"hauptmodul", "xi_0_6 at torsion points", {}});
    s.back().checks.push_back(guarded("Hauptmodul identities", [=] { return hauptmodul_checks(q10); }));

    s.push_back({"ahat", "values at z = -(tau+1)/2", {}});
    s.back().checks.push_back(guarded("A-hat values", [=] { return ahat_checks(q5); }));

    s.push_back({"congruence", "congruences of values and genera", {}});
    auto &cg = s.back().checks;
    auto as_checks = [](const std::vector<CongruenceReport> &rs) {
        std::vector<NamedCheck> out;
        for (const auto &r : rs) {
            std::string bad;
            for (const auto &[e, v] : r.residues)
                if (v != 0) {
                    bad = "residue " + v.get_str() + " at q^" + e.get_str();
                    break;
                }
            out.emplace_back(r.claim, r.pass ? CheckResult::ok(std::to_string(r.residues.size()) + " residues 0")
                                             : CheckResult::fail(bad));
        }
        return out;
    };
    cg.push_back(guarded("alpha - 8, beta - 3", [=] { return as_checks(abg_congruences(q20)); }));
    cg.push_back(guarded("K3", [=] { return as_checks(congruence_report(ManifoldData{2, {2, -20, 2}, {}}, q10)); }));
    cg.push_back(guarded("quintic", [=] {
        return as_checks(congruence_report(ManifoldData{3, {0, 100, -100, 0}, {}}, q10));
    }));
    cg.push_back(guarded("basis value patterns", [=] { return as_checks(basis_value_patterns(8, q10)); }));

    s.push_back({"genus", "elliptic genera and the modified Witten genus", {}});
    auto &gs = s.back().checks;
    gs.push_back(single("elliptic genus of K3 = 2 phi_0_1, e = 24", [=] {
        const auto r = elliptic_genus(ManifoldData{2, {2, -20, 2}, {}}, q5);
        const auto p = r.decomposition->to_string();
        const auto e = coarsen(restrict(r.core, 0, 0).rational());
        if (p != "2*phi_0_1" || !agree(e, RatSeries<>(Rat(24)), q5))
            return CheckResult::fail(p);
        return r.elliptic.pass ? CheckResult::ok(p) : r.elliptic;
    }));
    gs.push_back(single("elliptic genus of the quintic = -100 phi_0_3half", [=] {
        const auto r = elliptic_genus(ManifoldData{3, {0, 100, -100, 0}, {}}, q5);
        const auto p = r.decomposition->to_string();
        return p == "-100*phi_0_3half" ? CheckResult::ok(p) : CheckResult::fail(p);
    }));
    gs.push_back(single("mwg(d = 2, r = 2, S2 = -48) = 2 phi_0_1", [=] {
        CharData c{2, 2, {}};
        c.set("S2", -48);
        const auto r = mwg(c, q5);
        if (!r.decomposition || r.decomposition->to_string() != "2*phi_0_1")
            return CheckResult::fail(r.decomposition ? r.decomposition->to_string() : "no decomposition");
        return r.elliptic;
    }));
    gs.push_back(single("rank-0 genus core / (theta/eta)^4 = Witten genus / eta^8", [=] {
        CharData c{4, 0, {}};
        c.set("B4", 1);
        return witten_consistency(c, q5);
    }));

    s.push_back({"lift", "second-quantized elliptic genus and Delta_2", {}});
    auto &lf = s.back().checks;
    lf.push_back(single("sqeg(K3): p^0 = 1, p^1 = 2 phi_0_1", [=] {
        const auto z = sqeg_expand(phi_0_1(2 * 96) * Rat(2), 2, 96);
        auto c0 = compare_series(z.slices[0], LaurentSeries(Rat(1)), 96);
        if (!c0.pass)
            return c0;
        return compare_series(z.slices[1], phi_0_1(96) * Rat(2), 96);
    }));
    lf.push_back(single("Delta_2 coefficients at (1/4, +-1/2, 1/2) = +1, -1", [=] {
        const auto d = delta2_expand(13);
        return d.coeff(1, 1, 1) == 1 && d.coeff(1, -1, 1) == -1 && d.coeff(1, 3, 1) == 0
                   ? CheckResult::ok("1, -1")
                   : CheckResult::fail(d.coeff(1, 1, 1).get_str() + ", " + d.coeff(1, -1, 1).get_str());
    }));
    lf.push_back(single("Delta_2 first Fourier-Jacobi coefficient = eta^3 theta", [=] { return delta2_first_slice(delta2_expand(13)); }));
    lf.push_back(single("Delta_2 antisymmetric in l", [=] { return delta2_antisymmetry(delta2_expand(40)); }));
    return s;
}

} // namespace detail

inline const std::vector<Suite> &suites()
{
    static const std::vector<Suite> all = detail::build_suites();
    return all;
}

inline const Suite *find_suite(const std::string &name)
{
    for (const auto &s : suites())
        if (s.name == name)
            return &s;
    return nullptr;
}

/// Runs the checks concurrently; results come back in declaration order.
inline std::vector<NamedCheck> run_suite(const Suite &s)
{
    std::vector<std::future<std::vector<NamedCheck>>> jobs;
    for (const auto &c : s.checks)
        jobs.push_back(std::async(std::launch::async, [&c] {
            try {
                return c.run();
            } catch (const std::exception &e) {
                return std::vector<NamedCheck>{{c.name, CheckResult::fail(std::string("error: ") + e.what())}};
            }
        }));
    std::vector<NamedCheck> out;
    for (auto &j : jobs)
        for (auto &r : j.get())
            out.push_back(std::move(r));
    return out;
}

} // namespace jacobi
