// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"

using namespace jacobi;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string &what)
    {
        if (!ok && pass) {
            pass = false;
            detail = what;
        }
    }
    void require(const CheckResult &c, const std::string &what)
    {
        require(c.pass, what + ": " + c.detail);
    }
};

GeneratorPoly g(Gen x, int e = 1) { return GeneratorPoly::generator(x, e); }

YLaurent sym_poly(std::initializer_list<std::pair<int, long>> ts)
{
    std::vector<YLaurent::Term> out;
    for (const auto &[e, c] : ts) {
        out.emplace_back(2 * e, Rat(c));
        if (e)
            out.emplace_back(-2 * e, Rat(c));
    }
    return YLaurent::from_terms(std::move(out));
}

const CheckResult *find_check(const std::vector<NamedCheck> &cs, const std::string &name)
{
    for (const auto &[n, c] : cs)
        if (n == name)
            return &c;
    return nullptr;
}

void require_named(Outcome &o, const std::vector<NamedCheck> &cs, const std::string &name)
{
    const auto *c = find_check(cs, name);
    if (!c)
        o.require(false, "missing check '" + name + "'");
    else
        o.require(*c, name);
}

const long Q = 24;

Outcome c1()
{
    Outcome o;
    const long cap = 10 * Q;
    o.require(compare_series(theta_sum(cap), theta_product(cap), cap), "sum vs product");
    o.require(oracle::table_of(theta_sum(cap), cap) == oracle::theta_sum(cap), "sum vs naive sum");
    o.require(oracle::table_of(theta_product(cap), cap) == oracle::theta_product(cap), "product vs naive product");
    if (o.pass)
        o.detail = "through q^10";
    return o;
}

Outcome c2()
{
    Outcome o;
    const auto r = sigma_identity(12, 6 * Q);
    o.require(r, "sigma identity");
    if (o.pass)
        o.detail = r.detail;
    return o;
}

Outcome c3()
{
    Outcome o;
    const auto r = wp_jet_identity(6, 5 * Q);
    o.require(r, "jet identity");
    if (o.pass)
        o.detail = r.detail;
    return o;
}

Outcome c4()
{
    Outcome o;
    const long cap = 8 * Q;
    const auto f1 = phi_0_1(cap), f2 = phi_0_2(cap), f3 = phi_0_3(cap), f4 = phi_0_4(cap);
    o.require(compare_series(f4 * Rat(4), f1 * f3 - f2 * f2, cap), "4 phi_0_4 relation");
    const auto rhs = f1 * f1 * f4 * Rat(-1) + f1 * f2 * f3 * Rat(9) - f2 * f2 * f2 * Rat(8) - f3 * f3 * Rat(27);
    o.require(compare_series(xi_0_6(cap), rhs, cap), "xi_0_6 formula");
    if (o.pass)
        o.detail = "through q^8";
    return o;
}

Outcome c5()
{
    Outcome o;
    for (int m = 1; m <= 8; ++m) {
        const auto rep = q0_basis(m, 3 * Q);
        for (int n = 1; n <= m; ++n)
            o.require(rep.forms[static_cast<std::size_t>(n - 1)].series.coeff(0) == psi_q0(m, n),
                      "psi_(0," + std::to_string(m) + ")^(" + std::to_string(n) + ") q^0-term");
        if (m == 2)
            o.require(rep.polys[1] == g(Gen::phi_0_1, 2) - g(Gen::phi_0_2) * Rat(24),
                      "psi_(0,2)^(2) = " + rep.polys[1].to_string());
    }
    if (o.pass)
        o.detail = "m = 1..8; psi_(0,2)^(2) = phi_0_1^2 - 24 phi_0_2";
    return o;
}

Outcome c6()
{
    Outcome o;
    const JacobiForm xi(Half{}, Half::integer(6), 0, xi_0_6(5 * Q));
    const auto p = decompose_weight0(xi, 6);
    const auto expect = g(Gen::phi_0_1, 2) * g(Gen::phi_0_4) * Rat(-1) +
                        g(Gen::phi_0_1) * g(Gen::phi_0_2) * g(Gen::phi_0_3) * Rat(9) - g(Gen::phi_0_2, 3) * Rat(8) -
                        g(Gen::phi_0_3, 2) * Rat(27);
    o.require(p == expect, "decompose(xi_0_6) = " + p.to_string());
    std::mt19937 rng(6);
    int trips = 0;
    for (int m = 1; m <= 8; ++m) {
        GeneratorCache cache(Q * ((m + 5) / 6 + 2));
        for (int t = 0; t < 50; ++t) {
            const auto q = oracle::random_weight0(m, rng);
            const auto back = decompose_weight0(evaluate(q, cache), m);
            o.require(back == canonicalize(q), "round trip at index " + std::to_string(m) + ": " + q.to_string());
            ++trips;
        }
    }
    if (o.pass)
        o.detail = p.to_string() + "; " + std::to_string(trips) + " round trips";
    return o;
}

Outcome c7()
{
    Outcome o;
    const auto f1 = phi_0_1(Q), f2 = phi_0_2(Q), f4 = phi_0_4(Q);
    o.require(f2.coeff(0) == sym_poly({{1, 1}, {0, 4}}), "phi_0_2 q^0");
    o.require(f2.coeff(Q) == sym_poly({{3, 1}, {2, -8}, {1, -1}, {0, 16}}), "phi_0_2 q^1");
    o.require(f4.coeff(0) == sym_poly({{1, 1}, {0, 1}}), "phi_0_4 q^0");
    o.require(f4.coeff(Q) == sym_poly({{4, -1}, {3, -1}, {1, 1}, {0, 2}}), "phi_0_4 q^1");
    const auto want = sym_poly({{2, 10}, {1, -88}, {0, -132}});
    o.require(f1.coeff(Q) == want, "phi_0_1 q^1 is " + f1.coeff(Q).to_string() + ", expected " + want.to_string());
    if (o.pass)
        o.detail = "q^0, q^1 terms";
    return o;
}

Outcome c8()
{
    Outcome o;
    const ManifoldData k3{2, {2, -20, 2}, {}};
    const auto r = elliptic_genus(k3, 4 * Q);
    o.require(r.decomposition && *r.decomposition == g(Gen::phi_0_1) * Rat(2), "EG(K3) = 2 phi_0_1");
    o.require(restrict(r.core, 0, 0).rational().coeff(0) == 24, "Euler value 24");
    for (const auto &c : congruence_report(k3, 10 * Q))
        o.require(c.pass, "K3: " + c.claim);
    const ManifoldData quintic{3, {0, 100, -100, 0}, {}};
    const auto rq = congruence_report(quintic, 10 * Q);
    o.require(!rq.empty() && rq[0].pass && quintic.euler() * 3 == -600, "quintic d*e = -600 = 0 mod 24");
    if (o.pass)
        o.detail = "2*phi_0_1, e = 24; K3 mod 24 and mod 8; quintic d*e = -600";
    return o;
}

Outcome c9()
{
    Outcome o;
    CharData c;
    c.d = 2;
    c.r = 2;
    c.set("S2", Rat(-48));
    const auto r = mwg(c, 4 * Q);
    o.require(compare_series(r.core.series, phi_0_1(4 * Q) * Rat(2), 4 * Q), "mwg = 2 phi_0_1");
    o.require(elliptic_check(r.core), "elliptic check");
    for (const auto &[e, v] : r.core.series.terms())
        o.require(v.has_integral_coefficients(), "integral Laurent coefficients");
    if (o.pass)
        o.detail = "2*phi_0_1, elliptic, pole-free";
    return o;
}

Outcome c10()
{
    Outcome o;
    const auto cs = run_suite(*find_suite("special"));
    for (const auto &name : {"phi_0_m(tau, 0) = 12, 6, 4, 3",
                             "phi_0_2, phi_0_3, phi_0_4 at 1/2 = 2, 0, -1; phi_0_3, phi_0_4 at 1/3 = 1, 0; phi_0_4 at 1/4 = 1",
                             "alpha = 8 + 2^8 q + 2^11 q^2 + 11 2^10 q^3 + 3 2^14 q^4 + 359 2^9 q^5",
                             "alpha = 16 gamma^4 - 8"})
        require_named(o, cs, name);
    if (o.pass)
        o.detail = "z = 0, 1/2, 1/3, 1/4; alpha through q^10";
    return o;
}

Outcome c11()
{
    Outcome o;
    const auto cs = hauptmodul_checks(10 * Q);
    for (const auto &name : {"xi_0_6(1/2) = 2^12 Delta(2t)/Delta(t)", "xi_0_6(1/3)^2 = 3^12 Delta(3t)/Delta(t)",
                             "xi_0_6(1/4)^2 = 2^12 Delta(4t)/Delta(t)",
                             "xi_0_6(1/6)^2 = Delta(t)Delta(6t)/(Delta(2t)Delta(3t))",
                             "alpha^2 - 64 = 2^12 Delta(2t)/Delta(t)", "(beta^3 - 27)^2 = 3^12 Delta(3t)/Delta(t)"})
        require_named(o, cs, name);
    if (o.pass)
        o.detail = "through q^10";
    return o;
}

Outcome c12()
{
    Outcome o;
    for (const auto &r : abg_congruences(20 * Q))
        o.require(r.pass, r.claim);
    if (o.pass)
        o.detail = "through q^20";
    return o;
}

Outcome c13()
{
    Outcome o;
    const auto cs = ahat_checks(5 * Q);
    for (const auto &[n, c] : cs)
        o.require(c, n);
    if (o.pass)
        o.detail = "through q^5";
    return o;
}

Outcome c14()
{
    Outcome o;
    const long cap = 10 * Q;
    o.require(compare_series(theta_3half_product(cap), theta_3half_quotient(cap), cap), "quintuple product");
    if (o.pass)
        o.detail = "through q^10";
    return o;
}

Outcome c15()
{
    Outcome o;
    const long cap = 6 * Q;
    const auto a = xi00(cap), b = xi10(cap), c = xi01(cap);
    o.require(compare_series((a * a + b * b + c * c) * Rat(4), phi_0_1(cap), cap), "phi_0_1 = 4 sum xi^2");
    o.require(compare_series(a * b * c * Rat(4), phi_0_3half(cap), cap), "phi_0_3half = 4 xi00 xi10 xi01");
    o.require(compare_series((a * a * b * b + a * a * c * c + b * b * c * c) * Rat(2), phi_0_2(cap), cap),
              "phi_0_2 = 2 sum (xi xi)^2");
    if (o.pass)
        o.detail = "through q^6";
    return o;
}

Outcome c16()
{
    Outcome o;
    const long qcap = 4 * Q, pmax = 2;
    const auto f = elliptic_genus(ManifoldData{2, {2, -20, 2}, {}}, sqeg_required_cap(pmax, qcap)).core.series;
    ThreeVarSeries z;
    try {
        z = sqeg_expand(f, pmax, qcap);
    } catch (const math_error &e) {
        o.require(false, std::string("integrality: ") + e.what());
        return o;
    }
    o.require(compare_series(z.slices[0], LaurentSeries(Rat(1)), qcap), "p^0 slice");
    o.require(compare_series(z.slices[1], f, qcap), "p^1 slice");
    oracle::Table3 got;
    for (long p = 0; p <= pmax; ++p)
        for (const auto &[e, c] : z.slices[static_cast<std::size_t>(p)].terms())
            for (const auto &[l, v] : c.terms())
                got[{p, e / Q, l}] = v;
    o.require(got == oracle::sqeg_product(f, pmax, 4), "p^2 slice vs finite product");
    if (o.pass)
        o.detail = "p^0, p^1, p^2 through q^4";
    return o;
}

Outcome c17()
{
    Outcome o;
    const auto s = delta2_expand(13);
    o.require(s.coeff(1, 1, 1) == 1 && s.coeff(1, -1, 1) == -1, "coefficients at (1/4, +-1/2, 1/2)");
    o.require(delta2_first_slice(s), "m = 1 slice");
    o.require(s.slice(1).cap() >= 3 * Q, "slice reaches q^3");
    o.require(delta2_antisymmetry(s), "antisymmetry");
    if (o.pass)
        o.detail = std::to_string(s.coeffs.size()) + " coefficients";
    return o;
}

Outcome c18()
{
    Outcome o;
    const std::vector<std::string> gens = {"theta",   "phi_m1_half", "phi_m2_1", "phi_0_1",     "phi_0_3half",
                                           "phi_0_2", "phi_0_3",     "phi_0_4",  "xi_0_6",      "theta_3half",
                                           "E4",      "E6",          "delta"};
    for (const auto &name : gens)
        o.require(elliptic_check(named_form(name, 16 * Q)), name);
    if (o.pass)
        o.detail = std::to_string(gens.size()) + " generators";
    return o;
}

Outcome c19()
{
    Outcome o;
    const auto e41 = solve_by_q0(4, 1, YLaurent(1), 3 * Q);
    o.require(e41.unique(), "E_4,1 unique");
    std::vector<YLaurent::Term> ts;
    for (const auto &[l, n] : oracle::e8_pairing_counts())
        ts.emplace_back(2 * l, Rat(n));
    const auto want = YLaurent::from_terms(ts);
    o.require(want == sym_poly({{2, 1}, {1, 56}, {0, 126}}), "E8 root oracle");
    o.require(e41.form.series.coeff(Q) == want, "E_4,1 q^1 = " + e41.form.series.coeff(Q).to_string());
    const auto e63 = solve_by_q0(6, 3, YLaurent(1), 3 * Q);
    const auto k = g(Gen::phi_m2_1, 3) * g(Gen::Delta);
    o.require(e63.kernel.size() == 1 && (e63.kernel[0] == k || e63.kernel[0] * Rat(-1) == k),
              "(6,3) kernel Delta phi_m2_1^3");
    if (o.pass)
        o.detail = "q^1 = " + want.to_string() + "; (6,3) kernel 1-dimensional";
    return o;
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"theta sum = theta product", c1},
        {"theta/eta^3 at y = e^w", c2},
        {"jet identity", c3},
        {"4 phi_0_4 relation and xi_0_6 formula", c4},
        {"q^0 basis normal forms", c5},
        {"decompose xi_0_6 and random round trips", c6},
        {"displayed q^0, q^1 terms of phi_0_2, phi_0_4, phi_0_1", c7},
        {"elliptic genera and Euler-number congruences", c8},
        {"modified Witten genus of K3", c9},
        {"special values and alpha", c10},
        {"Hauptmodul identities", c11},
        {"alpha, beta congruences", c12},
        {"values at -(tau+1)/2", c13},
        {"quintuple product", c14},
        {"level-2 identities", c15},
        {"second-quantized elliptic genus", c16},
        {"Delta_2", c17},
        {"elliptic transformation of the generators", c18},
        {"E_4,1 and the (6,3) family", c19},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failed += !o.pass;
        std::cout << (o.pass ? "PASS " : "FAIL ") << (i + 1 < 10 ? " " : "") << i + 1 << ". " << criteria[i].first
                  << "  [" << o.detail << "]\n";
    }
    std::cout << criteria.size() - static_cast<std::size_t>(failed) << "/" << criteria.size() << " criteria pass\n";
    return failed ? 1 : 0;
}
