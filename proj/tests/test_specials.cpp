#include <catch_amalgamated.hpp>

#include "oracles.hpp"

using namespace jacobi;

namespace {

bool all_pass(const std::vector<NamedCheck> &cs, const std::string &skip = {})
{
    for (const auto &[n, c] : cs)
        if (!c.pass && (skip.empty() || n.find(skip) == std::string::npos)) {
            UNSCOPED_INFO(n << ": " << c.detail);
            return false;
        }
    return true;
}

RatSeries<> constant(long c, long cap) { return RatSeries<>(Rat(c)).truncated(cap); }

} // namespace

TEST_CASE("values at torsion points")
{
    const long cap = 24 * 10;
    const std::vector<std::string> names = {"phi_0_1", "phi_0_2", "phi_0_3", "phi_0_4"};
    const long at0[] = {12, 6, 4, 3};
    for (std::size_t i = 0; i < 4; ++i)
        CHECK(agree(restrict(named_form(names[i], cap), 0, 0).rational(), refine<kRestrictDen>(constant(at0[i], cap))));

    CHECK(agree(value_at(phi_0_2(cap), 2), constant(2, cap)));
    CHECK(agree(value_at(phi_0_3(cap), 2), constant(0, cap)));
    CHECK(agree(value_at(phi_0_4(cap), 2), constant(-1, cap)));
    CHECK(agree(value_at(phi_0_3(cap), 3), constant(1, cap)));
    CHECK(agree(value_at(phi_0_4(cap), 3), constant(0, cap)));
    CHECK(agree(value_at(phi_0_4(cap), 4), constant(1, cap)));

    const auto r = restrict(named_form("phi_0_4", cap), 0, make_rat(1, 2)).rational();
    CHECK(agree(coarsen(r), constant(-1, cap)));
}

TEST_CASE("restriction is multiplicative")
{
    const long cap = 24 * 6;
    const auto a = named_form("phi_0_1", cap), b = named_form("phi_0_2", cap);
    for (const Rat mu : {Rat(0), make_rat(1, 2), make_rat(1, 3), make_rat(1, 4), make_rat(1, 6)}) {
        const auto lhs = restrict(a * b, 0, mu).value();
        const auto rhs = restrict(a, 0, mu).value() * restrict(b, 0, mu).value();
        CHECK(agree(lhs, rhs));
    }
    const auto lhs = restrict(a * b, make_rat(1, 2), 0).value();
    const auto rhs = restrict(a, make_rat(1, 2), 0).value() * restrict(b, make_rat(1, 2), 0).value();
    CHECK(agree(lhs, rhs, std::min(lhs.cap(), rhs.cap())));
    CHECK_THROWS_AS(restrict(a, 0, make_rat(1, 5)), math_error);
}

TEST_CASE("alpha, beta, gamma")
{
    const long cap = 24 * 10;
    const auto f = abg_functions(cap);
    const long alpha[] = {8, 256, 2048, 11264, 49152, 183808};
    for (long k = 0; k < 6; ++k)
        CHECK(f.alpha.coeff(24 * k) == alpha[k]);
    CHECK(f.beta.coeff(0) == 3);
    CHECK(f.beta.coeff(24) == 27);
    CHECK(f.gamma.coeff(0) == 1);
    const auto g2 = f.gamma * f.gamma;
    CHECK(agree(f.alpha, g2 * g2 * Rat(16) - constant(8, cap)));
    CHECK(all_pass(abg_checks(cap)));
}

TEST_CASE("Hauptmoduln")
{
    const auto cs = hauptmodul_checks(24 * 10);
    CHECK(all_pass(cs, "Delta(4t)/Delta(t)"));
    bool verbatim_fails = false;
    for (const auto &[n, c] : cs)
        if (n.find("Delta(4t)/Delta(t)") != std::string::npos)
            verbatim_fails = !c.pass;
    CHECK(verbatim_fails);
}

TEST_CASE("values at -(tau+1)/2")
{
    const long cap = 24 * 5;
    const auto v = ahat_values(cap);
    CHECK(agree(v.phi[2], RatSeries<>::zero(cap)));
    CHECK(agree(v.phi[3], constant(-1, cap)));
    CHECK(agree(v.phi[1], constant(-2, cap)));
    CHECK(v.phi[0].coeff(-6) == -1);
    CHECK(v.phi[0].coeff(6) == 20);
    CHECK(all_pass(ahat_checks(cap)));
}

TEST_CASE("congruences")
{
    for (const auto &r : abg_congruences(24 * 20))
        CHECK(r.pass);

    ManifoldData k3{2, {2, -20, 2}, {}};
    for (const auto &r : congruence_report(k3, 24 * 10)) {
        INFO(r.claim);
        CHECK(r.pass);
    }
    ManifoldData quintic{3, {0, 100, -100, 0}, {}};
    const auto q = congruence_report(quintic, 24 * 10);
    REQUIRE_FALSE(q.empty());
    CHECK(q[0].pass);
    CHECK(q[0].residues.at(0).second == 0);

    ManifoldData zero{2, {0, 0, 0}, {}};
    for (const auto &r : congruence_report(zero, 24 * 5)) {
        CHECK(r.pass);
        for (const auto &[e, v] : r.residues)
            CHECK(v == 0);
    }

    ManifoldData odd{2, {1, -10, 1}, {}};
    bool any_fail = false;
    for (const auto &r : congruence_report(odd, 24 * 5))
        any_fail = any_fail || !r.pass;
    CHECK(any_fail);
}

TEST_CASE("basis value patterns")
{
    for (const auto &r : basis_value_patterns(8, 24 * 4)) {
        INFO(r.claim);
        CHECK(r.pass);
    }
}
