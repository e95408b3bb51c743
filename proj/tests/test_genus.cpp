#include <catch_amalgamated.hpp>

#include "oracles.hpp"

using namespace jacobi;

namespace {

ManifoldData from_hodge(const std::vector<std::vector<long>> &h)
{
    ManifoldData m;
    m.d = static_cast<int>(h.size()) - 1;
    m.chi = oracle::chi_from_hodge(h);
    return m;
}

const std::vector<std::vector<long>> kK3 = {{1, 0, 1}, {0, 20, 0}, {1, 0, 1}};
const std::vector<std::vector<long>> kQuintic = {{1, 0, 0, 1}, {0, 1, 101, 0}, {0, 101, 1, 0}, {1, 0, 0, 1}};

} // namespace

TEST_CASE("chi_y q^0-terms")
{
    const auto k3 = from_hodge(kK3);
    CHECK(k3.chi == std::vector<Int>{2, -20, 2});
    CHECK(chi_y_q0(k3) == YLaurent::from_terms({{2, Rat(2)}, {0, Rat(20)}, {-2, Rat(2)}}));
    CHECK(chi_y_q0(ManifoldData{0, {1}, {}}) == YLaurent(1));
    CHECK(chi_y_q0(ManifoldData{3, {0, 0, 0, 0}, {}}).is_zero());
}

TEST_CASE("elliptic genera of K3, the quintic and a point")
{
    const auto k3 = elliptic_genus(from_hodge(kK3), 24 * 4);
    REQUIRE(k3.decomposition);
    CHECK(*k3.decomposition == GeneratorPoly::generator(Gen::phi_0_1) * Rat(2));
    CHECK(agree(k3.core.series, phi_0_1(24 * 4) * Rat(2)));
    CHECK(k3.elliptic.pass);
    CHECK(restrict(k3.core, 0, 0).rational().coeff(0) == 24);

    const auto qd = from_hodge(kQuintic);
    CHECK(qd.euler() == oracle::euler_from_hodge(kQuintic));
    CHECK(qd.euler() == -200);
    const auto q = elliptic_genus(qd, 24 * 4);
    REQUIRE(q.decomposition);
    CHECK(*q.decomposition == GeneratorPoly::generator(Gen::phi_0_3half) * Rat(-100));

    const auto cy = elliptic_genus(ManifoldData{3, {0, 1, -1, 0}, {}}, 24 * 4);
    CHECK(agree(cy.core.series, phi_0_3half(24 * 4) * Rat(-1)));

    const auto pt = elliptic_genus(ManifoldData{0, {1}, {}}, 24 * 2);
    CHECK(agree(pt.core.series, LaurentSeries(Rat(1)).truncated(pt.core.series.cap())));
}

TEST_CASE("Serre-duality warnings")
{
    ManifoldData m{2, {2, -20, 3}, {}};
    CHECK_FALSE(m.warnings().empty());
    CHECK(from_hodge(kK3).warnings().empty());
}

TEST_CASE("index-6 genera need extra coefficients")
{
    // phi_0_1^6 and phi_0_1^6 + xi_0_6 share their q^0-term
    const long cap = 24 * 4;
    GeneratorCache cache(cap);
    const auto base = GeneratorPoly::generator(Gen::phi_0_1, 6);
    const auto with_xi = evaluate(base, cache).series + xi_0_6(cap);
    ManifoldData m;
    m.d = 12;
    for (int p = 0; p <= 12; ++p)
        m.chi.push_back(Int(0));
    const auto q0 = with_xi.coeff(0);
    for (const auto &[e, c] : q0.terms()) {
        const int p = (12 - e) / 2;
        m.chi[static_cast<std::size_t>(p)] = (p % 2 ? -1 : 1) * c.get_num();
    }
    CHECK_THROWS(elliptic_genus(m, cap));
    m.extra.push_back({Rat(1), Rat(6), with_xi.coeff(24).coeff(12).get_num()});
    const auto r = elliptic_genus(m, cap);
    CHECK(agree(r.core.series, with_xi));
}

TEST_CASE("modified Witten genus")
{
    const long cap = 24 * 4;
    CharData k3;
    k3.d = 2;
    k3.r = 2;
    k3.set("S2", Rat(-48));
    const auto r = mwg(k3, cap);
    CHECK(r.prefactor_exponent == 0);
    CHECK(agree(r.core.series, elliptic_genus(from_hodge(kK3), cap).core.series));
    CHECK(r.elliptic.pass);
    for (const auto &[e, c] : r.core.series.terms())
        CHECK(c.has_integral_coefficients());

    CharData five = k3;
    five.r = 5;
    five.pairing.clear();
    five.set("S2", Rat(24));
    const auto r5 = mwg(five, cap);
    CHECK(r5.prefactor_exponent == 3);
    REQUIRE(r5.decomposition);
    REQUIRE(r5.decomposition->terms().size() == 1);
    CHECK(r5.decomposition->terms().begin()->first == GeneratorPoly::generator(Gen::phi_0_1).terms().begin()->first);

    CharData point;
    CHECK(agree(mwg(point, cap).core.series, LaurentSeries(Rat(1)).truncated(cap)));
}

TEST_CASE("rank-0 Witten genus")
{
    const long cap = 24 * 4;
    CharData two;
    two.d = 2;
    CHECK(witten_rank0(two, cap).is_zero());

    CharData four;
    four.d = 4;
    four.set("B4", Rat(5));
    const auto w = witten_rank0(four, cap);
    const auto expect = divide(eisenstein_G(4, cap) * make_rat(2 * 5, 24), eta_power(8, cap));
    CHECK(agree(w, expect, cap));
    CHECK(witten_consistency(four, cap).pass);

    CharData s_in_rank0 = four;
    s_in_rank0.pairing.clear();
    CHECK_THROWS(s_in_rank0.set("B3", Rat(1)));
}

TEST_CASE("characteristic-number symbols")
{
    CHECK(monomial_key(parse_monomial("S2*B4")) == monomial_key(parse_monomial("B4*S2")));
    CHECK(symbol_monomials(0, true).size() == 1);
    CHECK(symbol_monomials(2, false).empty());
    CHECK(symbol_monomials(4, false).size() == 1);
    CHECK(symbol_monomials(4, true).size() == 3);
}
