#include <catch_amalgamated.hpp>

#include "oracles.hpp"

using namespace jacobi;

TEST_CASE("second-quantized elliptic genus of K3")
{
    const long qcap = 24 * 4, pmax = 2;
    const auto f = phi_0_1(sqeg_required_cap(pmax, qcap)) * Rat(2);
    const auto z = sqeg_expand(f, pmax, qcap);
    REQUIRE(z.pmax() == 2);
    CHECK(agree(z.slices[0], LaurentSeries(Rat(1)).truncated(qcap)));
    CHECK(agree(z.slices[1], f.truncated(qcap)));

    const auto ref = oracle::sqeg_product(f, pmax, 4);
    oracle::Table3 got;
    for (long p = 0; p <= pmax; ++p)
        for (const auto &[e, c] : z.slices[static_cast<std::size_t>(p)].terms())
            for (const auto &[l, v] : c.terms())
                got[{p, e / 24, l}] = v;
    CHECK(got == ref);
    CHECK(z.slices[2].coeff(0) ==
          YLaurent::from_terms({{4, Rat(3)}, {2, Rat(42)}, {0, Rat(234)}, {-2, Rat(42)}, {-4, Rat(3)}}));
    for (const auto &s : z.slices)
        for (const auto &[e, c] : s.terms())
            CHECK(c.has_integral_coefficients());
}

TEST_CASE("sqeg is multiplicative in the input")
{
    const long qcap = 24 * 2, pmax = 2;
    const long need = sqeg_required_cap(pmax, qcap);
    const auto a = phi_0_1(need), b = phi_0_2(need);
    const auto lhs = sqeg_expand(a + b, pmax, qcap);
    const auto rhs = sqeg_expand(a, pmax, qcap) * sqeg_expand(b, pmax, qcap);
    for (long p = 0; p <= pmax; ++p)
        CHECK(agree(lhs.slices[static_cast<std::size_t>(p)], rhs.slices[static_cast<std::size_t>(p)]));
}

TEST_CASE("sqeg rejects short or fractional input")
{
    CHECK_THROWS_AS(sqeg_expand(phi_0_1(24), 2, 24), cap_underflow);
    CHECK_THROWS_AS(sqeg_expand(phi_0_1(24 * 4) * make_rat(1, 2), 2, 24), math_error);
    CHECK_THROWS_AS(sqeg_expand(theta(24 * 4), 1, 24), math_error);
}

TEST_CASE("Delta_2")
{
    const auto s = delta2_expand(13);
    CHECK(s.coeff(1, 1, 1) == 1);
    CHECK(s.coeff(1, -1, 1) == -1);
    CHECK(s.coeff(1, 3, 1) == 0);
    CHECK(delta2_antisymmetry(s).pass);
    CHECK(delta2_first_slice(s).pass);

    const auto sl = s.slice(1);
    const auto ref = times_eta_power(theta(sl.cap() + 3), 3, sl.cap());
    CHECK(sl.cap() >= 24 * 3);
    CHECK(agree(sl, ref));
    CHECK(chi4(1) == 1);
    CHECK(chi4(3) == -1);
    CHECK(chi4(-1) == -1);
    CHECK(chi4(2) == 0);
}
