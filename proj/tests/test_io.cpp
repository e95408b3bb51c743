#include <catch_amalgamated.hpp>

#include "oracles.hpp"

using namespace jacobi;

TEST_CASE("series serialization")
{
    CHECK(series_to_json(LaurentSeries(Rat(1))) == json::parse(R"([["0", [["0", "1"]]]])"));

    const auto t = series_to_json(theta(24));
    CHECK(t.at(0) == json::parse(R"(["1/8", [["-1/2", "-1"], ["1/2", "1"]]])"));

    const auto f4 = series_to_json(phi_0_4(0));
    CHECK(f4 == json::parse(R"([["0", [["-1", "1"], ["0", "1"], ["1", "1"]]]])"));
}

TEST_CASE("json round trip")
{
    for (const auto &name : {"theta", "phi_0_1", "phi_0_3half", "xi_0_6", "E4"}) {
        const auto f = named_form(name, 24 * 4);
        const auto back = form_from_json(form_to_json(f));
        CHECK(back.weight == f.weight);
        CHECK(back.index == f.index);
        CHECK(back.eta_character == f.eta_character);
        CHECK(back.series.cap() == f.series.cap());
        CHECK(agree(back.series, f.series));
    }
    const auto exact = JacobiForm::constant(3);
    CHECK(form_from_json(form_to_json(exact)).series.is_exact());
}

TEST_CASE("input files")
{
    const auto m = manifold_from_json(json::parse(R"({"kind": "chi", "d": 2, "chi": [2, -20, 2]})"));
    CHECK(m.euler() == 24);
    CHECK_THROWS_AS(manifold_from_json(json::parse(R"({"kind": "chi", "d": 2, "chi": [2, -20]})")), schema_error);
    CHECK_THROWS_AS(manifold_from_json(json::parse(R"({"kind": "char", "d": 2})")), schema_error);
    CHECK_THROWS_AS(manifold_from_json(json::parse(R"({"kind": "chi", "d": 1, "chi": ["1/2", 0]})")), schema_error);

    const auto c = chardata_from_json(json::parse(R"({"kind": "char", "d": 2, "r": 2, "pairs": {"S2": "-48"}})"));
    CHECK(c.pairing.at("S2") == -48);
    CHECK_THROWS_AS(chardata_from_json(json::parse(R"({"kind": "char", "d": 4, "r": 2, "pairs": {"S4": "1"}})")),
                    schema_error);
    CHECK_THROWS_AS(chardata_from_json(json::parse(R"({"kind": "char", "d": 2, "r": 2, "pairs": {"S3": "1"}})")),
                    schema_error);

    CHECK_THROWS_AS(form_from_json(json::parse(
                        R"({"kind": "series", "weight": "0", "index": "1", "qcap": "1", "series": [["1/5", []]]})")),
                    schema_error);
    CHECK_THROWS_AS(read_json_file("/nonexistent/file.json"), schema_error);
}

TEST_CASE("text rendering")
{
    const auto s = series_text(phi_0_1(24));
    CHECK(s == "q^0: y + 10 + y^-1\nq^1: 10y^2 - 64y + 108 - 64y^-1 + 10y^-2\n");
}
