#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "genus.hpp"
#include "series.hpp"

namespace jacobi {

using json = nlohmann::json;

/// Malformed input files and arguments.
struct schema_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline std::string rat_string(const Rat &r) { return r.get_str(); }

inline Rat rat_from_json(const json &j)
{
    try {
        if (j.is_string())
            return parse_rat(j.get<std::string>());
        if (j.is_number_integer())
            return Rat(j.get<long>());
    } catch (const std::exception &e) {
        throw schema_error(std::string("bad rational: ") + e.what());
    }
    throw schema_error("expected a rational as a \"num/den\" string, got " + j.dump());
}

template <long Den>
json series_to_json(const FourierSeries<YLaurent, Den> &s)
{
    json out = json::array();
    for (const auto &[e, c] : s.terms()) {
        json row = json::array();
        for (const auto &[l, v] : c.terms())
            row.push_back({rat_string(make_rat(l, 2)), rat_string(v)});
        out.push_back({rat_string(q_rat<Den>(e)), row});
    }
    return out;
}

template <long Den>
json series_to_json(const RatSeries<Den> &s)
{
    json out = json::array();
    for (const auto &[e, c] : s.terms())
        out.push_back({rat_string(q_rat<Den>(e)), rat_string(c)});
    return out;
}

template <long Den = 24>
FourierSeries<YLaurent, Den> series_from_json(const json &j, long cap)
{
    if (!j.is_array())
        throw schema_error("series must be an array of [qexp, [[yexp, coeff], ...]]");
    std::vector<typename FourierSeries<YLaurent, Den>::Term> ts;
    for (const auto &row : j) {
        if (!row.is_array() || row.size() != 2 || !row[1].is_array())
            throw schema_error("series entry must be [qexp, [[yexp, coeff], ...]]");
        const Rat q = rat_from_json(row[0]);
        if (!is_integral(q * Den))
            throw schema_error("q-exponent " + q.get_str() + " is outside the 1/" + std::to_string(Den) + " lattice");
        std::vector<YLaurent::Term> ys;
        for (const auto &t : row[1]) {
            if (!t.is_array() || t.size() != 2)
                throw schema_error("y-term must be [yexp, coeff]");
            const Rat l2 = 2 * rat_from_json(t[0]);
            if (!is_integral(l2))
                throw schema_error("y-exponents must be half-integers");
            ys.emplace_back(static_cast<int>(to_long(l2.get_num())), rat_from_json(t[1]));
        }
        ts.emplace_back(q_units<Den>(q), YLaurent::from_terms(std::move(ys)));
    }
    return FourierSeries<YLaurent, Den>::from_terms(std::move(ts), cap);
}

/// One line per q-power: "q^0: y + 10 + y^-1".
template <long Den>
std::string series_text(const FourierSeries<YLaurent, Den> &s)
{
    std::ostringstream os;
    for (const auto &[e, c] : s.terms())
        os << "q^" << q_rat<Den>(e).get_str() << ": " << c.to_string() << "\n";
    return os.str();
}

template <long Den>
std::string series_text(const RatSeries<Den> &s)
{
    std::ostringstream os;
    for (const auto &[e, c] : s.terms())
        os << "q^" << q_rat<Den>(e).get_str() << ": " << c.get_str() << "\n";
    return os.str();
}

template <long Den>
std::string series_text(const CycloSeries<Den> &s)
{
    std::ostringstream os;
    for (const auto &[e, c] : s.terms())
        os << "q^" << q_rat<Den>(e).get_str() << ": " << c.to_string() << "\n";
    return os.str();
}

// ---------------------------------------------------------------------------
// Input files

inline json read_json_file(const std::string &path)
{
    std::ifstream in(path);
    if (!in)
        throw schema_error("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error &e) {
        throw schema_error(path + ": " + e.what());
    }
}

inline const json &field(const json &j, const char *key)
{
    if (!j.is_object() || !j.contains(key))
        throw schema_error(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

inline int int_field(const json &j, const char *key)
{
    const auto &v = field(j, key);
    if (!v.is_number_integer())
        throw schema_error(std::string("field \"") + key + "\" must be an integer");
    return v.get<int>();
}

inline std::string kind_of(const json &j)
{
    const auto &k = field(j, "kind");
    if (!k.is_string())
        throw schema_error("\"kind\" must be a string");
    return k.get<std::string>();
}

/// {"kind": "chi", "d": 2, "chi": [2, -20, 2], "extra": [{"n": "1", "l": "0", "value": "..."}]}
inline ManifoldData manifold_from_json(const json &j)
{
    if (kind_of(j) != "chi")
        throw schema_error("expected a manifold file of kind \"chi\"");
    ManifoldData m;
    m.d = int_field(j, "d");
    if (m.d < 0)
        throw schema_error("d must be nonnegative");
    const auto &chi = field(j, "chi");
    if (!chi.is_array() || chi.size() != static_cast<std::size_t>(m.d + 1))
        throw schema_error("\"chi\" must list d+1 values chi_0..chi_d");
    for (const auto &c : chi) {
        const Rat v = rat_from_json(c);
        if (!is_integral(v))
            throw schema_error("chi_p must be integers");
        m.chi.push_back(v.get_num());
    }
    if (j.contains("extra")) {
        for (const auto &x : j.at("extra")) {
            const Rat v = rat_from_json(field(x, "value"));
            if (!is_integral(v))
                throw schema_error("extra coefficient values must be integers");
            m.extra.push_back({rat_from_json(field(x, "n")), rat_from_json(field(x, "l")), v.get_num()});
        }
    }
    return m;
}

/// {"kind": "char", "d": 2, "r": 2, "pairs": {"S2": "-48"}}
inline CharData chardata_from_json(const json &j)
{
    if (kind_of(j) != "char")
        throw schema_error("expected a characteristic-number file of kind \"char\"");
    CharData c;
    c.d = int_field(j, "d");
    c.r = int_field(j, "r");
    if (c.d < 0 || c.r < 0)
        throw schema_error("d and r must be nonnegative");
    const auto &pairs = field(j, "pairs");
    if (!pairs.is_object())
        throw schema_error("\"pairs\" must map monomials to rationals");
    for (const auto &[k, v] : pairs.items()) {
        try {
            c.set(k, rat_from_json(v));
        } catch (const std::invalid_argument &e) {
            throw schema_error(e.what());
        }
    }
    std::string missing;
    for (const auto &m : symbol_monomials(c.d, c.r > 0))
        if (!m.empty() && !c.pairing.count(monomial_key(m)))
            missing += (missing.empty() ? "" : ", ") + monomial_key(m);
    if (!missing.empty())
        throw schema_error("missing pairing values for: " + missing);
    return c;
}

/// {"kind": "series", "weight": "0", "index": "1", "qcap": "3", "series": [...]}
inline JacobiForm form_from_json(const json &j)
{
    if (kind_of(j) != "series")
        throw schema_error("expected a series file of kind \"series\"");
    const Rat w = rat_from_json(field(j, "weight")), t = rat_from_json(field(j, "index"));
    const auto &qc = field(j, "qcap");
    const bool exact = qc.is_string() && qc.get<std::string>() == "exact";
    const Rat qcap = exact ? Rat(0) : rat_from_json(qc);
    if (!is_integral(2 * w) || !is_integral(2 * t))
        throw schema_error("weight and index must be half-integers");
    if (!is_integral(qcap * 24))
        throw schema_error("qcap must lie in the 1/24 lattice");
    int chi = 0;
    if (j.contains("eta_character"))
        chi = int_field(j, "eta_character");
    return JacobiForm(Half::from_twice(static_cast<int>(to_long(Rat(2 * w).get_num()))),
                      Half::from_twice(static_cast<int>(to_long(Rat(2 * t).get_num()))), chi,
                      series_from_json(field(j, "series"), exact ? kInfinite : q_units(qcap)));
}

inline json form_to_json(const JacobiForm &a)
{
    return {{"kind", "series"},
            {"weight", rat_string(a.weight.to_rat())},
            {"index", rat_string(a.index.to_rat())},
            {"eta_character", a.eta_character},
            {"qcap", a.series.is_exact() ? std::string("exact") : rat_string(q_rat(a.series.cap()))},
            {"series", series_to_json(a.series)}};
}

} // namespace jacobi
