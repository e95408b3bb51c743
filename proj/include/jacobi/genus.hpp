#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "forms.hpp"
#include "linalg.hpp"
#include "ring.hpp"

namespace jacobi {

/// Prescribed Fourier coefficient c(n, l) of an elliptic genus.
struct ExtraCoeff {
    Rat n;
    Rat l;
    Int value;
};

/// Hodge-theoretic input: complex dimension d and chi_p = chi(M, Omega^p), p = 0..d.
struct ManifoldData {
    int d = 0;
    std::vector<Int> chi;
    std::vector<ExtraCoeff> extra;

    std::vector<std::string> warnings() const
    {
        std::vector<std::string> w;
        if (chi.size() != static_cast<std::size_t>(d + 1))
            throw std::invalid_argument("chi must have d+1 entries");
        for (int p = 0; p <= d; ++p) {
            const Int sym = (d % 2 ? -1 : 1) * chi[static_cast<std::size_t>(d - p)];
            if (chi[static_cast<std::size_t>(p)] != sym)
                w.push_back("chi_" + std::to_string(p) + " != (-1)^d chi_" + std::to_string(d - p) +
                            " (Serre duality)");
        }
        return w;
    }

    Int euler() const
    {
        Int e = 0;
        for (std::size_t p = 0; p < chi.size(); ++p)
            e += (p % 2 ? -1 : 1) * chi[p];
        return e;
    }
};

/// sum_p (-1)^p chi_p y^(d/2 - p).
inline YLaurent chi_y_q0(const ManifoldData &m)
{
    std::vector<YLaurent::Term> ts;
    for (int p = 0; p <= m.d; ++p)
        ts.emplace_back(m.d - 2 * p, Rat((p % 2 ? -1 : 1) * m.chi[static_cast<std::size_t>(p)]));
    return YLaurent::from_terms(std::move(ts));
}

struct GenusResult {
    JacobiForm core;
    int prefactor_exponent = 0;
    std::optional<GeneratorPoly> decomposition;
    CheckResult elliptic;
    std::vector<std::string> notes;
};

namespace detail {

// Rational-coefficient form: decompose d*a with d the common denominator.
inline std::optional<GeneratorPoly> decompose_any(const JacobiForm &a)
{
    if (a.weight.twice != 0)
        return std::nullopt;
    Int den = 1;
    for (const auto &[e, c] : a.series.terms())
        for (const auto &[l, v] : c.terms())
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
    JacobiForm scaled = a * Rat(den);
    GeneratorPoly factor = GeneratorPoly::constant(1);
    if (!scaled.index.is_integer()) {
        auto [g, rest] = halfint_reduce(scaled);
        factor = GeneratorPoly::generator(g);
        scaled = rest;
    }
    if (scaled.weight.twice != 0)
        return std::nullopt;
    auto p = decompose_weight0(scaled, scaled.index.as_integer());
    return factor * p * inverse(Rat(den));
}

inline CheckResult try_elliptic(const JacobiForm &a)
{
    try {
        return elliptic_check(a);
    } catch (const cap_underflow &e) {
        return CheckResult::ok(std::string("not checked: ") + e.what());
    }
}

// Series coefficient vector of a form restricted to the given (n, l) positions.
inline RatVector coeff_vector(const LaurentSeries &s, const std::vector<std::pair<long, int>> &pos)
{
    RatVector v;
    for (const auto &[n, l] : pos)
        v.push_back(s.coeff(n).coeff(l));
    return v;
}

} // namespace detail

/// The weight-0 weak Jacobi form of index d/2 with q^0-term chi_y, resolved
/// beyond index 6 by the prescribed extra coefficients.
inline GenusResult elliptic_genus(const ManifoldData &m, long cap)
{
    GenusResult res;
    res.notes = m.warnings();
    const YLaurent target = chi_y_q0(m);
    const bool odd = m.d % 2 != 0;
    YLaurent reduced = target;
    int idx = m.d / 2;
    if (odd) {
        const YLaurent s = YLaurent::from_terms({{1, Rat(1)}, {-1, Rat(1)}});
        try {
            reduced = divide_exact(target, s);
        } catch (const math_error &) {
            throw math_error("chi_y q^0-term " + target.to_string() + " is not divisible by y^(1/2)+y^(-1/2)");
        }
        idx = (m.d - 3) / 2;
        if (m.d < 3) {
            if (!target.is_zero())
                throw math_error("no nonzero weak Jacobi form of weight 0 and index 1/2");
            idx = -1;
        }
    }
    GeneratorPoly poly;
    if (idx == 0)
        poly = GeneratorPoly::constant(reduced.constant_term());
    else if (idx > 0)
        poly = match_q0(reduced, idx);
    else if (!reduced.is_zero())
        throw math_error("nonzero q^0-term for an empty space");
    if (!poly.is_integral())
        throw math_error("q^0-term is not in the integral span");

    GeneratorCache cache(cap);
    if (idx >= 6) {
        // Ambiguity xi_0_6 * J_(0, idx-6): fix it with the prescribed coefficients.
        std::vector<GeneratorPoly> span;
        for (const auto &mono : weight0_monomials(idx - 6))
            span.push_back(GeneratorPoly::monomial(mono, 1) * xi_0_6_poly());
        std::vector<std::pair<long, int>> all_pos;
        const auto base_series = evaluate(poly, cache).series;
        std::vector<LaurentSeries> span_series;
        for (const auto &p : span)
            span_series.push_back(evaluate(p, cache).series);
        // Independent subset of the span (as series through the cap).
        std::map<std::pair<long, int>, bool> seen;
        for (const auto &s : span_series)
            for (const auto &[e, c] : s.terms())
                for (const auto &[l, v] : c.terms())
                    if (!seen[{e, l}]) {
                        seen[{e, l}] = true;
                        all_pos.emplace_back(e, l);
                    }
        RatMatrix rows;
        std::vector<std::size_t> keep;
        {
            RatMatrix echelon;
            std::vector<std::size_t> lead;
            for (std::size_t i = 0; i < span_series.size(); ++i) {
                auto v = detail::coeff_vector(span_series[i], all_pos);
                for (std::size_t r = 0; r < echelon.size(); ++r) {
                    const Rat f = v[lead[r]];
                    if (!is_zero(f))
                        for (std::size_t c = 0; c < v.size(); ++c)
                            v[c] -= f * echelon[r][c];
                }
                std::size_t p = 0;
                while (p < v.size() && is_zero(v[p]))
                    ++p;
                if (p == v.size())
                    continue;
                const Rat inv = inverse(v[p]);
                for (auto &x : v)
                    x *= inv;
                for (std::size_t r = 0; r < echelon.size(); ++r) {
                    const Rat f = echelon[r][p];
                    if (!is_zero(f))
                        for (std::size_t c = 0; c < v.size(); ++c)
                            echelon[r][c] -= f * v[c];
                }
                echelon.push_back(v);
                lead.push_back(p);
                keep.push_back(i);
            }
        }
        std::vector<std::pair<long, int>> pos;
        RatVector rhs;
        for (const auto &x : m.extra) {
            const long e = q_units(x.n);
            const Rat l2 = 2 * x.l;
            if (!is_integral(l2))
                throw std::invalid_argument("extra coefficient y-exponent must be a half-integer");
            const int l = static_cast<int>(to_long(l2.get_num()));
            if (e > cap)
                throw cap_underflow("extra coefficient at q^" + x.n.get_str() + " is beyond the cap");
            pos.emplace_back(e, l);
            rhs.push_back(Rat(x.value) - base_series.coeff(e).coeff(l));
        }
        for (std::size_t i : keep)
            rows.push_back(detail::coeff_vector(span_series[i], pos));
        auto sol = solve_rational(rows, rhs);
        if (!sol)
            throw math_error("prescribed extra coefficients are inconsistent with the q^0-term");
        if (!sol->kernel.empty())
            throw math_error("index " + std::to_string(idx) + " needs " + std::to_string(keep.size()) +
                             " independent extra coefficients beyond the q^0-term; " +
                             std::to_string(m.extra.size()) + " given do not determine the form");
        for (std::size_t j = 0; j < keep.size(); ++j)
            poly = poly + span[keep[j]] * sol->particular[j];
        poly = canonicalize(poly);
        if (!poly.is_integral())
            throw math_error("extra coefficients force a non-integral elliptic genus");
    } else if (!m.extra.empty()) {
        res.notes.push_back("extra coefficients ignored: the q^0-term already determines the form");
    }
    if (odd && idx >= 0)
        poly = GeneratorPoly::generator(Gen::phi_0_3half) * poly;
    poly = canonicalize(poly);
    auto form = evaluate(poly, cache);
    res.core = JacobiForm(Half{}, Half::from_twice(m.d), 0, form.series);
    res.decomposition = poly;
    res.elliptic = detail::try_elliptic(res.core);
    return res;
}

// ---------------------------------------------------------------------------
// Characteristic numbers and the modified Witten genus

/// Symbol S_n (kind 'S', n >= 2) or B_2k (kind 'B', 2k >= 4).
struct Symbol {
    char kind;
    int n;
    int degree() const { return n; }
    friend auto operator<=>(const Symbol &, const Symbol &) = default;
    std::string name() const { return std::string(1, kind) + std::to_string(n); }
};

using SymbolMonomial = std::vector<Symbol>; // sorted

inline std::string monomial_key(SymbolMonomial m)
{
    std::sort(m.begin(), m.end());
    std::string s;
    for (const auto &x : m)
        s += (s.empty() ? "" : "*") + x.name();
    return s.empty() ? "1" : s;
}

inline Symbol parse_symbol(const std::string &s)
{
    if (s.size() < 2 || (s[0] != 'S' && s[0] != 'B') || s.find_first_not_of("0123456789", 1) != std::string::npos)
        throw std::invalid_argument("bad symbol '" + s + "'");
    Symbol x{s[0], std::stoi(s.substr(1))};
    if (x.kind == 'S' && x.n < 2)
        throw std::invalid_argument("S-symbols start at S2");
    if (x.kind == 'B' && (x.n < 4 || x.n % 2))
        throw std::invalid_argument("B-symbols are B4, B6, ...");
    return x;
}

inline SymbolMonomial parse_monomial(const std::string &key)
{
    SymbolMonomial m;
    if (key == "1")
        return m;
    std::size_t start = 0;
    while (start <= key.size()) {
        const auto stop = key.find('*', start);
        m.push_back(parse_symbol(key.substr(start, stop == std::string::npos ? std::string::npos : stop - start)));
        if (stop == std::string::npos)
            break;
        start = stop + 1;
    }
    std::sort(m.begin(), m.end());
    return m;
}

/// Pairing of degree-d symbol monomials with a manifold and bundle of rank r.
struct CharData {
    int d = 0;
    int r = 0;
    std::map<std::string, Rat> pairing; // canonical monomial keys

    void set(const std::string &key, const Rat &v)
    {
        const auto m = parse_monomial(key);
        int deg = 0;
        for (const auto &x : m)
            deg += x.degree();
        if (deg != d)
            throw std::invalid_argument("monomial " + key + " has degree " + std::to_string(deg) + ", expected " +
                                        std::to_string(d));
        pairing[monomial_key(m)] = v;
    }
};

/// All multisets of symbols of total degree d (S-symbols only when with_s).
inline std::vector<SymbolMonomial> symbol_monomials(int d, bool with_s)
{
    std::vector<Symbol> alphabet;
    for (int n = 4; n <= d; n += 2)
        alphabet.push_back({'B', n});
    if (with_s)
        for (int n = 2; n <= d; ++n)
            alphabet.push_back({'S', n});
    std::vector<SymbolMonomial> out;
    SymbolMonomial cur;
    std::function<void(std::size_t, int)> rec = [&](std::size_t from, int left) {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = from; i < alphabet.size(); ++i) {
            if (alphabet[i].degree() > left)
                continue;
            cur.push_back(alphabet[i]);
            rec(i, left - alphabet[i].degree());
            cur.pop_back();
        }
    };
    rec(0, d);
    for (auto &m : out)
        std::sort(m.begin(), m.end());
    return out;
}

namespace detail {

// sum over monomials of pairing(mono) * prod c_s^(e_s)/e_s!.
inline RationalSeries paired_expansion(const CharData &c, long cap, bool allow_s)
{
    std::vector<RationalSeries> wp;
    if (allow_s && c.d >= 2)
        wp = wp_jets(static_cast<unsigned>(c.d), cap);
    auto coeff_of = [&](const Symbol &s) -> RationalSeries {
        if (s.kind == 'S')
            return wp[static_cast<std::size_t>(s.n - 2)] * (-inverse(factorial(static_cast<unsigned>(s.n))));
        return lift<YRational>(eisenstein_G(static_cast<unsigned>(s.n), cap)) *
               (Rat(2) * inverse(factorial(static_cast<unsigned>(s.n))));
    };
    RationalSeries acc = RationalSeries::zero(cap);
    for (const auto &mono : symbol_monomials(c.d, allow_s)) {
        const auto key = monomial_key(mono);
        auto it = c.pairing.find(key);
        if (it == c.pairing.end() && !mono.empty())
            throw std::invalid_argument("missing pairing value for monomial " + key);
        const Rat value = it == c.pairing.end() ? Rat(1) : it->second;
        if (is_zero(value))
            continue;
        RationalSeries term(value);
        std::map<Symbol, int> mult;
        for (const auto &s : mono)
            ++mult[s];
        for (const auto &[s, e] : mult) {
            const auto base = coeff_of(s);
            for (int i = 0; i < e; ++i)
                term = term * base;
            term = term * inverse(factorial(static_cast<unsigned>(e)));
        }
        acc = acc + term;
    }
    for (const auto &[k, v] : c.pairing) {
        const auto m = parse_monomial(k);
        const bool has_s = std::any_of(m.begin(), m.end(), [](const Symbol &s) { return s.kind == 'S'; });
        if (has_s && !allow_s && !is_zero(v))
            throw std::invalid_argument("rank-0 data cannot pair S-symbols: " + k);
    }
    return acc;
}

} // namespace detail

/// Core phi_(-1,1/2)^d * <P(E) W(M)>_d of the modified Witten genus; the raw
/// genus is core * (theta/eta)^(r-d).
inline GenusResult mwg(const CharData &c, long cap)
{
    if (c.d < 0 || c.r < 0)
        throw std::invalid_argument("dimension and rank must be nonnegative");
    GenusResult res;
    const auto x = detail::paired_expansion(c, cap, c.r > 0);
    const auto phi = to_rational_functions(pow(phi_m1_half(cap), c.d));
    const auto core_rational = x * phi;
    LaurentSeries core;
    try {
        core = to_laurent(core_rational);
    } catch (const math_error &e) {
        throw math_error(std::string("non-cancelling pole in the genus core: ") + e.what());
    }
    res.core = JacobiForm(Half{}, Half::from_twice(c.d), 0, core);
    res.prefactor_exponent = c.r - c.d;
    res.elliptic = detail::try_elliptic(res.core);
    try {
        res.decomposition = detail::decompose_any(res.core);
    } catch (const math_error &e) {
        res.notes.push_back(std::string("no generator decomposition: ") + e.what());
    }
    return res;
}

/// chi(M; tau) = <W(M)>_d / eta^(2d) for r = 0.
inline RatSeries<> witten_rank0(const CharData &c, long cap)
{
    if (c.r != 0)
        throw std::invalid_argument("witten_rank0 needs rank 0");
    const auto x = detail::paired_expansion(c, cap + 2 * c.d, false);
    RatSeries<> w = x.map_coeffs([](const YRational &v) {
        const auto l = v.to_laurent();
        if (!l.is_constant())
            throw math_error("Witten factor depends on y");
        return l.constant_term();
    });
    return (w * eta_power(-2 * c.d, cap + 2 * c.d)).truncated(cap);
}

/// The mwg core divided by (theta/eta)^d is y-independent and equals witten_rank0.
inline CheckResult witten_consistency(const CharData &c, long cap)
{
    const auto core = mwg(c, cap + 3 * c.d).core.series;
    const auto t = times_eta_power(theta(cap + 3 * c.d + 3), -1, cap + 3 * c.d);
    const auto q = divide(core, pow(t, c.d));
    for (const auto &[e, v] : q.terms())
        if (!v.is_constant())
            return CheckResult::fail("y-dependence at q^" + q_rat(e).get_str() + ": " + v.to_string());
    const auto w = witten_rank0(c, cap);
    return compare_series(lift<YLaurent>(w), q, cap);
}

} // namespace jacobi
