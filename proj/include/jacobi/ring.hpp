#pragma once

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "forms.hpp"
#include "jacobi_form.hpp"
#include "jet.hpp"
#include "linalg.hpp"

namespace jacobi {

/// Outcome of a formal identity check; `detail` locates the first mismatch.
struct CheckResult {
    bool pass = true;
    std::string detail;

    static CheckResult ok(std::string d = {}) { return {true, std::move(d)}; }
    static CheckResult fail(std::string d) { return {false, std::move(d)}; }
};

template <class R, long Den>
CheckResult compare_series(const FourierSeries<R, Den> &a, const FourierSeries<R, Den> &b, long upto = kInfinite)
{
    if (auto e = first_difference(a, b, upto)) {
        auto show = [](const R &c) {
            if constexpr (std::is_same_v<R, Rat>)
                return c.get_str();
            else
                return c.to_string();
        };
        return CheckResult::fail("first difference at q^" + q_rat<Den>(*e).get_str() + ": " + show(a.coeff(*e)) +
                                 " vs " + show(b.coeff(*e)));
    }
    return CheckResult::ok("agree through q^" + q_rat<Den>(std::min({a.cap(), b.cap(), upto})).get_str());
}

// ---------------------------------------------------------------------------
// Generator polynomials

enum class Gen { phi_0_1, phi_0_2, phi_0_3, phi_0_4, phi_0_3half, phi_m1_half, phi_m2_1, E4, E6, Delta, xi_0_6 };
inline constexpr std::size_t kGenCount = 11;

inline const char *gen_name(Gen g)
{
    static const char *names[kGenCount] = {"phi_0_1",     "phi_0_2",  "phi_0_3", "phi_0_4", "phi_0_3half", "phi_m1_half",
                                           "phi_m2_1",    "E4",       "E6",      "Delta",   "xi_0_6"};
    return names[static_cast<std::size_t>(g)];
}

inline Gen gen_from_name(const std::string &s)
{
    for (std::size_t i = 0; i < kGenCount; ++i)
        if (s == gen_name(static_cast<Gen>(i)))
            return static_cast<Gen>(i);
    throw std::invalid_argument("unknown generator '" + s + "'");
}

// (twice weight, twice index)
inline std::pair<int, int> gen_degree(Gen g)
{
    switch (g) {
    case Gen::phi_0_1: return {0, 2};
    case Gen::phi_0_2: return {0, 4};
    case Gen::phi_0_3: return {0, 6};
    case Gen::phi_0_4: return {0, 8};
    case Gen::phi_0_3half: return {0, 3};
    case Gen::phi_m1_half: return {-2, 1};
    case Gen::phi_m2_1: return {-4, 2};
    case Gen::E4: return {8, 0};
    case Gen::E6: return {12, 0};
    case Gen::Delta: return {24, 0};
    case Gen::xi_0_6: return {0, 12};
    }
    return {0, 0};
}

/// Polynomial with rational coefficients in the named generators.
///
/// Monomials are kept in descending lexicographic order of their exponent
/// vectors (phi_0_1 first), which is also the printing order.
class GeneratorPoly {
public:
    using Mono = std::array<int, kGenCount>;
    using TermMap = std::map<Mono, Rat, std::greater<Mono>>;

    GeneratorPoly() = default;
    static GeneratorPoly constant(const Rat &c)
    {
        GeneratorPoly p;
        p.add(Mono{}, c);
        return p;
    }
    static GeneratorPoly generator(Gen g, int e = 1)
    {
        Mono m{};
        m[static_cast<std::size_t>(g)] = e;
        GeneratorPoly p;
        p.add(m, 1);
        return p;
    }
    static GeneratorPoly monomial(const Mono &m, const Rat &c)
    {
        GeneratorPoly p;
        p.add(m, c);
        return p;
    }

    void add(const Mono &m, const Rat &c)
    {
        if (jacobi::is_zero(c))
            return;
        auto [it, fresh] = terms_.emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (jacobi::is_zero(it->second))
                terms_.erase(it);
        }
    }

    const TermMap &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_integral() const
    {
        for (const auto &[m, c] : terms_)
            if (!jacobi::is_integral(c))
                return false;
        return true;
    }

    friend GeneratorPoly operator+(GeneratorPoly a, const GeneratorPoly &b)
    {
        for (const auto &[m, c] : b.terms_)
            a.add(m, c);
        return a;
    }
    friend GeneratorPoly operator-(GeneratorPoly a, const GeneratorPoly &b)
    {
        for (const auto &[m, c] : b.terms_)
            a.add(m, -c);
        return a;
    }
    friend GeneratorPoly operator*(const GeneratorPoly &a, const GeneratorPoly &b)
    {
        GeneratorPoly r;
        for (const auto &[ma, ca] : a.terms_)
            for (const auto &[mb, cb] : b.terms_) {
                Mono m;
                for (std::size_t i = 0; i < kGenCount; ++i)
                    m[i] = ma[i] + mb[i];
                r.add(m, ca * cb);
            }
        return r;
    }
    friend GeneratorPoly operator*(GeneratorPoly a, const Rat &c)
    {
        GeneratorPoly r;
        for (const auto &[m, v] : a.terms_)
            r.add(m, v * c);
        return r;
    }
    friend bool operator==(const GeneratorPoly &a, const GeneratorPoly &b) { return a.terms_ == b.terms_; }

    /// (twice weight, twice index) of a monomial.
    static std::pair<int, int> degree(const Mono &m)
    {
        int w = 0, t = 0;
        for (std::size_t i = 0; i < kGenCount; ++i) {
            auto [gw, gt] = gen_degree(static_cast<Gen>(i));
            w += m[i] * gw;
            t += m[i] * gt;
        }
        return {w, t};
    }

    std::string to_string() const
    {
        if (terms_.empty())
            return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto &[m, c] : terms_) {
            const bool neg = sgn(c) < 0;
            const Rat mag = abs(c);
            os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
            first = false;
            std::string mono;
            for (std::size_t i = 0; i < kGenCount; ++i) {
                if (m[i] == 0)
                    continue;
                if (!mono.empty())
                    mono += "*";
                mono += gen_name(static_cast<Gen>(i));
                if (m[i] != 1)
                    mono += "^" + std::to_string(m[i]);
            }
            if (mono.empty())
                os << mag.get_str();
            else if (mag == 1)
                os << mono;
            else
                os << (jacobi::is_integral(mag) ? mag.get_str() : "(" + mag.get_str() + ")") << "*" << mono;
        }
        return os.str();
    }

private:
    TermMap terms_;
};

/// Canonical form modulo 4 phi_0_4 = phi_0_1 phi_0_3 - phi_0_2^2.
///
/// Working down from the highest phi_0_4 power, each coefficient c of a
/// monomial containing phi_0_4 is reduced to its residue r in {-1, 0, 1, 2}
/// mod 4 and (c - r)/4 times the monomial is rewritten with one phi_0_4
/// replaced by phi_0_1 phi_0_3 - phi_0_2^2. Integer polynomials representing
/// the same form have the same canonical form.
inline GeneratorPoly canonicalize(const GeneratorPoly &p)
{
    const std::size_t i4 = static_cast<std::size_t>(Gen::phi_0_4);
    int top = 0;
    for (const auto &[m, c] : p.terms())
        top = std::max(top, m[i4]);
    GeneratorPoly cur = p;
    for (int e = top; e >= 1; --e) {
        GeneratorPoly next;
        for (const auto &[m, c] : cur.terms()) {
            if (m[i4] != e || !jacobi::is_integral(c)) {
                next.add(m, c);
                continue;
            }
            Int r = c.get_num() % 4;
            if (r < 0)
                r += 4;
            if (r == 3)
                r = -1;
            const Int k = (c.get_num() - r) / 4;
            next.add(m, Rat(r));
            auto base = m;
            base[i4] -= 1;
            auto a = base, b = base;
            a[static_cast<std::size_t>(Gen::phi_0_1)] += 1;
            a[static_cast<std::size_t>(Gen::phi_0_3)] += 1;
            b[static_cast<std::size_t>(Gen::phi_0_2)] += 2;
            next.add(a, Rat(k));
            next.add(b, Rat(-k));
        }
        cur = std::move(next);
    }
    return cur;
}

/// Lazily computed generator expansions at one cap.
class GeneratorCache {
public:
    explicit GeneratorCache(long cap) : cap_(cap) {}
    long cap() const { return cap_; }

    const LaurentSeries &series(Gen g)
    {
        auto it = base_.find(g);
        if (it != base_.end())
            return it->second;
        return base_.emplace(g, compute(g)).first->second;
    }

    const LaurentSeries &power(Gen g, int e)
    {
        auto key = std::make_pair(g, e);
        auto it = powers_.find(key);
        if (it != powers_.end())
            return it->second;
        LaurentSeries s = e == 1 ? series(g) : power(g, e - 1) * series(g);
        return powers_.emplace(key, s.truncated(std::min(s.cap(), cap_))).first->second;
    }

private:
    LaurentSeries compute(Gen g) const
    {
        auto scalar = [](const RatSeries<> &s) { return lift<YLaurent>(s); };
        switch (g) {
        case Gen::phi_0_1: return phi_0_1(cap_);
        case Gen::phi_0_2: return phi_0_2(cap_);
        case Gen::phi_0_3: return phi_0_3(cap_);
        case Gen::phi_0_4: return phi_0_4(cap_);
        case Gen::phi_0_3half: return phi_0_3half(cap_);
        case Gen::phi_m1_half: return phi_m1_half(cap_);
        case Gen::phi_m2_1: return phi_m2_1(cap_);
        case Gen::E4: return scalar(eisenstein_E(4, cap_));
        case Gen::E6: return scalar(eisenstein_E(6, cap_));
        case Gen::Delta: return scalar(delta(cap_));
        case Gen::xi_0_6: return xi_0_6(cap_);
        }
        throw std::logic_error("bad generator");
    }

    long cap_;
    std::map<Gen, LaurentSeries> base_;
    std::map<std::pair<Gen, int>, LaurentSeries> powers_;
};

/// Evaluates a polynomial whose monomials all share one bidegree.
inline JacobiForm evaluate(const GeneratorPoly &p, GeneratorCache &cache)
{
    if (p.is_zero())
        return {Half{}, Half{}, 0, LaurentSeries::zero(cache.cap())};
    const auto deg = GeneratorPoly::degree(p.terms().begin()->first);
    LaurentSeries acc = LaurentSeries::zero(cache.cap());
    for (const auto &[m, c] : p.terms()) {
        if (GeneratorPoly::degree(m) != deg)
            throw math_error("generator polynomial mixes bidegrees");
        LaurentSeries term(c);
        for (std::size_t i = 0; i < kGenCount; ++i)
            if (m[i] > 0)
                term = LaurentSeries::mul(term, cache.power(static_cast<Gen>(i), m[i]), cache.cap());
        acc = acc + term;
    }
    return {Half::from_twice(deg.first), Half::from_twice(deg.second), 0, acc};
}

inline JacobiForm evaluate(const GeneratorPoly &p, long cap)
{
    GeneratorCache cache(cap);
    return evaluate(p, cache);
}

// ---------------------------------------------------------------------------
// Elliptic transformation

/// Checks f(n, l) = s f(n + lambda l + t lambda^2, l + 2 t lambda), s = (-1)^(2 t lambda),
/// the formal content of phi(tau, z + lambda tau) = s q^(-t lambda^2) y^(-2 t lambda) phi(tau, z).
inline CheckResult elliptic_check(const JacobiForm &a, int lambda = 1)
{
    const auto &s = a.series;
    const Rat t = a.index.to_rat();
    if (s.is_exact())
        return CheckResult::fail("elliptic check needs a truncated series");
    const Rat cap = q_rat(s.cap());
    if (cap < 2 * t + 2)
        throw cap_underflow("elliptic check needs cap >= 2*index + 2, have q^" + cap.get_str());
    const Rat lam(lambda);
    const Rat sign = (a.index.twice * lambda) % 2 == 0 ? 1 : -1;
    const Rat tl2 = t * lam * lam;
    const int dl = a.index.twice * 2 * lambda; // 2 t lambda in half units
    auto value = [&](const Rat &n, int l2) -> std::optional<Rat> {
        if (n > cap)
            return std::nullopt;
        if (!is_integral(n * 24))
            return Rat(0);
        return s.coeff(q_units(n)).coeff(l2);
    };
    auto witness = [&](const Rat &n, int l2, const Rat &x, const Rat &y) {
        return CheckResult::fail("q^" + n.get_str() + " y^" + make_rat(l2, 2).get_str() + ": coefficient " +
                                 x.get_str() + " but transformed partner gives " + y.get_str());
    };
    std::size_t compared = 0;
    for (const auto &[e, c] : s.terms()) {
        const Rat n = q_rat(e);
        for (const auto &[l2, v] : c.terms()) {
            const Rat l = make_rat(l2, 2);
            // forward partner
            if (auto w = value(n + lam * l + tl2, l2 + dl)) {
                ++compared;
                if (v != sign * *w)
                    return witness(n, l2, v, sign * *w);
            }
            // backward partner: (n, l) is the image of (n', l - 2 t lambda)
            const Rat lp = l - 2 * t * lam;
            const Rat np = n - lam * lp - tl2;
            if (auto w = value(np, l2 - dl)) {
                ++compared;
                if (sign * v != *w)
                    return witness(np, l2 - dl, *w, sign * v);
            }
        }
    }
    return CheckResult::ok(std::to_string(compared) + " coefficient pairs compared");
}

// ---------------------------------------------------------------------------
// Weight-0 basis and decomposition

inline YLaurent q0_of(Gen g)
{
    auto y = [](Rat c) { return YLaurent::from_terms({{2, Rat(1)}, {0, c}, {-2, Rat(1)}}); };
    switch (g) {
    case Gen::phi_0_1: return y(10);
    case Gen::phi_0_2: return y(4);
    case Gen::phi_0_3: return y(2);
    case Gen::phi_0_4: return y(1);
    default: throw std::logic_error("q0_of: not a weight-0 generator");
    }
}

/// phi_0_1^a phi_0_2^b phi_0_3^c phi_0_4^e with a + 2b + 3c + 4e = m, highest phi_0_1 power first.
inline std::vector<GeneratorPoly::Mono> weight0_monomials(int m)
{
    std::vector<GeneratorPoly::Mono> out;
    for (int a = m; a >= 0; --a)
        for (int b = (m - a) / 2; b >= 0; --b)
            for (int c = (m - a - 2 * b) / 3; c >= 0; --c) {
                const int rest = m - a - 2 * b - 3 * c;
                if (rest % 4)
                    continue;
                GeneratorPoly::Mono mono{};
                mono[0] = a;
                mono[1] = b;
                mono[2] = c;
                mono[3] = rest / 4;
                out.push_back(mono);
            }
    return out;
}

inline YLaurent mono_q0(const GeneratorPoly::Mono &m)
{
    YLaurent r(1);
    for (std::size_t i = 0; i < 4; ++i)
        r = r * q0_of(static_cast<Gen>(i)).pow(static_cast<unsigned>(m[i]));
    return r;
}

// Integer coefficient vector over y^m, ..., y^-m.
inline IntVector q0_vector(const YLaurent &p, int m)
{
    IntVector v(static_cast<std::size_t>(2 * m + 1), 0);
    for (const auto &[e, c] : p.terms()) {
        if (e % 2 || e / 2 > m || e / 2 < -m || !is_integral(c))
            throw math_error("q^0-term " + p.to_string() + " is not an integral Laurent polynomial of degree <= " +
                             std::to_string(m));
        v[static_cast<std::size_t>(m - e / 2)] = c.get_num();
    }
    return v;
}

/// q^0-terms of the basis psi_(0,m)^(n).
inline YLaurent psi_q0(int m, int n)
{
    if (n == 1) {
        const long g = std::gcd(12, m);
        return YLaurent::from_terms({{2, make_rat(m, g)}, {0, make_rat(12 - 2 * m, g)}, {-2, make_rat(m, g)}});
    }
    const long n2 = static_cast<long>(n) * n;
    return YLaurent::from_terms({{2 * n, Rat(1)},
                                 {2, Rat(-n2)},
                                 {0, Rat(2 * n2 - 2)},
                                 {-2, Rat(-n2)},
                                 {-2 * n, Rat(1)}});
}

struct BasisReport {
    int m = 0;
    std::vector<GeneratorPoly::Mono> monomials;
    IntMatrix transform; // row n-1 expresses psi^(n) in the monomials
    std::vector<GeneratorPoly> polys;
    std::vector<JacobiForm> forms;
    bool lattice_matches = false;
};

inline BasisReport q0_basis(int m, long cap)
{
    if (m < 1)
        throw std::invalid_argument("q0_basis needs m >= 1");
    BasisReport rep;
    rep.m = m;
    rep.monomials = weight0_monomials(m);
    IntMatrix a, targets;
    for (const auto &mono : rep.monomials)
        a.push_back(q0_vector(mono_q0(mono), m));
    for (int n = 1; n <= m; ++n)
        targets.push_back(q0_vector(psi_q0(m, n), m));
    rep.lattice_matches = same_lattice(a, targets, static_cast<std::size_t>(2 * m + 1));
    if (!rep.lattice_matches)
        throw math_error("q^0 lattice of index " + std::to_string(m) + " does not match the psi normal forms");
    GeneratorCache cache(cap);
    for (const auto &t : targets) {
        auto x = solve_integer(a, t);
        if (!x)
            throw math_error("psi normal form outside the monomial lattice");
        rep.transform.push_back(*x);
        GeneratorPoly p;
        for (std::size_t i = 0; i < x->size(); ++i)
            p.add(rep.monomials[i], Rat((*x)[i]));
        p = canonicalize(p);
        rep.polys.push_back(p);
        rep.forms.push_back(evaluate(p, cache));
    }
    return rep;
}

// Solves the q^0-term over the index-m monomials.
inline GeneratorPoly match_q0(const YLaurent &q0, int m)
{
    const auto monos = weight0_monomials(m);
    IntMatrix a;
    for (const auto &mono : monos)
        a.push_back(q0_vector(mono_q0(mono), m));
    auto x = solve_integer(a, q0_vector(q0, m));
    if (!x)
        throw math_error("q^0-term " + q0.to_string() + " is not in the integral span of index-" + std::to_string(m) +
                         " weak Jacobi forms");
    GeneratorPoly p;
    for (std::size_t i = 0; i < monos.size(); ++i)
        p.add(monos[i], Rat((*x)[i]));
    return p;
}

/// xi_0_6 as a polynomial in phi_0_1..phi_0_4, derived from the kernel of the
/// index-6 q^0-map and one q^1 coefficient.
inline const GeneratorPoly &xi_0_6_poly()
{
    static const GeneratorPoly poly = [] {
        const int m = 6;
        const auto monos = weight0_monomials(m);
        IntMatrix a;
        for (const auto &mono : monos)
            a.push_back(q0_vector(mono_q0(mono), m));
        const auto ker = left_kernel(a, 2 * m + 1);
        GeneratorCache cache(72);
        IntMatrix q1;
        std::vector<GeneratorPoly> kpolys;
        for (const auto &k : ker) {
            GeneratorPoly p;
            for (std::size_t i = 0; i < monos.size(); ++i)
                p.add(monos[i], Rat(k[i]));
            kpolys.push_back(p);
            q1.push_back(q0_vector(evaluate(p, cache).series.coeff(24), 7));
        }
        const auto xi = xi_0_6(72);
        auto x = solve_integer(q1, q0_vector(xi.coeff(24), 7));
        if (!x)
            throw math_error("xi_0_6 is not an integral combination of the index-6 kernel");
        GeneratorPoly p;
        for (std::size_t i = 0; i < kpolys.size(); ++i)
            p = p + kpolys[i] * Rat((*x)[i]);
        p = canonicalize(p);
        if (!agree(evaluate(p, cache).series, xi))
            throw math_error("derived xi_0_6 polynomial does not reproduce the series");
        return p;
    }();
    return poly;
}

inline GeneratorPoly substitute_xi(const GeneratorPoly &p)
{
    const std::size_t ix = static_cast<std::size_t>(Gen::xi_0_6);
    GeneratorPoly out;
    for (const auto &[m, c] : p.terms()) {
        auto base = m;
        base[ix] = 0;
        GeneratorPoly t = GeneratorPoly::monomial(base, c);
        for (int i = 0; i < m[ix]; ++i)
            t = t * xi_0_6_poly();
        out = out + t;
    }
    return out;
}

namespace detail {

inline GeneratorPoly decompose_rec(const LaurentSeries &s, int m, GeneratorCache &cache)
{
    if (s.is_zero())
        return {};
    const YLaurent q0 = s.coeff(0);
    GeneratorPoly p0 = m == 0 ? GeneratorPoly::constant(q0.constant_term()) : match_q0(q0, m);
    if (m == 0 && (!q0.is_constant() || !is_integral(q0.constant_term())))
        throw math_error("index-0 weight-0 form must be an integer constant, got " + q0.to_string());
    const auto rest = s - evaluate(p0, cache).series;
    if (rest.is_zero())
        return p0;
    if (m < 6)
        throw math_error("remainder after matching the q^0-term is nonzero at q^" +
                         q_rat(rest.valuation()).get_str() + "; input is not a weak Jacobi form of index " +
                         std::to_string(m));
    if (rest.cap() < 48)
        throw cap_underflow("cap too small to divide the remainder by xi_0_6");
    LaurentSeries quot;
    try {
        quot = divide(rest, cache.series(Gen::xi_0_6));
    } catch (const math_error &e) {
        throw math_error(std::string("remainder is not divisible by xi_0_6: ") + e.what());
    }
    for (const auto &[e, c] : quot.terms())
        if (!c.has_integral_coefficients())
            throw math_error("quotient by xi_0_6 has non-integral coefficients");
    auto inner = decompose_rec(quot, m - 6, cache);
    return p0 + inner * GeneratorPoly::generator(Gen::xi_0_6);
}

} // namespace detail

/// Integer polynomial in phi_0_1..phi_0_4 reproducing a weight-0 form of index m.
inline GeneratorPoly decompose_weight0(const JacobiForm &a, int m)
{
    if (a.weight.twice != 0)
        throw std::invalid_argument("decompose_weight0 needs weight 0");
    if (a.index != Half::integer(m))
        throw std::invalid_argument("declared index does not match the form");
    const long need = 24 * ((m + 5) / 6 + 2);
    if (a.series.cap() < need)
        throw cap_underflow("decomposition of index " + std::to_string(m) + " needs cap >= q^" +
                            std::to_string(need / 24));
    GeneratorCache cache(a.series.cap());
    auto p = canonicalize(substitute_xi(detail::decompose_rec(a.series, m, cache)));
    if (!agree(evaluate(p, cache).series, a.series))
        throw math_error("decomposition does not reproduce the input");
    return p;
}

/// Splits off phi_0_3half (even weight) or phi_m1_half (odd weight).
inline std::pair<Gen, JacobiForm> halfint_reduce(const JacobiForm &a)
{
    if (a.index.is_integer())
        throw std::invalid_argument("halfint_reduce needs a half-integral index");
    if (!a.weight.is_integer())
        throw std::invalid_argument("halfint_reduce needs an integral weight");
    const bool even = a.weight.as_integer() % 2 == 0;
    const Gen g = even ? Gen::phi_0_3half : Gen::phi_m1_half;
    const auto d = even ? phi_0_3half(a.series.cap()) : phi_m1_half(a.series.cap());
    LaurentSeries q;
    try {
        q = divide(a.series, d);
    } catch (const math_error &e) {
        throw math_error(std::string("inexact division by ") + gen_name(g) + ": " + e.what());
    }
    for (const auto &[e, c] : q.terms())
        for (const auto &[l2, v] : c.terms())
            if (l2 % 2)
                throw math_error("cofactor has half-integral y-exponents");
    const auto [gw, gt] = gen_degree(g);
    return {g, JacobiForm(a.weight - Half::from_twice(gw), a.index - Half::from_twice(gt), a.eta_character, q)};
}

// ---------------------------------------------------------------------------
// Eisenstein-Jacobi series by q^0-solving

/// Basis of M_k: E4^a E6^b (4a + 6b = k, b <= 1) together with Delta * M_(k-12).
inline std::vector<GeneratorPoly::Mono> modular_basis(int k)
{
    std::vector<GeneratorPoly::Mono> out;
    if (k < 0)
        return out;
    for (int b = 0; b <= 1; ++b) {
        const int rest = k - 6 * b;
        if (rest >= 0 && rest % 4 == 0) {
            GeneratorPoly::Mono m{};
            m[static_cast<std::size_t>(Gen::E4)] = rest / 4;
            m[static_cast<std::size_t>(Gen::E6)] = b;
            out.push_back(m);
            break;
        }
    }
    for (auto m : modular_basis(k - 12)) {
        m[static_cast<std::size_t>(Gen::Delta)] += 1;
        out.push_back(m);
    }
    return out;
}

struct Q0Solution {
    std::vector<GeneratorPoly::Mono> basis;
    GeneratorPoly particular;
    std::vector<GeneratorPoly> kernel;
    JacobiForm form;
    bool unique() const { return kernel.empty(); }
};

inline Q0Solution solve_by_q0(int k, int m, const YLaurent &target, long cap)
{
    if (m < 1)
        throw std::invalid_argument("solve_by_q0 needs index >= 1");
    Q0Solution sol;
    const std::size_t i21 = static_cast<std::size_t>(Gen::phi_m2_1), i01 = static_cast<std::size_t>(Gen::phi_0_1);
    for (int j = 0; j <= m; ++j)
        for (auto mono : modular_basis(k + 2 * j)) {
            mono[i21] = j;
            mono[i01] = m - j;
            sol.basis.push_back(mono);
        }
    const auto phi_m2_q0 = YLaurent::from_terms({{2, Rat(1)}, {0, Rat(-2)}, {-2, Rat(1)}});
    RatMatrix a;
    for (const auto &mono : sol.basis) {
        YLaurent q0 = mono[static_cast<std::size_t>(Gen::Delta)] > 0 ? YLaurent() : YLaurent(1);
        q0 = q0 * phi_m2_q0.pow(static_cast<unsigned>(mono[i21])) * q0_of(Gen::phi_0_1).pow(static_cast<unsigned>(mono[i01]));
        RatVector row(static_cast<std::size_t>(2 * m + 1));
        for (const auto &[e, c] : q0.terms())
            row[static_cast<std::size_t>(m - e / 2)] = c;
        a.push_back(row);
    }
    RatVector t(static_cast<std::size_t>(2 * m + 1));
    for (const auto &[e, c] : target.terms()) {
        if (e % 2 || std::abs(e / 2) > m)
            throw math_error("target " + target.to_string() + " has exponents outside [-m, m]");
        t[static_cast<std::size_t>(m - e / 2)] = c;
    }
    auto s = solve_rational(a, t);
    if (!s)
        throw math_error("target " + target.to_string() + " is not a q^0-term of the weight-" + std::to_string(k) +
                         " index-" + std::to_string(m) + " module");
    for (std::size_t i = 0; i < sol.basis.size(); ++i)
        sol.particular.add(sol.basis[i], s->particular[i]);
    for (const auto &kv : s->kernel) {
        GeneratorPoly p;
        for (std::size_t i = 0; i < sol.basis.size(); ++i)
            p.add(sol.basis[i], kv[i]);
        sol.kernel.push_back(p);
    }
    sol.form = evaluate(sol.particular, cap);
    return sol;
}

// ---------------------------------------------------------------------------
// Jet cocycle

/// exp(2 t G_2 u^2 - (D phi/phi) u) * sum_k D^k phi u^k / k!, truncated at u^order.
inline UJet<RationalSeries> jet_cocycle(const JacobiForm &a, std::size_t order)
{
    const auto phi = to_rational_functions(a.series);
    const auto dphi = y_ddy(phi);
    const auto ratio = divide(dphi, phi);
    const long cap = ratio.cap();
    UJet<RationalSeries> x(order);
    if (order >= 1)
        x[1] = -ratio;
    if (order >= 2)
        x[2] = lift<YRational>(eisenstein_G(2, cap)) * (Rat(2) * a.index.to_rat());
    UJet<RationalSeries> taylor(order);
    RationalSeries d = phi.truncated(cap);
    for (std::size_t k = 0; k <= order; ++k) {
        taylor[k] = d * inverse(factorial(static_cast<unsigned>(k)));
        d = y_ddy(d);
    }
    return exp(x) * taylor;
}

} // namespace jacobi
