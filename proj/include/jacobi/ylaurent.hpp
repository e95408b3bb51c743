#pragma once

#include <algorithm>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace jacobi {

/// Laurent polynomial in y^(1/2) with rational coefficients.
///
/// Exponents are stored as integers counting halves, so the key 3 means y^(3/2).
/// Terms are kept sorted by exponent and zero coefficients are never stored.
class YLaurent {
public:
    using Term = std::pair<int, Rat>;

    YLaurent() = default;
    YLaurent(const Rat &c)
    {
        if (!jacobi::is_zero(c))
            terms_.emplace_back(0, c);
    }
    YLaurent(long c) : YLaurent(Rat(c)) {}

    static YLaurent monomial(int half_exp, const Rat &c)
    {
        YLaurent r;
        if (!jacobi::is_zero(c))
            r.terms_.emplace_back(half_exp, c);
        return r;
    }

    // Builds from arbitrary (exponent, coefficient) pairs, merging duplicates.
    static YLaurent from_terms(std::vector<Term> terms)
    {
        std::sort(terms.begin(), terms.end(),
                  [](const Term &a, const Term &b) { return a.first < b.first; });
        YLaurent r;
        for (auto &t : terms) {
            if (!r.terms_.empty() && r.terms_.back().first == t.first)
                r.terms_.back().second += t.second;
            else
                r.terms_.push_back(std::move(t));
            if (jacobi::is_zero(r.terms_.back().second))
                r.terms_.pop_back();
        }
        return r;
    }

    const std::vector<Term> &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    bool is_monomial() const { return terms_.size() == 1; }
    int lowest() const { return terms_.front().first; }
    int highest() const { return terms_.back().first; }

    Rat coeff(int half_exp) const
    {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), half_exp,
                                   [](const Term &t, int e) { return t.first < e; });
        if (it != terms_.end() && it->first == half_exp)
            return it->second;
        return 0;
    }

    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0); }
    Rat constant_term() const { return coeff(0); }

    bool has_integral_coefficients() const
    {
        return std::all_of(terms_.begin(), terms_.end(),
                           [](const Term &t) { return is_integral(t.second); });
    }

    YLaurent &operator+=(const YLaurent &o) { return *this = *this + o; }
    YLaurent &operator-=(const YLaurent &o) { return *this = *this - o; }
    YLaurent &operator*=(const YLaurent &o) { return *this = *this * o; }

    friend YLaurent operator+(const YLaurent &a, const YLaurent &b) { return merge(a, b, false); }
    friend YLaurent operator-(const YLaurent &a, const YLaurent &b) { return merge(a, b, true); }
    friend YLaurent operator-(const YLaurent &a)
    {
        YLaurent r = a;
        for (auto &t : r.terms_)
            t.second = -t.second;
        return r;
    }

    friend YLaurent operator*(const YLaurent &a, const YLaurent &b)
    {
        if (a.is_zero() || b.is_zero())
            return {};
        if (b.is_monomial())
            return a.shifted(b.terms_[0].first) * b.terms_[0].second;
        if (a.is_monomial())
            return b.shifted(a.terms_[0].first) * a.terms_[0].second;
        const int lo = a.lowest() + b.lowest();
        const int hi = a.highest() + b.highest();
        std::vector<Rat> acc(static_cast<std::size_t>(hi - lo + 1));
        std::vector<bool> touched(acc.size(), false);
        Rat tmp;
        for (const auto &[ea, ca] : a.terms_)
            for (const auto &[eb, cb] : b.terms_) {
                const auto k = static_cast<std::size_t>(ea + eb - lo);
                mpq_mul(tmp.get_mpq_t(), ca.get_mpq_t(), cb.get_mpq_t());
                acc[k] += tmp;
                touched[k] = true;
            }
        YLaurent r;
        for (std::size_t k = 0; k < acc.size(); ++k)
            if (touched[k] && !jacobi::is_zero(acc[k]))
                r.terms_.emplace_back(static_cast<int>(k) + lo, std::move(acc[k]));
        return r;
    }

    friend YLaurent operator*(const YLaurent &a, const Rat &c)
    {
        if (jacobi::is_zero(c))
            return {};
        YLaurent r = a;
        for (auto &t : r.terms_)
            t.second *= c;
        return r;
    }
    friend YLaurent operator*(const Rat &c, const YLaurent &a) { return a * c; }

    friend bool operator==(const YLaurent &a, const YLaurent &b) { return a.terms_ == b.terms_; }

    /// Multiplication by y^(half_shift/2).
    YLaurent shifted(int half_shift) const
    {
        YLaurent r = *this;
        for (auto &t : r.terms_)
            t.first += half_shift;
        return r;
    }

    /// Substitution y -> y^h for a nonzero integer h.
    YLaurent power_substituted(int h) const
    {
        if (h == 0)
            throw std::invalid_argument("y -> y^0 is not a substitution");
        std::vector<Term> ts;
        ts.reserve(terms_.size());
        for (const auto &t : terms_)
            ts.emplace_back(t.first * h, t.second);
        return from_terms(std::move(ts));
    }

    /// The derivation y d/dy.
    YLaurent y_ddy() const
    {
        std::vector<Term> ts;
        for (const auto &[e, c] : terms_)
            if (e != 0)
                ts.emplace_back(e, c * make_rat(e, 2));
        YLaurent r;
        r.terms_ = std::move(ts);
        return r;
    }

    bool is_symmetric() const { return power_substituted(-1) == *this; }

    YLaurent pow(unsigned k) const
    {
        YLaurent r(1), b = *this;
        while (k) {
            if (k & 1u)
                r = r * b;
            k >>= 1u;
            if (k)
                b = b * b;
        }
        return r;
    }

    std::string to_string() const
    {
        if (terms_.empty())
            return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto &[e, c] = *it;
            Rat mag = abs(c);
            if (first)
                os << (sgn(c) < 0 ? "-" : "");
            else
                os << (sgn(c) < 0 ? " - " : " + ");
            first = false;
            const bool unit = (mag == 1);
            if (e == 0) {
                os << mag.get_str();
                continue;
            }
            if (!unit)
                os << mag.get_str();
            os << 'y';
            if (e != 2) {
                if (e % 2 == 0)
                    os << '^' << e / 2;
                else
                    os << "^(" << e << "/2)";
            }
        }
        return os.str();
    }

    friend std::ostream &operator<<(std::ostream &os, const YLaurent &p) { return os << p.to_string(); }

private:
    static YLaurent merge(const YLaurent &a, const YLaurent &b, bool subtract)
    {
        YLaurent r;
        r.terms_.reserve(a.terms_.size() + b.terms_.size());
        auto i = a.terms_.begin(), j = b.terms_.begin();
        while (i != a.terms_.end() || j != b.terms_.end()) {
            if (j == b.terms_.end() || (i != a.terms_.end() && i->first < j->first)) {
                r.terms_.push_back(*i++);
            } else if (i == a.terms_.end() || j->first < i->first) {
                r.terms_.emplace_back(j->first, subtract ? Rat(-j->second) : j->second);
                ++j;
            } else {
                Rat s = subtract ? Rat(i->second - j->second) : Rat(i->second + j->second);
                if (!jacobi::is_zero(s))
                    r.terms_.emplace_back(i->first, std::move(s));
                ++i;
                ++j;
            }
        }
        return r;
    }

    std::vector<Term> terms_;
};

inline bool is_zero(const YLaurent &p) { return p.is_zero(); }
inline bool is_unit(const YLaurent &p) { return p.is_monomial(); }
inline YLaurent inverse(const YLaurent &p)
{
    if (!p.is_monomial())
        throw math_error("Laurent polynomial " + p.to_string() + " is not a unit");
    return YLaurent::monomial(-p.lowest(), inverse(p.terms()[0].second));
}

/// Exact division in Q[y^(1/2), y^(-1/2)]; throws if the divisor does not divide.
inline YLaurent divide_exact(const YLaurent &num, const YLaurent &den)
{
    if (den.is_zero())
        throw math_error("division by zero Laurent polynomial");
    if (num.is_zero())
        return {};
    if (den.is_monomial())
        return num * inverse(den);
    // Long division from the top degree down.
    std::vector<YLaurent::Term> quot;
    YLaurent rem = num;
    const int dh = den.highest();
    const Rat lead_inv = inverse(den.terms().back().second);
    while (!rem.is_zero() && rem.highest() - dh >= rem.lowest() - den.lowest()) {
        const int e = rem.highest() - dh;
        Rat c = rem.terms().back().second * lead_inv;
        quot.emplace_back(e, c);
        rem = rem - den.shifted(e) * c;
    }
    if (!rem.is_zero())
        throw math_error("Laurent division is not exact: " + num.to_string() + " / " + den.to_string());
    return YLaurent::from_terms(std::move(quot));
}

} // namespace jacobi
