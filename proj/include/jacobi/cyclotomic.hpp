#pragma once

#include <string>

#include "rational.hpp"
#include "ylaurent.hpp"

namespace jacobi {

inline bool is_supported_order(int n) { return n == 1 || n == 2 || n == 3 || n == 4 || n == 6; }

/// Element a + b*zeta_N of Q(zeta_N) for N in {1, 2, 3, 4, 6}.
///
/// For N = 1 and N = 2 the field is Q and b is always zero. Elements with
/// b = 0 are rational and combine freely with elements of any order; the only
/// non-trivial coercion is Q(zeta_3) into Q(zeta_6).
class Cyclotomic {
public:
    Cyclotomic() = default;
    Cyclotomic(const Rat &a) : a_(a) {}
    Cyclotomic(long a) : a_(a) {}
    Cyclotomic(int order, Rat a, Rat b) : order_(order), a_(std::move(a)), b_(std::move(b))
    {
        if (!is_supported_order(order))
            throw std::invalid_argument("unsupported cyclotomic order " + std::to_string(order));
        if ((order == 1 || order == 2) && !jacobi::is_zero(b_))
            throw std::invalid_argument("Q(zeta_1) and Q(zeta_2) have degree one");
    }

    /// zeta_N^k.
    static Cyclotomic root_power(int order, long k)
    {
        if (!is_supported_order(order))
            throw std::invalid_argument("unsupported cyclotomic order " + std::to_string(order));
        k = mod_pos(k, order);
        if (order == 1)
            return Cyclotomic(1);
        if (order == 2)
            return Cyclotomic(2, k == 0 ? Rat(1) : Rat(-1), 0);
        Cyclotomic z(order, 0, 1), r(order, 1, 0);
        for (long i = 0; i < k; ++i)
            r = r * z;
        return r;
    }

    int order() const { return order_; }
    const Rat &a() const { return a_; }
    const Rat &b() const { return b_; }
    bool is_rational() const { return jacobi::is_zero(b_); }
    bool is_zero() const { return jacobi::is_zero(a_) && jacobi::is_zero(b_); }

    Rat to_rat() const
    {
        if (!is_rational())
            throw math_error("cyclotomic number " + to_string() + " is not rational");
        return a_;
    }

    /// Re-expresses the element in Q(zeta_M), M a multiple of the current order.
    Cyclotomic embedded(int m) const
    {
        if (is_rational())
            return Cyclotomic(m, a_, 0);
        if (m == order_)
            return *this;
        if (order_ == 3 && m == 6) // zeta_3 = zeta_6^2 = zeta_6 - 1
            return Cyclotomic(6, a_ - b_, b_);
        throw math_error("cannot embed Q(zeta_" + std::to_string(order_) + ") into Q(zeta_" +
                         std::to_string(m) + ")");
    }

    Cyclotomic conj() const
    {
        switch (order_) {
        case 3: return Cyclotomic(3, a_ - b_, -b_); // zeta^-1 = -1 - zeta
        case 4: return Cyclotomic(4, a_, -b_);      // zeta^-1 = -zeta
        case 6: return Cyclotomic(6, a_ + b_, -b_); // zeta^-1 = 1 - zeta
        default: return *this;
        }
    }

    friend Cyclotomic operator+(const Cyclotomic &x, const Cyclotomic &y)
    {
        const int m = common_order(x, y);
        const auto u = x.embedded(m), v = y.embedded(m);
        return Cyclotomic(m, u.a_ + v.a_, u.b_ + v.b_, Raw{});
    }
    friend Cyclotomic operator-(const Cyclotomic &x) { return Cyclotomic(x.order_, -x.a_, -x.b_, Raw{}); }
    friend Cyclotomic operator-(const Cyclotomic &x, const Cyclotomic &y) { return x + (-y); }
    friend Cyclotomic operator*(const Cyclotomic &x, const Cyclotomic &y)
    {
        const int m = common_order(x, y);
        const auto u = x.embedded(m), v = y.embedded(m);
        Rat c0 = u.a_ * v.a_;
        Rat c1 = u.a_ * v.b_ + u.b_ * v.a_;
        Rat c2 = u.b_ * v.b_;
        switch (m) {
        case 3: // zeta^2 = -zeta - 1
            return Cyclotomic(m, c0 - c2, c1 - c2, Raw{});
        case 4: // zeta^2 = -1
            return Cyclotomic(m, c0 - c2, c1, Raw{});
        case 6: // zeta^2 = zeta - 1
            return Cyclotomic(m, c0 - c2, c1 + c2, Raw{});
        default:
            return Cyclotomic(m, c0, 0, Raw{});
        }
    }
    friend Cyclotomic operator*(const Cyclotomic &x, const Rat &c) { return Cyclotomic(x.order_, x.a_ * c, x.b_ * c, Raw{}); }
    friend Cyclotomic operator*(const Rat &c, const Cyclotomic &x) { return x * c; }
    Cyclotomic &operator+=(const Cyclotomic &o) { return *this = *this + o; }
    Cyclotomic &operator*=(const Cyclotomic &o) { return *this = *this * o; }

    friend bool operator==(const Cyclotomic &x, const Cyclotomic &y)
    {
        if (x.is_rational() && y.is_rational())
            return x.a_ == y.a_;
        const int m = common_order(x, y);
        const auto u = x.embedded(m), v = y.embedded(m);
        return u.a_ == v.a_ && u.b_ == v.b_;
    }

    Cyclotomic inverse() const
    {
        if (is_zero())
            throw math_error("inverse of zero cyclotomic number");
        if (is_rational())
            return Cyclotomic(order_, jacobi::inverse(a_), 0, Raw{});
        // x * conj(x) is rational.
        const Cyclotomic c = conj();
        const Rat n = (*this * c).to_rat();
        return c * jacobi::inverse(n);
    }

    std::string to_string() const
    {
        if (is_rational())
            return a_.get_str();
        return "(" + a_.get_str() + (sgn(b_) < 0 ? " - " : " + ") + Rat(abs(b_)).get_str() + "*zeta" +
               std::to_string(order_) + ")";
    }

private:
    struct Raw {};
    Cyclotomic(int order, Rat a, Rat b, Raw) : order_(order), a_(std::move(a)), b_(std::move(b)) {}

    static int common_order(const Cyclotomic &x, const Cyclotomic &y)
    {
        if (x.order_ == y.order_)
            return x.order_;
        if (x.is_rational())
            return y.order_;
        if (y.is_rational())
            return x.order_;
        if ((x.order_ == 3 && y.order_ == 6) || (x.order_ == 6 && y.order_ == 3))
            return 6;
        throw math_error("cyclotomic ring mismatch: orders " + std::to_string(x.order_) + " and " +
                         std::to_string(y.order_));
    }

    int order_ = 1;
    Rat a_;
    Rat b_;
};

inline bool is_zero(const Cyclotomic &x) { return x.is_zero(); }
inline bool is_unit(const Cyclotomic &x) { return !x.is_zero(); }
inline Cyclotomic inverse(const Cyclotomic &x) { return x.inverse(); }

/// Smallest supported order M such that y -> zeta_N is defined on p.
/// Half-integral exponents need a square root of zeta_N, i.e. zeta_2N.
inline int evaluation_order(const YLaurent &p, int n)
{
    bool half = false;
    for (const auto &t : p.terms())
        half = half || (t.first % 2 != 0);
    const int m = half ? 2 * n : n;
    if (!is_supported_order(m))
        throw math_error("substitution y -> zeta_" + std::to_string(n) +
                         " needs unsupported root of unity of order " + std::to_string(m));
    return m;
}

/// Value of p at y = zeta_N (with y^(1/2) = zeta_2N), in Q(zeta_M), M = evaluation order.
inline Cyclotomic evaluate_at_root(const YLaurent &p, int n, int m)
{
    // y^(e/2) = zeta_N^(e/2) = zeta_M^(e * M / (2N)).
    Cyclotomic acc(m, 0, 0);
    for (const auto &[e, c] : p.terms()) {
        const long num = static_cast<long>(e) * m;
        if (num % (2 * n) != 0)
            throw math_error("exponent not compatible with the chosen root of unity");
        acc += Cyclotomic::root_power(m, num / (2 * n)) * c;
    }
    return acc;
}

} // namespace jacobi
