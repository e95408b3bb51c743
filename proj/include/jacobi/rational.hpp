#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace jacobi {

using Rat = mpq_class;
using Int = mpz_class;

struct math_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when a truncation cap is too small for the requested exponent range.
struct cap_underflow : math_error {
    using math_error::math_error;
};

inline Rat make_rat(long num, long den = 1)
{
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_zero(const Rat &x) { return sgn(x) == 0; }
inline bool is_unit(const Rat &x) { return sgn(x) != 0; }
inline Rat inverse(const Rat &x)
{
    if (sgn(x) == 0)
        throw math_error("inverse of zero rational");
    Rat r = 1 / x;
    return r;
}
inline bool is_integral(const Rat &x) { return x.get_den() == 1; }

inline std::string to_string(const Rat &x)
{
    return x.get_str();
}

// Accepts "a", "-a" and "a/b"; the result is canonical.
inline Rat parse_rat(std::string_view s)
{
    std::string str(s);
    if (str.empty())
        throw std::invalid_argument("empty rational literal");
    Rat r;
    if (r.set_str(str, 10) != 0)
        throw std::invalid_argument("malformed rational literal '" + str + "'");
    if (r.get_den() == 0)
        throw std::invalid_argument("zero denominator in '" + str + "'");
    r.canonicalize();
    return r;
}

inline long to_long(const Int &z)
{
    if (!z.fits_slong_p())
        throw math_error("integer does not fit in a machine word");
    return z.get_si();
}

// Element of (1/2)Z stored as twice its value; used for weights and indices.
struct Half {
    int twice = 0;

    constexpr Half() = default;
    static constexpr Half from_twice(int t)
    {
        Half h;
        h.twice = t;
        return h;
    }
    static constexpr Half integer(int n) { return from_twice(2 * n); }

    constexpr bool is_integer() const { return twice % 2 == 0; }
    constexpr int as_integer() const
    {
        if (twice % 2 != 0)
            throw std::logic_error("half-integer has no integer value");
        return twice / 2;
    }
    Rat to_rat() const { return make_rat(twice, 2); }

    friend constexpr Half operator+(Half a, Half b) { return from_twice(a.twice + b.twice); }
    friend constexpr Half operator-(Half a, Half b) { return from_twice(a.twice - b.twice); }
    friend constexpr Half operator-(Half a) { return from_twice(-a.twice); }
    friend constexpr Half operator*(int k, Half a) { return from_twice(k * a.twice); }
    friend constexpr bool operator==(Half, Half) = default;
    friend constexpr auto operator<=>(Half, Half) = default;
};

inline std::string to_string(Half h)
{
    if (h.is_integer())
        return std::to_string(h.twice / 2);
    return std::to_string(h.twice) + "/2";
}

inline Half parse_half(std::string_view s)
{
    Rat r = parse_rat(s);
    Rat t = 2 * r;
    if (!is_integral(t))
        throw std::invalid_argument("not a half-integer: " + std::string(s));
    return Half::from_twice(static_cast<int>(to_long(t.get_num())));
}

// Saturating arithmetic for truncation caps; kInfinite marks exact data.
inline constexpr long kInfinite = std::numeric_limits<long>::max() / 4;

constexpr long cap_add(long a, long b)
{
    if (a >= kInfinite || b >= kInfinite)
        return kInfinite;
    long s = a + b;
    return s >= kInfinite ? kInfinite : s;
}

inline long floor_div(long a, long b)
{
    long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

inline long mod_pos(long a, long m)
{
    long r = a % m;
    return r < 0 ? r + m : r;
}

inline Rat rat_pow(const Rat &x, unsigned k)
{
    Rat r = 1;
    Rat b = x;
    while (k) {
        if (k & 1u)
            r *= b;
        b *= b;
        k >>= 1u;
    }
    return r;
}

inline Rat factorial(unsigned n)
{
    Int f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rat(f);
}

inline Rat binomial(long n, long k)
{
    // Generalized binomial n(n-1)...(n-k+1)/k!, valid for negative n.
    if (k < 0)
        return 0;
    Rat r = 1;
    for (long i = 0; i < k; ++i) {
        r *= Rat(n - i);
        r /= Rat(i + 1);
    }
    return r;
}

} // namespace jacobi
