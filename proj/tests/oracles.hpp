#pragma once

// Brute-force reference computations on plain maps, kept independent of the
// library's series arithmetic.

#include <array>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "jacobi/jacobi.hpp"

namespace oracle {

using jacobi::Rat;

// (q-exponent in 1/24 units, twice the y-exponent) -> coefficient
using Table = std::map<std::pair<long, int>, Rat>;

inline Table table_of(const jacobi::LaurentSeries &s, long cap)
{
    Table t;
    for (const auto &[e, c] : s.terms())
        if (e <= cap)
            for (const auto &[l, v] : c.terms())
                t[{e, l}] = v;
    return t;
}

inline Table multiply(const Table &a, const Table &b, long cap)
{
    Table r;
    for (const auto &[ka, va] : a)
        for (const auto &[kb, vb] : b)
            if (ka.first + kb.first <= cap)
                r[{ka.first + kb.first, ka.second + kb.second}] += va * vb;
    std::erase_if(r, [](const auto &kv) { return kv.second == 0; });
    return r;
}

/// sum_n (-1)^n q^((n+1/2)^2/2) y^(n+1/2)
inline Table theta_sum(long cap)
{
    Table t;
    for (long n = -40; n <= 40; ++n) {
        const long twice = 2 * n + 1;
        const long e = 3 * twice * twice; // 24 * twice^2 / 8
        if (e <= cap)
            t[{e, static_cast<int>(twice)}] += (n % 2 ? -1 : 1);
    }
    return t;
}

/// q^(1/8) (y^(1/2) - y^(-1/2)) prod_n (1 - q^n)(1 - q^n y)(1 - q^n / y)
inline Table theta_product(long cap)
{
    Table t{{{3, 1}, Rat(1)}, {{3, -1}, Rat(-1)}};
    for (long n = 1; 24 * n <= cap; ++n)
        for (int l : {0, 2, -2})
            t = multiply(t, Table{{{0, 0}, Rat(1)}, {{24 * n, l}, Rat(-1)}}, cap);
    return t;
}

/// E8 roots in doubled coordinates.
inline std::vector<std::array<int, 8>> e8_roots()
{
    std::vector<std::array<int, 8>> roots;
    for (int i = 0; i < 8; ++i)
        for (int j = i + 1; j < 8; ++j)
            for (int si : {-2, 2})
                for (int sj : {-2, 2}) {
                    std::array<int, 8> v{};
                    v[static_cast<std::size_t>(i)] = si;
                    v[static_cast<std::size_t>(j)] = sj;
                    roots.push_back(v);
                }
    for (int mask = 0; mask < 256; ++mask) {
        if (__builtin_popcount(static_cast<unsigned>(mask)) % 2)
            continue;
        std::array<int, 8> v{};
        for (int i = 0; i < 8; ++i)
            v[static_cast<std::size_t>(i)] = (mask >> i) & 1 ? -1 : 1;
        roots.push_back(v);
    }
    return roots;
}

/// Counts of (r, a) over all roots r for a fixed root a, keyed by the pairing value.
inline std::map<int, int> e8_pairing_counts()
{
    const auto roots = e8_roots();
    const auto &a = roots.front();
    std::map<int, int> counts;
    for (const auto &r : roots) {
        int dot = 0;
        for (std::size_t i = 0; i < 8; ++i)
            dot += r[i] * a[i];
        ++counts[dot / 4];
    }
    return counts;
}

// (p-power, q-power, twice the y-power) -> coefficient
using Table3 = std::map<std::array<long, 3>, Rat>;

/// prod (1 - q^m y^l p^n)^(-f(mn, l)) over m >= 0, n >= 1, expanded factor by factor.
inline Table3 sqeg_product(const jacobi::LaurentSeries &f, long pmax, long qmax)
{
    Table3 acc{{{0, 0, 0}, Rat(1)}};
    for (long n = 1; n <= pmax; ++n)
        for (long m = 0; m <= qmax; ++m) {
            const auto coeff = f.coeff(24 * m * n);
            for (const auto &[l, c] : coeff.terms()) {
                // (1 - x)^(-c) = sum_k c(c+1)...(c+k-1)/k! x^k
                Table3 factor;
                Rat binom = 1;
                for (long k = 0; k * n <= pmax && k * m <= qmax; ++k) {
                    if (k > 0)
                        binom = binom * (c + k - 1) / k;
                    if (binom == 0)
                        break;
                    factor[{k * n, k * m, static_cast<long>(k * l)}] += binom;
                }
                Table3 next;
                for (const auto &[ka, va] : acc)
                    for (const auto &[kb, vb] : factor)
                        if (ka[0] + kb[0] <= pmax && ka[1] + kb[1] <= qmax)
                            next[{ka[0] + kb[0], ka[1] + kb[1], ka[2] + kb[2]}] += va * vb;
                std::erase_if(next, [](const auto &kv) { return kv.second == 0; });
                acc = std::move(next);
            }
        }
    return acc;
}

/// chi_p = sum_q (-1)^q h^(p,q)
inline std::vector<jacobi::Int> chi_from_hodge(const std::vector<std::vector<long>> &h)
{
    std::vector<jacobi::Int> chi;
    for (const auto &row : h) {
        jacobi::Int s = 0;
        for (std::size_t q = 0; q < row.size(); ++q)
            s += (q % 2 ? -1 : 1) * row[q];
        chi.push_back(s);
    }
    return chi;
}

inline long euler_from_hodge(const std::vector<std::vector<long>> &h)
{
    long e = 0;
    for (std::size_t p = 0; p < h.size(); ++p)
        for (std::size_t q = 0; q < h[p].size(); ++q)
            e += ((p + q) % 2 ? -1 : 1) * h[p][q];
    return e;
}

/// Random integer combination of the index-m weight-0 monomials.
inline jacobi::GeneratorPoly random_weight0(int m, std::mt19937 &rng)
{
    std::uniform_int_distribution<int> coeff(-9, 9);
    jacobi::GeneratorPoly p;
    for (const auto &mono : jacobi::weight0_monomials(m))
        p.add(mono, Rat(coeff(rng)));
    if (p.is_zero())
        p.add(jacobi::weight0_monomials(m).front(), Rat(1));
    return p;
}

} // namespace oracle
