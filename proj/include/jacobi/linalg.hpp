#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace jacobi {

using IntVector = std::vector<Int>;
using IntMatrix = std::vector<IntVector>;
using RatVector = std::vector<Rat>;
using RatMatrix = std::vector<RatVector>;

/// Row Hermite normal form H = U A with U unimodular.
///
/// Pivots are positive, entries above a pivot lie in [0, pivot), and the
/// first `rank` rows of H are nonzero.
struct HermiteForm {
    IntMatrix h;
    IntMatrix u;
    std::vector<std::size_t> pivot_cols;
    std::size_t rank() const { return pivot_cols.size(); }
};

inline HermiteForm hermite_form(const IntMatrix &a, std::size_t ncols)
{
    const std::size_t n = a.size();
    HermiteForm f;
    f.h = a;
    f.u.assign(n, IntVector(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        f.u[i][i] = 1;
    auto &h = f.h;
    auto &u = f.u;
    auto row_sub = [&](std::size_t dst, std::size_t src, const Int &k) {
        if (k == 0)
            return;
        for (std::size_t c = 0; c < ncols; ++c)
            h[dst][c] -= k * h[src][c];
        for (std::size_t c = 0; c < n; ++c)
            u[dst][c] -= k * u[src][c];
    };
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < n; ++c) {
        // Euclid on column c among rows r..n-1.
        for (;;) {
            std::size_t best = n;
            for (std::size_t i = r; i < n; ++i)
                if (h[i][c] != 0 && (best == n || abs(h[i][c]) < abs(h[best][c])))
                    best = i;
            if (best == n)
                break;
            std::swap(h[r], h[best]);
            std::swap(u[r], u[best]);
            bool done = true;
            for (std::size_t i = r + 1; i < n; ++i) {
                if (h[i][c] == 0)
                    continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), h[i][c].get_mpz_t(), h[r][c].get_mpz_t());
                row_sub(i, r, q);
                if (h[i][c] != 0)
                    done = false;
            }
            if (done)
                break;
        }
        if (h[r][c] == 0)
            continue;
        if (h[r][c] < 0) {
            for (auto &x : h[r])
                x = -x;
            for (auto &x : u[r])
                x = -x;
        }
        for (std::size_t i = 0; i < r; ++i) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), h[i][c].get_mpz_t(), h[r][c].get_mpz_t());
            row_sub(i, r, q);
        }
        f.pivot_cols.push_back(c);
        ++r;
    }
    return f;
}

/// Integer row vector x with x A = t, if one exists.
inline std::optional<IntVector> solve_integer(const IntMatrix &a, const IntVector &t)
{
    const std::size_t ncols = t.size();
    const auto f = hermite_form(a, ncols);
    IntVector rest = t;
    IntVector y(f.rank());
    for (std::size_t i = 0; i < f.rank(); ++i) {
        const std::size_t c = f.pivot_cols[i];
        if (!mpz_divisible_p(rest[c].get_mpz_t(), f.h[i][c].get_mpz_t()))
            return std::nullopt;
        y[i] = rest[c] / f.h[i][c];
        for (std::size_t k = 0; k < ncols; ++k)
            rest[k] -= y[i] * f.h[i][k];
    }
    for (const auto &v : rest)
        if (v != 0)
            return std::nullopt;
    IntVector x(a.size(), 0);
    for (std::size_t i = 0; i < f.rank(); ++i)
        for (std::size_t k = 0; k < a.size(); ++k)
            x[k] += y[i] * f.u[i][k];
    return x;
}

/// Z-basis of {x : x A = 0}.
inline IntMatrix left_kernel(const IntMatrix &a, std::size_t ncols)
{
    const auto f = hermite_form(a, ncols);
    return IntMatrix(f.u.begin() + static_cast<std::ptrdiff_t>(f.rank()), f.u.end());
}

/// True when the rows of a and b generate the same lattice.
inline bool same_lattice(const IntMatrix &a, const IntMatrix &b, std::size_t ncols)
{
    auto ha = hermite_form(a, ncols), hb = hermite_form(b, ncols);
    if (ha.rank() != hb.rank())
        return false;
    for (std::size_t i = 0; i < ha.rank(); ++i)
        if (ha.h[i] != hb.h[i])
            return false;
    return true;
}

/// Rational solutions of x A = t: a particular solution and a kernel basis.
struct RationalSolution {
    RatVector particular;
    RatMatrix kernel;
};

inline std::optional<RationalSolution> solve_rational(const RatMatrix &a, const RatVector &t)
{
    // Transpose: unknowns become columns of M = A^T, augmented by t.
    const std::size_t nvars = a.size(), neqs = t.size();
    RatMatrix m(neqs, RatVector(nvars + 1));
    for (std::size_t i = 0; i < neqs; ++i) {
        for (std::size_t j = 0; j < nvars; ++j)
            m[i][j] = a[j][i];
        m[i][nvars] = t[i];
    }
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < nvars && r < neqs; ++c) {
        std::size_t p = r;
        while (p < neqs && is_zero(m[p][c]))
            ++p;
        if (p == neqs)
            continue;
        std::swap(m[r], m[p]);
        const Rat inv = inverse(m[r][c]);
        for (auto &x : m[r])
            x *= inv;
        for (std::size_t i = 0; i < neqs; ++i) {
            if (i == r || is_zero(m[i][c]))
                continue;
            const Rat k = m[i][c];
            for (std::size_t j = 0; j <= nvars; ++j)
                m[i][j] -= k * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < neqs; ++i)
        if (!is_zero(m[i][nvars]))
            return std::nullopt;
    RationalSolution s;
    s.particular.assign(nvars, 0);
    for (std::size_t i = 0; i < r; ++i)
        s.particular[pivots[i]] = m[i][nvars];
    std::vector<bool> is_pivot(nvars, false);
    for (auto c : pivots)
        is_pivot[c] = true;
    for (std::size_t f = 0; f < nvars; ++f) {
        if (is_pivot[f])
            continue;
        RatVector k(nvars, 0);
        k[f] = 1;
        for (std::size_t i = 0; i < r; ++i)
            k[pivots[i]] = -m[i][f];
        s.kernel.push_back(std::move(k));
    }
    return s;
}

} // namespace jacobi
