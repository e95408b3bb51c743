#pragma once

#include <string>

#include "series.hpp"

namespace jacobi {

/// A (weak) Jacobi form: graded tags plus its Fourier expansion.
///
/// The eta character is the exponent k of v_eta^k, taken mod 24.
struct JacobiForm {
    Half weight;
    Half index;
    int eta_character = 0;
    LaurentSeries series;

    JacobiForm() = default;
    JacobiForm(Half w, Half t, int chi, LaurentSeries s)
        : weight(w), index(t), eta_character(static_cast<int>(mod_pos(chi, 24))), series(std::move(s))
    {
    }

    static JacobiForm constant(const Rat &c) { return {Half{}, Half{}, 0, LaurentSeries(c)}; }

    friend JacobiForm operator*(const JacobiForm &a, const JacobiForm &b)
    {
        return {a.weight + b.weight, a.index + b.index, a.eta_character + b.eta_character, a.series * b.series};
    }
    friend JacobiForm operator*(const JacobiForm &a, const Rat &c)
    {
        return {a.weight, a.index, a.eta_character, a.series * c};
    }

    JacobiForm truncated(long cap) const { return {weight, index, eta_character, series.truncated(cap)}; }
};

inline JacobiForm pow(const JacobiForm &a, long k)
{
    if (k < 0)
        throw std::invalid_argument("negative power of a Jacobi form");
    JacobiForm r = JacobiForm::constant(1);
    for (long i = 0; i < k; ++i)
        r = r * a;
    return r;
}

/// Graded sum; both operands must share weight, index and character.
inline JacobiForm add(const JacobiForm &a, const JacobiForm &b)
{
    if (a.weight != b.weight || a.index != b.index || a.eta_character != b.eta_character)
        throw math_error("adding Jacobi forms of different type");
    return {a.weight, a.index, a.eta_character, a.series + b.series};
}

} // namespace jacobi
