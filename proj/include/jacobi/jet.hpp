#pragma once

#include <cstddef>
#include <vector>

#include "series.hpp"

namespace jacobi {

/// Polynomial c_0 + c_1 u + ... + c_U u^U truncated at a fixed jet order U.
template <class T>
class UJet {
public:
    explicit UJet(std::size_t order) : c_(order + 1) {}
    UJet(std::size_t order, const T &constant) : c_(order + 1) { c_[0] = constant; }

    std::size_t order() const { return c_.size() - 1; }
    const T &operator[](std::size_t k) const { return c_[k]; }
    T &operator[](std::size_t k) { return c_[k]; }
    const std::vector<T> &coeffs() const { return c_; }

    friend UJet operator+(const UJet &a, const UJet &b)
    {
        UJet r(std::min(a.order(), b.order()));
        for (std::size_t k = 0; k <= r.order(); ++k)
            r.c_[k] = a.c_[k] + b.c_[k];
        return r;
    }
    friend UJet operator-(const UJet &a, const UJet &b)
    {
        UJet r(std::min(a.order(), b.order()));
        for (std::size_t k = 0; k <= r.order(); ++k)
            r.c_[k] = a.c_[k] - b.c_[k];
        return r;
    }
    friend UJet operator*(const UJet &a, const UJet &b)
    {
        UJet r(std::min(a.order(), b.order()));
        for (std::size_t i = 0; i <= r.order(); ++i)
            for (std::size_t j = 0; i + j <= r.order(); ++j)
                r.c_[i + j] = r.c_[i + j] + a.c_[i] * b.c_[j];
        return r;
    }
    friend UJet operator*(const UJet &a, const Rat &s)
    {
        UJet r = a;
        for (auto &c : r.c_)
            c = c * s;
        return r;
    }

private:
    std::vector<T> c_;
};

/// exp of a jet with vanishing constant coefficient: n E_n = sum_k k X_k E_(n-k).
template <class T>
UJet<T> exp(const UJet<T> &x)
{
    if (!is_zero_series(x[0]))
        throw math_error("jet exp needs a vanishing u^0 coefficient");
    UJet<T> e(x.order());
    e[0] = T(Rat(1));
    for (std::size_t n = 1; n <= x.order(); ++n) {
        T acc;
        for (std::size_t k = 1; k <= n; ++k)
            acc = acc + x[k] * e[n - k] * Rat(static_cast<long>(k));
        e[n] = acc * make_rat(1, static_cast<long>(n));
    }
    return e;
}

template <class R, long Den>
bool is_zero_series(const FourierSeries<R, Den> &s)
{
    return s.is_zero();
}

/// Substitution y -> e^u into a series over YLaurent: the u^j coefficient is
/// sum_l c_l l^j / j!.
template <long Den>
UJet<RatSeries<Den>> substitute_exp_jet(const FourierSeries<YLaurent, Den> &a, std::size_t order)
{
    UJet<RatSeries<Den>> jet(order);
    for (std::size_t j = 0; j <= order; ++j) {
        std::vector<typename RatSeries<Den>::Term> ts;
        const Rat inv_fact = inverse(factorial(static_cast<unsigned>(j)));
        for (const auto &[e, c] : a.terms()) {
            Rat acc = 0;
            for (const auto &[l2, v] : c.terms())
                acc += v * rat_pow(make_rat(l2, 2), static_cast<unsigned>(j));
            if (!is_zero(acc))
                ts.emplace_back(e, acc * inv_fact);
        }
        jet[j] = RatSeries<Den>::from_terms(std::move(ts), a.cap());
    }
    return jet;
}

} // namespace jacobi
