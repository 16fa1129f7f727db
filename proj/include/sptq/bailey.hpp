// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <climits>
#include <string>
#include <string_view>

#include "sptq/series.hpp"

namespace sptq {

/// Bailey pair relative to a = 1 whose odd-indexed alphas vanish and whose
/// even-indexed alphas are alpha_{2m} = (-1)^m q^{e(m)} (1 + q^{2m}) for
/// m >= 1, alpha_0 = 1. beta_n = q^{b(n)} / ((q)_n (q;q^2)_n).
///
/// Slater's C(1) has e(m) = m(3m-1), b(n) = 0; C(5) has e(m) = m(m-1),
/// b(n) = n(n-1)/2.
class BaileyPair {
public:
    static BaileyPair c1() { return BaileyPair("C1", Kind::c1); }
    static BaileyPair c5() { return BaileyPair("C5", Kind::c5); }

    static BaileyPair from_label(std::string_view label)
    {
        if (label == "C1") {
            return c1();
        }
        if (label == "C5") {
            return c5();
        }
        throw std::invalid_argument("unknown Bailey pair '" + std::string(label) + "'");
    }

    const std::string& label() const noexcept { return label_; }

    /// Lowest exponent that can occur in alpha_n, or INT_MAX when alpha_n = 0.
    int alpha_min_exponent(int n) const
    {
        require_index(n);
        if (n == 0) {
            return 0;
        }
        if (n % 2 == 1) {
            return INT_MAX;
        }
        return alpha_exponent(n / 2);
    }

    TruncatedSeries alpha(int n, int order) const
    {
        require_index(n);
        if (n == 0) {
            return one(order);
        }
        if (n % 2 == 1) {
            return zero(order);
        }
        const int m = n / 2;
        const int e = alpha_exponent(m);
        const Integer sign = m % 2 == 0 ? 1 : -1;
        return monomial(e, sign, order) + monomial(e + 2 * m, sign, order);
    }

    TruncatedSeries beta(int n, int order) const
    {
        require_index(n);
        const int lead = kind_ == Kind::c1 ? 0 : n * (n - 1) / 2;
        if (lead > order) {
            return zero(order);
        }
        return shift(invert(qpoch_fin(1, 1, n, order) * qpoch_fin(1, 2, n, order)), lead);
    }

private:
    enum class Kind { c1, c5 };

    BaileyPair(std::string label, Kind kind) : label_(std::move(label)), kind_(kind) {}

    int alpha_exponent(int m) const { return kind_ == Kind::c1 ? m * (3 * m - 1) : m * (m - 1); }

    static void require_index(int n)
    {
        if (n < 0) {
            throw std::invalid_argument("BaileyPair: negative index");
        }
    }

    std::string label_;
    Kind kind_;
};

inline BaileyPair bailey_pair(std::string_view label) { return BaileyPair::from_label(label); }

/// sum_{r=0}^{n} alpha_r / ((q)_{n+r} (q)_{n-r}), the right side of the
/// defining relation with a = 1.
inline TruncatedSeries bailey_transform(const BaileyPair& pair, int n, int order)
{
    auto acc = zero(order);
    for (int r = 0; r <= n; ++r) {
        if (pair.alpha_min_exponent(r) > order) {
            continue;
        }
        acc = acc + pair.alpha(r, order) * invert(qpoch_fin(1, 1, n + r, order)) *
                        invert(qpoch_fin(1, 1, n - r, order));
    }
    return acc;
}

/// n-th summand (q)_{n-1}^2 beta_n q^n of the differentiated Bailey lemma.
inline TruncatedSeries eq12_lhs_term(const BaileyPair& pair, int n, int order)
{
    if (n < 1) {
        throw std::invalid_argument("eq12_lhs_term: index must be positive");
    }
    if (n > order) {
        return zero(order);
    }
    const auto q = qpoch_fin(1, 1, n - 1, order);
    return shift(q * q * pair.beta(n, order), n);
}

/// sum_{n>=1} (q)_{n-1}^2 beta_n q^n.
inline TruncatedSeries eq12_lhs(const BaileyPair& pair, int order)
{
    auto acc = zero(order);
    for (int n = 1; n <= order; ++n) {
        acc = acc + eq12_lhs_term(pair, n, order);
    }
    return acc;
}

/// sum_{n>=1} alpha_n q^n / (1 - q^n)^2; only even n contribute.
inline TruncatedSeries eq12_alpha_sum(const BaileyPair& pair, int order)
{
    auto acc = zero(order);
    for (int n = 2; n <= order && pair.alpha_min_exponent(n) <= order - n; n += 2) {
        acc = acc + pair.alpha(n, order) * geom_sq(n, order);
    }
    return acc;
}

/// alpha_0 sum n q^n/(1-q^n) + sum_{n>=1} alpha_n q^n/(1-q^n)^2.
inline TruncatedSeries eq12_rhs(const BaileyPair& pair, int order)
{
    return pair.alpha(0, order) * lambert_sigma(order) + eq12_alpha_sum(pair, order);
}

} // namespace sptq
