// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace sptq {

using Integer = boost::multiprecision::cpp_int;

/// Thrown when a series has a constant term that is not a unit of Z.
class not_invertible : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Formal power series in q with exact integer coefficients, known modulo
/// q^(order+1).
///
/// Values are immutable: every operation returns a new series. Binary
/// operations on series of different orders truncate to the smaller order.
class TruncatedSeries {
public:
    /// Builds a series of order coeffs.size() - 1. An empty vector is rejected.
    explicit TruncatedSeries(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs))
    {
        if (coeffs_.empty()) {
            throw std::invalid_argument("TruncatedSeries: needs at least one coefficient");
        }
    }

    TruncatedSeries(std::initializer_list<long long> coeffs)
        : TruncatedSeries(std::vector<Integer>(coeffs.begin(), coeffs.end()))
    {}

    int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

    std::span<const Integer> coeffs() const noexcept { return coeffs_; }

    /// Coefficient of q^k. Out-of-range indices throw rather than read as
    /// zero, so an under-truncated builder is caught instead of masked.
    const Integer& coeff(int k) const
    {
        if (k < 0 || k > order()) {
            throw std::out_of_range("coeff: index " + std::to_string(k) + " outside [0, " +
                                    std::to_string(order()) + "]");
        }
        return coeffs_[static_cast<std::size_t>(k)];
    }

    /// Same series reinterpreted modulo q^(n+1), n <= order().
    TruncatedSeries truncate(int n) const
    {
        if (n < 0 || n > order()) {
            throw std::out_of_range("truncate: order " + std::to_string(n) + " outside [0, " +
                                    std::to_string(order()) + "]");
        }
        return TruncatedSeries(std::vector<Integer>(coeffs_.begin(), coeffs_.begin() + n + 1));
    }

    bool is_zero() const
    {
        return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return c == 0; });
    }

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    std::vector<Integer> coeffs_;
};

namespace detail {

inline void require_order(int n, const char* what)
{
    if (n < 0) {
        throw std::invalid_argument(std::string(what) + ": order must be non-negative");
    }
}

inline std::vector<Integer> zeros(int n) { return std::vector<Integer>(static_cast<std::size_t>(n) + 1); }

// In-place c <- c * (1 - q^e), modulo q^(size).
inline void mul_one_minus(std::vector<Integer>& c, int e)
{
    const auto step = static_cast<std::size_t>(e);
    for (std::size_t k = c.size(); k-- > step;) {
        c[k] -= c[k - step];
    }
}

// In-place c <- c / (1 - q^e), modulo q^(size).
inline void div_one_minus(std::vector<Integer>& c, int e)
{
    const auto step = static_cast<std::size_t>(e);
    for (std::size_t k = step; k < c.size(); ++k) {
        c[k] += c[k - step];
    }
}

} // namespace detail

inline TruncatedSeries zero(int n)
{
    detail::require_order(n, "zero");
    return TruncatedSeries(detail::zeros(n));
}

/// coeff * q^exp modulo q^(n+1).
inline TruncatedSeries monomial(int exp, const Integer& coeff, int n)
{
    detail::require_order(n, "monomial");
    if (exp < 0) {
        throw std::invalid_argument("monomial: negative exponent");
    }
    auto c = detail::zeros(n);
    if (exp <= n) {
        c[static_cast<std::size_t>(exp)] = coeff;
    }
    return TruncatedSeries(std::move(c));
}

inline TruncatedSeries one(int n) { return monomial(0, 1, n); }

/// Series whose coefficients are given by a sequence, truncated or
/// zero-padded to order n.
inline TruncatedSeries from_coefficients(std::span<const Integer> values, int n)
{
    detail::require_order(n, "from_coefficients");
    auto c = detail::zeros(n);
    std::copy_n(values.begin(), std::min(values.size(), c.size()), c.begin());
    return TruncatedSeries(std::move(c));
}

inline TruncatedSeries operator+(const TruncatedSeries& s, const TruncatedSeries& t)
{
    const int n = std::min(s.order(), t.order());
    auto c = detail::zeros(n);
    for (int k = 0; k <= n; ++k) {
        c[k] = s.coeffs()[k] + t.coeffs()[k];
    }
    return TruncatedSeries(std::move(c));
}

inline TruncatedSeries operator-(const TruncatedSeries& s)
{
    std::vector<Integer> c(s.coeffs().begin(), s.coeffs().end());
    for (auto& x : c) {
        x = -x;
    }
    return TruncatedSeries(std::move(c));
}

inline TruncatedSeries operator-(const TruncatedSeries& s, const TruncatedSeries& t)
{
    const int n = std::min(s.order(), t.order());
    auto c = detail::zeros(n);
    for (int k = 0; k <= n; ++k) {
        c[k] = s.coeffs()[k] - t.coeffs()[k];
    }
    return TruncatedSeries(std::move(c));
}

inline TruncatedSeries operator*(const Integer& a, const TruncatedSeries& s)
{
    std::vector<Integer> c(s.coeffs().begin(), s.coeffs().end());
    for (auto& x : c) {
        x *= a;
    }
    return TruncatedSeries(std::move(c));
}

/// Cauchy product modulo q^(min order + 1). Zero coefficients of s are
/// skipped, which matters for the sparse products used throughout.
inline TruncatedSeries operator*(const TruncatedSeries& s, const TruncatedSeries& t)
{
    const int n = std::min(s.order(), t.order());
    auto c = detail::zeros(n);
    const auto a = s.coeffs();
    const auto b = t.coeffs();
    for (int i = 0; i <= n; ++i) {
        if (a[i] == 0) {
            continue;
        }
        for (int j = 0; i + j <= n; ++j) {
            c[i + j] += a[i] * b[j];
        }
    }
    return TruncatedSeries(std::move(c));
}

inline TruncatedSeries add(const TruncatedSeries& s, const TruncatedSeries& t) { return s + t; }
inline TruncatedSeries sub(const TruncatedSeries& s, const TruncatedSeries& t) { return s - t; }
inline TruncatedSeries negate(const TruncatedSeries& s) { return -s; }
inline TruncatedSeries scale(const TruncatedSeries& s, const Integer& a) { return a * s; }
inline TruncatedSeries mul(const TruncatedSeries& s, const TruncatedSeries& t) { return s * t; }

inline TruncatedSeries pow(const TruncatedSeries& s, unsigned e)
{
    auto r = one(s.order());
    for (unsigned i = 0; i < e; ++i) {
        r = r * s;
    }
    return r;
}

/// Multiplicative inverse over Z[[q]]. Requires the constant term to be +1 or -1.
inline TruncatedSeries invert(const TruncatedSeries& s)
{
    const auto a = s.coeffs();
    if (a[0] != 1 && a[0] != -1) {
        throw not_invertible("invert: constant term " + a[0].str() + " is not a unit");
    }
    const int n = s.order();
    const Integer c0 = a[0]; // its own inverse
    auto b = detail::zeros(n);
    b[0] = c0;
    for (int k = 1; k <= n; ++k) {
        Integer acc = 0;
        for (int i = 1; i <= k; ++i) {
            if (a[i] != 0) {
                acc += a[i] * b[k - i];
            }
        }
        b[k] = -c0 * acc;
    }
    return TruncatedSeries(std::move(b));
}

/// s * q^e, keeping the order of s.
inline TruncatedSeries shift(const TruncatedSeries& s, int e)
{
    if (e < 0) {
        throw std::invalid_argument("shift: negative exponent");
    }
    const int n = s.order();
    auto c = detail::zeros(n);
    for (int k = e; k <= n; ++k) {
        c[k] = s.coeffs()[k - e];
    }
    return TruncatedSeries(std::move(c));
}

/// s * (1 - q^e) and s / (1 - q^e), each in linear time.
inline TruncatedSeries mul_one_minus(const TruncatedSeries& s, int e)
{
    if (e < 1) {
        throw std::invalid_argument("mul_one_minus: exponent must be positive");
    }
    std::vector<Integer> c(s.coeffs().begin(), s.coeffs().end());
    detail::mul_one_minus(c, e);
    return TruncatedSeries(std::move(c));
}

inline TruncatedSeries div_one_minus(const TruncatedSeries& s, int e)
{
    if (e < 1) {
        throw std::invalid_argument("div_one_minus: exponent must be positive");
    }
    std::vector<Integer> c(s.coeffs().begin(), s.coeffs().end());
    detail::div_one_minus(c, e);
    return TruncatedSeries(std::move(c));
}

/// prod_{j>=0} (1 - q^(start + j*step)) modulo q^(n+1). Only factors with
/// exponent <= n are applied; the rest are 1 at this order.
inline TruncatedSeries qpoch_inf(int start, int step, int n)
{
    detail::require_order(n, "qpoch_inf");
    if (start < 1 || step < 1) {
        throw std::invalid_argument("qpoch_inf: start and step must be positive");
    }
    auto c = detail::zeros(n);
    c[0] = 1;
    for (int e = start; e <= n; e += step) {
        detail::mul_one_minus(c, e);
    }
    return TruncatedSeries(std::move(c));
}

/// prod_{j<count} (1 - q^(start + j*step)) modulo q^(n+1).
inline TruncatedSeries qpoch_fin(int start, int step, int count, int n)
{
    detail::require_order(n, "qpoch_fin");
    if (start < 1 || step < 1 || count < 0) {
        throw std::invalid_argument("qpoch_fin: need start >= 1, step >= 1, count >= 0");
    }
    auto c = detail::zeros(n);
    c[0] = 1;
    for (int j = 0; j < count; ++j) {
        const long long e = start + static_cast<long long>(j) * step;
        if (e > n) {
            break;
        }
        detail::mul_one_minus(c, static_cast<int>(e));
    }
    return TruncatedSeries(std::move(c));
}

/// sum_{k>=1} k q^k / (1 - q^k); coefficient k is the divisor sum sigma(k).
inline TruncatedSeries lambert_sigma(int n)
{
    detail::require_order(n, "lambert_sigma");
    auto c = detail::zeros(n);
    for (int d = 1; d <= n; ++d) {
        for (int m = d; m <= n; m += d) {
            c[m] += d;
        }
    }
    return TruncatedSeries(std::move(c));
}

/// q^m / (1 - q^m)^2 = sum_{k>=1} k q^(m k).
inline TruncatedSeries geom_sq(int m, int n)
{
    detail::require_order(n, "geom_sq");
    if (m < 1) {
        throw std::invalid_argument("geom_sq: part size must be positive");
    }
    auto c = detail::zeros(n);
    for (long long k = 1; k * m <= n; ++k) {
        c[static_cast<std::size_t>(k * m)] = k;
    }
    return TruncatedSeries(std::move(c));
}

/// Substitutes q -> q^m and reports the result modulo q^(n+1). Coefficients
/// that would need terms of s beyond its order throw.
inline TruncatedSeries dilate_to(const TruncatedSeries& s, int m, int n)
{
    detail::require_order(n, "dilate_to");
    if (m < 1) {
        throw std::invalid_argument("dilate_to: factor must be positive");
    }
    if (n / m > s.order()) {
        throw std::out_of_range("dilate_to: source series of order " + std::to_string(s.order()) +
                                " cannot determine order " + std::to_string(n));
    }
    auto c = detail::zeros(n);
    for (int e = 0; e * m <= n; ++e) {
        c[e * m] = s.coeffs()[e];
    }
    return TruncatedSeries(std::move(c));
}

/// Substitutes q -> q^m, keeping the order of s.
inline TruncatedSeries dilate(const TruncatedSeries& s, int m)
{
    if (m < 1) {
        throw std::invalid_argument("dilate: factor must be positive");
    }
    return dilate_to(s, m, s.order());
}

/// Coefficients of q^(m k + r), k = 0..floor((order - r)/m), as a new series.
inline TruncatedSeries extract(const TruncatedSeries& s, int r, int m)
{
    if (m < 1 || r < 0 || r >= m) {
        throw std::invalid_argument("extract: need 0 <= r < m");
    }
    if (r > s.order()) {
        throw std::out_of_range("extract: residue beyond series order");
    }
    const int n = (s.order() - r) / m;
    auto c = detail::zeros(n);
    for (int k = 0; k <= n; ++k) {
        c[k] = s.coeffs()[m * k + r];
    }
    return TruncatedSeries(std::move(c));
}

inline const Integer& coeff(const TruncatedSeries& s, int k) { return s.coeff(k); }

inline std::ostream& operator<<(std::ostream& os, const TruncatedSeries& s)
{
    os << '[';
    for (int k = 0; k <= s.order(); ++k) {
        os << (k ? "," : "") << s.coeffs()[k];
    }
    return os << "] + O(q^" << s.order() + 1 << ')';
}

} // namespace sptq
