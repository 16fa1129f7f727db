// SPDX-License-Identifier: Apache-2.0

// Both sides of the spt-type generating-function identities as truncated
// series. Right-hand sides carrying a factor 1/2 are built doubled so that
// everything stays in Z[[q]].

#pragma once

#include <stdexcept>
#include <vector>

#include "sptq/partitions.hpp"
#include "sptq/series.hpp"

namespace sptq {

namespace detail {

inline void require_positive_order(int n, const char* what)
{
    if (n < 1) {
        throw std::invalid_argument(std::string(what) + ": order must be at least 1");
    }
}

// q^lead (q^{2m+1};q^2)_inf / ((1-q^m)^2 (q^{m+1})_inf), modulo q^(n+1).
inline std::vector<Integer> odd_kernel(int m, long long lead, int n)
{
    auto c = zeros(n);
    if (lead > n) {
        return c;
    }
    c[static_cast<std::size_t>(lead)] = 1;
    div_one_minus(c, m);
    div_one_minus(c, m);
    for (int e = 2 * m + 1; e <= n; e += 2) {
        mul_one_minus(c, e);
    }
    for (int e = m + 1; e <= n; ++e) {
        div_one_minus(c, e);
    }
    return c;
}

inline void accumulate(std::vector<Integer>& acc, const std::vector<Integer>& term)
{
    for (std::size_t k = 0; k < acc.size(); ++k) {
        acc[k] += term[k];
    }
}

} // namespace detail

/// m-th summand of the spt_o^+ generating function:
/// q^m (q^{2m+1};q^2)_inf / ((1-q^m)^2 (q^{m+1})_inf).
inline TruncatedSeries spt_o_plus_term(int m, int n)
{
    detail::require_order(n, "spt_o_plus_term");
    return TruncatedSeries(detail::odd_kernel(m, m, n));
}

/// m-th summand of the spt_o^- generating function: the same kernel led by
/// q^{m(m+1)/2} instead of q^m.
inline TruncatedSeries spt_o_minus_term(int m, int n)
{
    detail::require_order(n, "spt_o_minus_term");
    return TruncatedSeries(detail::odd_kernel(m, static_cast<long long>(m) * (m + 1) / 2, n));
}

/// Generating function of spt_o^+(n).
inline TruncatedSeries lhs_eq2(int n)
{
    detail::require_positive_order(n, "lhs_eq2");
    auto acc = detail::zeros(n);
    for (int m = 1; m <= n; ++m) {
        detail::accumulate(acc, detail::odd_kernel(m, m, n));
    }
    return TruncatedSeries(std::move(acc));
}

/// Generating function of spt_o^-(n).
inline TruncatedSeries lhs_eq3(int n)
{
    detail::require_positive_order(n, "lhs_eq3");
    auto acc = detail::zeros(n);
    for (int m = 1; m * (m + 1) / 2 <= n; ++m) {
        detail::accumulate(acc, detail::odd_kernel(m, m * (m + 1) / 2, n));
    }
    return TruncatedSeries(std::move(acc));
}

/// sum_m (q^m + 2q^{2m} + ...) (q^{2m+1};q^2)_inf / (q^{m+1})_inf * (1 - q^{m(m-1)/2}),
/// built summand by summand rather than as a difference of the two series above.
inline TruncatedSeries lhs_gf_note(int n)
{
    detail::require_positive_order(n, "lhs_gf_note");
    auto acc = zero(n);
    for (int m = 1; m <= n; ++m) {
        auto term = geom_sq(m, n) * qpoch_inf(2 * m + 1, 2, n) * invert(qpoch_inf(m + 1, 1, n));
        acc = acc + term * (one(n) - monomial(m * (m - 1) / 2, 1, n));
    }
    return acc;
}

/// sum_{n>=1} c(n) q^{2n} for the enumerated moment sequence c, modulo q^(order+1).
inline TruncatedSeries moment_series_even(Integer (*moment)(int), int order)
{
    auto c = detail::zeros(order);
    for (int k = 1; 2 * k <= order; ++k) {
        c[static_cast<std::size_t>(2 * k)] = moment(k);
    }
    return TruncatedSeries(std::move(c));
}

/// 2 / (q^2;q^2)_inf * sum n q^n / (1 - q^n), the common part of both
/// doubled right-hand sides.
inline TruncatedSeries doubled_sigma_part(int n)
{
    return Integer(2) * (invert(qpoch_inf(2, 2, n)) * lambert_sigma(n));
}

/// 2/(q^2;q^2)_inf sum n q^n/(1-q^n) - sum N_2(n) q^{2n}; N_2 is enumerated.
inline TruncatedSeries rhs_eq2_doubled(int n)
{
    detail::require_positive_order(n, "rhs_eq2_doubled");
    return doubled_sigma_part(n) - moment_series_even(n2, n);
}

/// 2/(q^2;q^2)_inf sum n q^n/(1-q^n) - sum M_2(n) q^{2n}; M_2 is enumerated.
inline TruncatedSeries rhs_eq3_doubled(int n)
{
    detail::require_positive_order(n, "rhs_eq3_doubled");
    return doubled_sigma_part(n) - moment_series_even(m2, n);
}

/// sum_{n>=1} q^n / ((1-q^n) (q^n)_inf), the generating function of spt(n).
inline TruncatedSeries lhs_eq1(int n)
{
    detail::require_positive_order(n, "lhs_eq1");
    auto acc = detail::zeros(n);
    for (int m = 1; m <= n; ++m) {
        auto term = detail::zeros(n);
        term[static_cast<std::size_t>(m)] = 1;
        detail::div_one_minus(term, m);
        for (int e = m; e <= n; ++e) {
            detail::div_one_minus(term, e);
        }
        detail::accumulate(acc, term);
    }
    return TruncatedSeries(std::move(acc));
}

/// sum_{n>=1} (-1)^n q^{n(3n+1)/2} (1+q^n) / (1-q^n)^2.
inline TruncatedSeries eq1_theta_sum(int n)
{
    detail::require_order(n, "eq1_theta_sum");
    auto acc = zero(n);
    for (int m = 1; m * (3 * m + 1) / 2 <= n; ++m) {
        auto term = monomial(m * (3 * m + 1) / 2, m % 2 == 0 ? 1 : -1, n);
        term = term + shift(term, m);
        term = div_one_minus(div_one_minus(term, m), m);
        acc = acc + term;
    }
    return acc;
}

/// (1/(q)_inf) times the theta-like sum above; equals -1/2 sum N_2(n) q^n.
inline TruncatedSeries eq1_theta_term(int n) { return invert(qpoch_inf(1, 1, n)) * eq1_theta_sum(n); }

/// 2 sum n p(n) q^n + 2 (1/(q)_inf) sum (-1)^n q^{n(3n+1)/2} (1+q^n)/(1-q^n)^2.
inline TruncatedSeries rhs_eq1_doubled(int n)
{
    detail::require_positive_order(n, "rhs_eq1_doubled");
    const auto pn = partition_numbers(n);
    auto c = detail::zeros(n);
    for (int k = 1; k <= n; ++k) {
        c[static_cast<std::size_t>(k)] = 2 * k * pn[static_cast<std::size_t>(k)];
    }
    return TruncatedSeries(std::move(c)) + Integer(2) * eq1_theta_term(n);
}

/// q (q^4;q^4)_inf^3 / (q^2;q^4)_inf^5.
inline TruncatedSeries rhs_eq23(int n)
{
    detail::require_positive_order(n, "rhs_eq23");
    return shift(pow(qpoch_inf(4, 4, n), 3) * pow(invert(qpoch_inf(2, 4, n)), 5), 1);
}

} // namespace sptq
