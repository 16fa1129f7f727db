// SPDX-License-Identifier: Apache-2.0

// Registry of identity checks. Every check compares two independently built
// sides, coefficient by coefficient or index by index, at a given order N.
// Identities with a factor 1/2 are compared after doubling both sides.

#pragma once

#include <algorithm>
#include <cctype>
#include <chrono>
#include <functional>
#include <future>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sptq/bailey.hpp"
#include "sptq/builders.hpp"
#include "sptq/partitions.hpp"
#include "sptq/report.hpp"
#include "sptq/series.hpp"

namespace sptq {

/// Enumeration sub-checks inside the registry stop at this index (partitions
/// and pairs of total size <= 30); series comparisons run to the full order.
inline constexpr int kOracleLimit = 30;

enum class CheckKind { series_equality, sequence_equality, congruence };

inline const char* to_string(CheckKind k)
{
    switch (k) {
    case CheckKind::series_equality:
        return "series-equality";
    case CheckKind::sequence_equality:
        return "sequence-equality";
    case CheckKind::congruence:
        return "congruence";
    }
    return "?";
}

template <typename F>
IdentityReport timed_report(std::string id, int order, F&& body)
{
    const auto start = std::chrono::steady_clock::now();
    MismatchLog log;
    body(log);
    auto report = std::move(log).finish(std::move(id), order);
    report.elapsed = std::chrono::steady_clock::now() - start;
    return report;
}

namespace detail {

inline void check_bailey(const BaileyPair& pair, int n_max, int order, MismatchLog& log)
{
    for (int i = 0; i <= n_max; ++i) {
        log.expect_equal(pair.beta(i, order), bailey_transform(pair, i, order), "n=" + std::to_string(i));
    }
}

inline std::string lower(std::string s)
{
    for (auto& ch : s) {
        ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    }
    return s;
}

} // namespace detail

/// beta_n against sum_r alpha_r / ((q)_{n+r} (q)_{n-r}) for n = 0..n_max,
/// modulo q^(order+1).
inline IdentityReport check_bailey_relation(const BaileyPair& pair, int n_max, int order)
{
    if (n_max < 0 || order < 0) {
        throw std::invalid_argument("check_bailey_relation: n_max and order must be non-negative");
    }
    return timed_report("bailey_" + detail::lower(pair.label()), order,
                        [&](MismatchLog& log) { detail::check_bailey(pair, n_max, order, log); });
}

/// sum (q)_{n-1}^2 beta_n q^n = alpha_0 sum n q^n/(1-q^n) + sum alpha_n q^n/(1-q^n)^2.
inline IdentityReport check_eq12(const BaileyPair& pair, int order)
{
    if (order < 1) {
        throw std::invalid_argument("check_eq12: order must be at least 1");
    }
    return timed_report("eq12_" + detail::lower(pair.label()), order,
                        [&](MismatchLog& log) { log.expect_equal(eq12_lhs(pair, order), eq12_rhs(pair, order)); });
}

/// An arithmetic progression of arguments scale * (a k + b), k = 0, 1, ...
struct Progression {
    long long a = 1;
    long long b = 0;
    long long scale = 1;

    long long at(long long k) const { return scale * (a * k + b); }
};

/// values(at(k)) = 0 (mod modulus) for k = 0..k_max. Mismatches report the
/// argument and the nonzero residue.
inline IdentityReport check_congruence(std::string id, const std::function<Integer(long long)>& values,
                                       Progression prog, int modulus, long long k_max, int order = 0)
{
    if (modulus < 2) {
        throw std::invalid_argument("check_congruence: modulus must be at least 2");
    }
    return timed_report(std::move(id), order, [&](MismatchLog& log) {
        for (long long k = 0; k <= k_max; ++k) {
            const auto arg = prog.at(k);
            log.expect_divisible(arg, values(arg), modulus);
        }
    });
}

/// Same, reading the values from a registered sequence.
inline IdentityReport check_congruence(std::string_view sequence_id, Progression prog, int modulus,
                                       long long k_max)
{
    const auto lo = static_cast<int>(std::min(prog.at(0), prog.at(k_max)));
    const auto hi = static_cast<int>(std::max(prog.at(0), prog.at(k_max)));
    const auto table = sequence(sequence_id, lo, hi);
    return check_congruence(
        std::string(sequence_id), [&](long long n) { return table.at(static_cast<int>(n)); }, prog, modulus, k_max);
}

/// Number of n in [1, n_max] with spt_o^+(2n) even, read from the series.
struct EvenDensity {
    int even = 0;
    int total = 0;
};

inline EvenDensity spt_o_plus_even_density(int order)
{
    const auto s = lhs_eq2(order);
    EvenDensity d;
    for (int n = 1; 2 * n <= order; ++n) {
        ++d.total;
        if (s.coeff(2 * n) % 2 == 0) {
            ++d.even;
        }
    }
    return d;
}

struct IdentityCheck {
    std::string_view id;
    std::string_view description;
    /// The statement being checked, in formula form.
    std::string_view statement;
    CheckKind kind;
    /// Largest order the check accepts (enumeration-backed sides bound it).
    int max_order;
    std::function<void(int, MismatchLog&)> run;
};

namespace detail {

inline constexpr int kMomentOrderLimit = 2 * kEnumerationLimit + 1;
inline constexpr int kSeriesOrderLimit = 600;

inline TruncatedSeries minus_moment_series(Integer (*moment)(int), int order)
{
    return -moment_series_even(moment, order);
}

inline void check_eq1(int n, MismatchLog& log)
{
    log.expect_equal(Integer(2) * lhs_eq1(n), rhs_eq1_doubled(n), "identity");
    // The theta-like term carries -1/2 sum N_2(n) q^n.
    const auto theta = Integer(2) * eq1_theta_term(n);
    for (int k = 1; k <= std::min(n, kOracleLimit); ++k) {
        log.expect_equal(k, theta.coeff(k), -n2(k), "theta_term=-N2/2");
    }
}

inline void check_gf_note(int n, MismatchLog& log)
{
    const auto note = lhs_gf_note(n);
    log.expect_equal(note, lhs_eq2(n) - lhs_eq3(n), "difference");
    if (n >= 2) {
        const auto spt_series = lhs_eq1(n / 2);
        for (int k = 1; 2 * k <= n; ++k) {
            log.expect_equal(2 * k, note.coeff(2 * k), spt_series.coeff(k), "even=spt");
        }
    }
    for (int k = 1; k <= n; k += 2) {
        log.expect_equal(k, note.coeff(k), 0, "odd=0");
    }
}

inline void check_thm2(int n, MismatchLog& log)
{
    for (int k = 1; 2 * k <= std::min(n, kOracleLimit); ++k) {
        log.expect_equal(2 * k, spt_o(2 * k), spt(k), "enumeration");
    }
    if (n >= 2) {
        const auto even = extract(lhs_eq2(n) - lhs_eq3(n), 0, 2);
        log.expect_equal(even, lhs_eq1(n / 2), "series", 1);
    }
}

inline void check_thm3(int n, MismatchLog& log)
{
    const auto plus = lhs_eq2(n);
    if (n >= 2) {
        const auto spt_series = lhs_eq1(n / 2);
        for (int k = 1; 2 * k <= n; ++k) {
            log.expect_congruent(2 * k, plus.coeff(2 * k), spt_series.coeff(k), 2, "series");
        }
    }
    for (int k = 1; 2 * k <= std::min(n, kOracleLimit); ++k) {
        log.expect_congruent(2 * k, spt_o_plus(2 * k), spt(k), 2, "enumeration");
    }
}

inline void check_thm4(int n, MismatchLog& log)
{
    const auto minus = lhs_eq3(n);
    for (int k = 1; 2 * k <= n; ++k) {
        log.expect_divisible(2 * k, minus.coeff(2 * k), 2, "series");
    }
    for (int k = 1; 2 * k <= std::min(n, kOracleLimit); ++k) {
        log.expect_divisible(2 * k, spt_o_minus(2 * k), 2, "enumeration");
    }
}

inline void check_thm5(int n, MismatchLog& log)
{
    const auto plus = lhs_eq2(n);
    const auto minus = lhs_eq3(n);
    for (int k = 1; k <= n; k += 2) {
        log.expect_equal(k, plus.coeff(k), minus.coeff(k), "series");
    }
    for (int k = 1; k <= std::min(n, kOracleLimit); k += 2) {
        log.expect_equal(k, spt_o_plus(k), spt_o_minus(k), "enumeration");
    }
}

inline void check_eq13(int n, MismatchLog& log)
{
    // Divisor sums taken directly rather than from the Lambert series.
    std::vector<Integer> sig;
    for (int k = 0; k <= n; ++k) {
        sig.push_back(sigma(k));
    }
    const auto rhs = Integer(2) * (invert(qpoch_inf(2, 2, n)) * from_coefficients(sig, n)) +
                     minus_moment_series(n2, n);
    log.expect_equal(Integer(2) * lhs_eq2(n), rhs);
}

inline void check_eq14(int n, MismatchLog& log)
{
    const int top = std::min(n, kOracleLimit) / 2;
    const auto pn = partition_numbers(std::max(top, 0));
    for (int m = 1; m <= top; ++m) {
        Integer conv = 0;
        for (int k = 0; k <= m; ++k) {
            conv += pn[static_cast<std::size_t>(k)] * sigma(2 * (m - k));
        }
        log.expect_equal(2 * m, 2 * spt_o_plus(2 * m), 2 * conv - n2(m));
    }
}

inline void check_eq23(int n, MismatchLog& log)
{
    const auto product = rhs_eq23(n);
    const auto odd_product = extract(product, 1, 2);
    log.expect_equal(extract(lhs_eq3(n), 1, 2), odd_product, "spt_o_minus odd");
    log.expect_equal(extract(lhs_eq2(n), 1, 2), odd_product, "spt_o_plus odd");
    for (int k = 0; k <= n; k += 2) {
        log.expect_equal(k, product.coeff(k), 0, "product even=0");
    }
}

inline void check_m2_is_2np(int n, MismatchLog& log)
{
    const int top = std::min(n, kOracleLimit);
    const auto pn = partition_numbers(top);
    for (int k = 1; k <= top; ++k) {
        log.expect_equal(k, m2(k), 2 * k * pn[static_cast<std::size_t>(k)]);
    }
}

inline void check_spt_half_diff(int n, MismatchLog& log)
{
    for (int k = 1; k <= std::min(n, kOracleLimit); ++k) {
        log.expect_equal(k, 2 * spt(k), m2(k) - n2(k));
    }
}

inline void check_sigma_doubling(int n, MismatchLog& log)
{
    for (int k = 1; k <= n; ++k) {
        Integer rhs = 3 * sigma(k);
        if (k % 2 == 0) {
            rhs -= 2 * sigma(k / 2);
        }
        log.expect_equal(k, sigma(2LL * k), rhs);
    }
}

inline void check_legendre_t4(int n, MismatchLog& log)
{
    for (int k = 0; k <= n; ++k) {
        log.expect_equal(k, sigma(2LL * k + 1), t4(k));
    }
}

inline constexpr int kBaileyIndices = 8;

inline void check_termwise(int n, MismatchLog& log)
{
    constexpr int kTerms = 12;
    const auto c1 = BaileyPair::c1();
    const auto c5 = BaileyPair::c5();
    const auto inv_q2 = invert(qpoch_inf(2, 2, n));
    for (int m = 1; m <= std::min(n, kTerms); ++m) {
        log.expect_equal(eq12_lhs_term(c1, m, n) * inv_q2, spt_o_plus_term(m, n), "C1 term " + std::to_string(m));
        log.expect_equal(eq12_lhs_term(c5, m, n) * inv_q2, spt_o_minus_term(m, n), "C5 term " + std::to_string(m));
    }
    log.expect_equal(Integer(2) * (eq12_alpha_sum(c1, n) * inv_q2), minus_moment_series(n2, n), "C1 rank component");
    log.expect_equal(Integer(2) * (eq12_alpha_sum(c5, n) * inv_q2), minus_moment_series(m2, n),
                     "C5 crank component");
}

inline void check_cong(int n, MismatchLog& log, Progression prog, int modulus)
{
    const auto spt_o_series = lhs_gf_note(n);
    for (long long k = 0; prog.at(k) <= n; ++k) {
        const auto arg = prog.at(k);
        log.expect_divisible(arg, spt_o_series.coeff(static_cast<int>(arg)), modulus);
    }
}

} // namespace detail

/// The frozen registry, in report order.
inline const std::vector<IdentityCheck>& identity_registry()
{
    using namespace detail;
    static const std::vector<IdentityCheck> registry = {
        {"eq1", "spt generating-function identity, doubled; plus theta-like term = -1/2 sum N_2(n) q^n",
         "sum q^n/((1-q^n)(q^n)_inf) = sum n p(n) q^n + (1/(q)_inf) sum (-1)^n q^{n(3n+1)/2}(1+q^n)/(1-q^n)^2",
         CheckKind::series_equality, kSeriesOrderLimit, check_eq1},
        {"eq2", "spt_o^+ generating function, doubled",
         "sum q^n (q^{2n+1};q^2)_inf/((1-q^n)^2 (q^{n+1})_inf) = (1/(q^2;q^2)_inf) sum n q^n/(1-q^n) - 1/2 sum N_2(n) q^{2n}",
         CheckKind::series_equality, kMomentOrderLimit,
         [](int n, MismatchLog& log) { log.expect_equal(Integer(2) * lhs_eq2(n), rhs_eq2_doubled(n)); }},
        {"eq3", "spt_o^- generating function, doubled",
         "sum q^{n(n+1)/2} (q^{2n+1};q^2)_inf/((1-q^n)^2 (q^{n+1})_inf) = (1/(q^2;q^2)_inf) sum n q^n/(1-q^n) - 1/2 sum M_2(n) q^{2n}",
         CheckKind::series_equality, kMomentOrderLimit,
         [](int n, MismatchLog& log) { log.expect_equal(Integer(2) * lhs_eq3(n), rhs_eq3_doubled(n)); }},
        {"gf_note", "spt_o generating function built termwise; even part is spt, odd part vanishes",
         "sum spt_o(n) q^n = sum (q^n + 2q^{2n} + ...) (q^{2n+1};q^2)_inf/(q^{n+1})_inf (1 - q^{1+2+...+(n-1)})",
         CheckKind::series_equality, kSeriesOrderLimit, check_gf_note},
        {"thm2", "spt_o(2n) = spt(n), by enumeration and by series", "spt_o(2n) = spt(n)",
         CheckKind::sequence_equality, kSeriesOrderLimit, check_thm2},
        {"thm3", "spt_o^+(2n) = spt(n) mod 2", "spt_o^+(2n) = spt(n) (mod 2)", CheckKind::congruence,
         kSeriesOrderLimit, check_thm3},
        {"thm4", "spt_o^-(2n) even", "spt_o^-(2n) = 0 (mod 2)", CheckKind::congruence, kSeriesOrderLimit,
         check_thm4},
        {"thm5", "spt_o^-(2n+1) = spt_o^+(2n+1)", "spt_o^-(2n+1) = spt_o^+(2n+1)", CheckKind::sequence_equality,
         kSeriesOrderLimit, check_thm5},
        {"eq13", "spt_o^+ generating function with directly computed divisor sums, doubled",
         "sum spt_o^+(n) q^n = (1/(q^2;q^2)_inf) sum sigma(n) q^n - 1/2 sum N_2(n) q^{2n}",
         CheckKind::series_equality, kMomentOrderLimit, check_eq13},
        {"eq14", "spt_o^+(2n) as a convolution of p and sigma, doubled, by enumeration",
         "spt_o^+(2n) = sum_k p(k) sigma(2(n-k)) - 1/2 N_2(n)", CheckKind::sequence_equality, kSeriesOrderLimit,
         check_eq14},
        {"eq23", "odd part of spt_o^+ and spt_o^- equals a product", "q (q^4;q^4)_inf^3 / (q^2;q^4)_inf^5",
         CheckKind::series_equality, kSeriesOrderLimit, check_eq23},
        {"m2_is_2np", "second crank moment is 2 n p(n)", "M_2(n) = 2 n p(n)", CheckKind::sequence_equality,
         kSeriesOrderLimit, check_m2_is_2np},
        {"spt_half_diff", "spt as half the difference of crank and rank moments", "spt(n) = (M_2(n) - N_2(n))/2",
         CheckKind::sequence_equality, kSeriesOrderLimit, check_spt_half_diff},
        {"sigma_doubling", "divisor sum at 2n", "sigma(2n) = 3 sigma(n) - 2 sigma(n/2)",
         CheckKind::sequence_equality, 1000000, check_sigma_doubling},
        {"legendre_t4", "Legendre: sums of four triangular numbers", "sigma(2n+1) = t_4(n)",
         CheckKind::sequence_equality, 20000, check_legendre_t4},
        {"bailey_c1", "Bailey pair C(1) relative to a = 1, indices 0..8",
         "beta_n = sum_{r=0}^n alpha_r / ((q)_{n+r} (q)_{n-r})", CheckKind::series_equality, kSeriesOrderLimit,
         [](int n, MismatchLog& log) { check_bailey(BaileyPair::c1(), kBaileyIndices, n, log); }},
        {"bailey_c5", "Bailey pair C(5) relative to a = 1, indices 0..8",
         "beta_n = sum_{r=0}^n alpha_r / ((q)_{n+r} (q)_{n-r})", CheckKind::series_equality, kSeriesOrderLimit,
         [](int n, MismatchLog& log) { check_bailey(BaileyPair::c5(), kBaileyIndices, n, log); }},
        {"eq12_c1", "differentiated Bailey lemma at a = 1 for pair C(1)",
         "sum (q)_{n-1}^2 beta_n q^n = alpha_0 sum n q^n/(1-q^n) + sum alpha_n q^n/(1-q^n)^2",
         CheckKind::series_equality, 400,
         [](int n, MismatchLog& log) {
             const auto pair = BaileyPair::c1();
             log.expect_equal(eq12_lhs(pair, n), eq12_rhs(pair, n));
         }},
        {"eq12_c5", "differentiated Bailey lemma at a = 1 for pair C(5)",
         "sum (q)_{n-1}^2 beta_n q^n = alpha_0 sum n q^n/(1-q^n) + sum alpha_n q^n/(1-q^n)^2",
         CheckKind::series_equality, 400,
         [](int n, MismatchLog& log) {
             const auto pair = BaileyPair::c5();
             log.expect_equal(eq12_lhs(pair, n), eq12_rhs(pair, n));
         }},
        {"cong5", "spt_o(2(5n+4)) = 0 mod 5", "spt_o(2(5n+4)) = 0 (mod 5)", CheckKind::congruence,
         kSeriesOrderLimit, [](int n, MismatchLog& log) { check_cong(n, log, {5, 4, 2}, 5); }},
        {"cong7", "spt_o(2(7n+5)) = 0 mod 7", "spt_o(2(7n+5)) = 0 (mod 7)", CheckKind::congruence,
         kSeriesOrderLimit, [](int n, MismatchLog& log) { check_cong(n, log, {7, 5, 2}, 7); }},
        {"cong13", "spt_o(2(13n+6)) = 0 mod 13", "spt_o(2(13n+6)) = 0 (mod 13)", CheckKind::congruence,
         kSeriesOrderLimit, [](int n, MismatchLog& log) { check_cong(n, log, {13, 6, 2}, 13); }},
        {"termwise_eq2",
         "Bailey-lemma summands over (q^2;q^2)_inf equal the spt_o^+ / spt_o^- summands (n <= 12); "
         "alpha sums give the rank and crank components",
         "(q)_{n-1}^2 beta_n q^n / (q^2;q^2)_inf = q^{n or n(n+1)/2} (q^{2n+1};q^2)_inf/((1-q^n)^2 (q^{n+1})_inf)",
         CheckKind::series_equality, kMomentOrderLimit, check_termwise},
    };
    return registry;
}

inline const IdentityCheck* find_identity(std::string_view id)
{
    for (const auto& c : identity_registry()) {
        if (c.id == id) {
            return &c;
        }
    }
    return nullptr;
}

/// Runs one registered check at order n. Unknown ids and orders outside
/// [1, max_order] throw.
inline IdentityReport verify(std::string_view id, int n)
{
    const auto* check = find_identity(id);
    if (check == nullptr) {
        throw std::invalid_argument("unknown identity '" + std::string(id) + "'");
    }
    if (n < 1 || n > check->max_order) {
        throw std::out_of_range("identity '" + std::string(id) + "': order " + std::to_string(n) +
                                " outside [1, " + std::to_string(check->max_order) + "]");
    }
    return timed_report(std::string(id), n, [&](MismatchLog& log) { check->run(n, log); });
}

/// Runs the given checks (all when empty), possibly concurrently; results
/// come back in the order requested.
inline std::vector<IdentityReport> verify_many(std::span<const std::string> ids, int n, bool parallel = true)
{
    std::vector<std::string> todo(ids.begin(), ids.end());
    if (todo.empty()) {
        for (const auto& c : identity_registry()) {
            todo.emplace_back(c.id);
        }
    }
    // Validate everything before starting any work.
    for (const auto& id : todo) {
        const auto* check = find_identity(id);
        if (check == nullptr) {
            throw std::invalid_argument("unknown identity '" + id + "'");
        }
        if (n < 1 || n > check->max_order) {
            throw std::out_of_range("identity '" + id + "': order " + std::to_string(n) + " outside [1, " +
                                    std::to_string(check->max_order) + "]");
        }
    }
    std::vector<IdentityReport> reports;
    if (!parallel) {
        for (const auto& id : todo) {
            reports.push_back(verify(id, n));
        }
        return reports;
    }
    std::vector<std::future<IdentityReport>> pending;
    for (const auto& id : todo) {
        pending.push_back(std::async(std::launch::async, [id, n] { return verify(id, n); }));
    }
    for (auto& f : pending) {
        reports.push_back(f.get());
    }
    return reports;
}

inline std::vector<IdentityReport> verify_all(int n, bool parallel = true) { return verify_many({}, n, parallel); }

} // namespace sptq
