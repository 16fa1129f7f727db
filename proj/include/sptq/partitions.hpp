// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sptq/series.hpp"

namespace sptq {

/// Largest n for which enumeration-backed counts are offered. p(75) is about
/// 8.1 million, which keeps a full table a matter of seconds.
inline constexpr int kEnumerationLimit = 75;

/// A partition: weakly decreasing positive parts.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts))
    {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 1 || (i > 0 && parts_[i] > parts_[i - 1])) {
                throw std::invalid_argument("Partition: parts must be positive and weakly decreasing");
            }
        }
    }

    std::span<const int> parts() const noexcept { return parts_; }
    bool empty() const noexcept { return parts_.empty(); }
    int count() const noexcept { return static_cast<int>(parts_.size()); }

    int size() const noexcept
    {
        int s = 0;
        for (int p : parts_) {
            s += p;
        }
        return s;
    }

    int largest() const
    {
        require_nonempty("largest");
        return parts_.front();
    }

    int smallest() const
    {
        require_nonempty("smallest");
        return parts_.back();
    }

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    void require_nonempty(const char* what) const
    {
        if (parts_.empty()) {
            throw std::domain_error(std::string(what) + ": empty partition");
        }
    }

    std::vector<int> parts_;
};

/// The pair (pi, delta_i) with i = s(pi), delta_i = (i-1, ..., 1).
class PartitionPair {
public:
    explicit PartitionPair(Partition pi) : pi_(std::move(pi))
    {
        if (pi_.empty()) {
            throw std::invalid_argument("PartitionPair: partition must be non-empty");
        }
    }

    const Partition& pi() const noexcept { return pi_; }
    int delta_index() const { return pi_.smallest(); }

    Partition delta() const
    {
        std::vector<int> parts;
        for (int p = delta_index() - 1; p >= 1; --p) {
            parts.push_back(p);
        }
        return Partition(std::move(parts));
    }

    int size() const { return pi_.size() + delta_index() * (delta_index() - 1) / 2; }

private:
    Partition pi_;
};

/// Visits every partition of n with all parts >= min_part, in
/// lexicographically decreasing order. The visitor receives the parts,
/// largest first; the span is only valid during the call. n = 0 yields the
/// empty partition once.
template <typename Visitor>
void for_each_partition(int n, Visitor&& visit, int min_part = 1)
{
    if (n < 0) {
        throw std::invalid_argument("for_each_partition: n must be non-negative");
    }
    if (min_part < 1) {
        throw std::invalid_argument("for_each_partition: min_part must be positive");
    }
    std::vector<int> stack;
    stack.reserve(static_cast<std::size_t>(n));
    // Recursion depth is bounded by n / min_part.
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            visit(std::span<const int>(stack));
            return;
        }
        for (int p = std::min(remaining, max_part); p >= min_part; --p) {
            const int rest = remaining - p;
            if (rest != 0 && rest < min_part) {
                continue;
            }
            stack.push_back(p);
            self(self, rest, p);
            stack.pop_back();
        }
    };
    rec(rec, n, n);
}

inline std::vector<Partition> enumerate_partitions(int n)
{
    std::vector<Partition> out;
    for_each_partition(n, [&](std::span<const int> parts) {
        out.emplace_back(std::vector<int>(parts.begin(), parts.end()));
    });
    return out;
}

inline int rank(std::span<const int> parts)
{
    if (parts.empty()) {
        throw std::domain_error("rank: empty partition");
    }
    return parts.front() - static_cast<int>(parts.size());
}

/// Crank: the largest part when there are no ones, otherwise
/// (number of parts larger than the number of ones) - (number of ones).
inline int crank(std::span<const int> parts)
{
    if (parts.empty()) {
        throw std::domain_error("crank: empty partition");
    }
    const auto ones = static_cast<int>(std::count(parts.begin(), parts.end(), 1));
    if (ones == 0) {
        return parts.front();
    }
    const auto above = static_cast<int>(
        std::count_if(parts.begin(), parts.end(), [ones](int p) { return p > ones; }));
    return above - ones;
}

inline int rank(const Partition& pi) { return rank(pi.parts()); }
inline int crank(const Partition& pi) { return crank(pi.parts()); }

/// Multiplicity of the smallest part.
inline int smallest_multiplicity(std::span<const int> parts)
{
    if (parts.empty()) {
        throw std::domain_error("smallest_multiplicity: empty partition");
    }
    return static_cast<int>(std::count(parts.begin(), parts.end(), parts.back()));
}

/// True iff no odd part exceeds twice the smallest part.
inline bool odd_condition(std::span<const int> parts)
{
    if (parts.empty()) {
        throw std::domain_error("odd_condition: empty partition");
    }
    const int bound = 2 * parts.back();
    return std::none_of(parts.begin(), parts.end(), [bound](int p) { return p % 2 == 1 && p > bound; });
}

inline bool odd_condition(const Partition& pi) { return odd_condition(pi.parts()); }

/// p(0..n_max) from Euler's pentagonal recurrence.
inline std::vector<Integer> partition_numbers(int n_max)
{
    if (n_max < 0) {
        throw std::invalid_argument("partition_numbers: n must be non-negative");
    }
    std::vector<Integer> p(static_cast<std::size_t>(n_max) + 1);
    p[0] = 1;
    for (int n = 1; n <= n_max; ++n) {
        Integer acc = 0;
        for (int j = 1;; ++j) {
            const int g1 = j * (3 * j - 1) / 2;
            if (g1 > n) {
                break;
            }
            const int g2 = j * (3 * j + 1) / 2;
            Integer term = p[n - g1];
            if (g2 <= n) {
                term += p[n - g2];
            }
            if (j % 2 == 1) {
                acc += term;
            } else {
                acc -= term;
            }
        }
        p[n] = acc;
    }
    return p;
}

inline Integer p(int n) { return partition_numbers(n).back(); }

/// Sum of positive divisors; sigma(0) = 0.
inline Integer sigma(long long n)
{
    if (n < 0) {
        throw std::invalid_argument("sigma: n must be non-negative");
    }
    Integer s = 0;
    for (long long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            s += d;
            if (d != n / d) {
                s += n / d;
            }
        }
    }
    return s;
}

/// Ordered representations of n as T_a + T_b + T_c + T_d, T_k = k(k+1)/2,
/// with T_0 = 0 allowed.
inline Integer t4(int n)
{
    if (n < 0) {
        throw std::invalid_argument("t4: n must be non-negative");
    }
    std::vector<long long> pairs(static_cast<std::size_t>(n) + 1, 0);
    for (long long a = 0; a * (a + 1) / 2 <= n; ++a) {
        for (long long b = 0; a * (a + 1) / 2 + b * (b + 1) / 2 <= n; ++b) {
            ++pairs[static_cast<std::size_t>(a * (a + 1) / 2 + b * (b + 1) / 2)];
        }
    }
    Integer total = 0;
    for (int m = 0; m <= n; ++m) {
        total += Integer(pairs[m]) * pairs[n - m];
    }
    return total;
}

namespace detail {

inline void require_enumerable(int n, const char* what)
{
    if (n <= 0) {
        throw std::domain_error(std::string(what) + ": n must be positive");
    }
    if (n > kEnumerationLimit) {
        throw std::domain_error(std::string(what) + ": n = " + std::to_string(n) +
                                " exceeds the enumeration limit " + std::to_string(kEnumerationLimit));
    }
}

} // namespace detail

/// N_2(n): sum of rank^2 over partitions of n.
inline Integer n2(int n)
{
    detail::require_enumerable(n, "n2");
    std::int64_t total = 0;
    for_each_partition(n, [&](std::span<const int> parts) {
        const std::int64_t r = rank(parts);
        total += r * r;
    });
    return total;
}

/// M_2(n): sum of crank^2 over partitions of n, except M_2(1) = 2. At n = 1
/// the crank generating function has M(1,1) = M(-1,1) = 1, M(0,1) = -1,
/// which no single partition realizes.
inline Integer m2(int n)
{
    detail::require_enumerable(n, "m2");
    if (n == 1) {
        return 2;
    }
    std::int64_t total = 0;
    for_each_partition(n, [&](std::span<const int> parts) {
        const std::int64_t c = crank(parts);
        total += c * c;
    });
    return total;
}

/// Number of smallest parts summed over all partitions of n.
inline Integer spt(int n)
{
    detail::require_enumerable(n, "spt");
    std::int64_t total = 0;
    for_each_partition(n, [&](std::span<const int> parts) { total += smallest_multiplicity(parts); });
    return total;
}

/// Smallest parts over partitions of n in which no odd part exceeds twice
/// the smallest part.
inline Integer spt_o_plus(int n)
{
    detail::require_enumerable(n, "spt_o_plus");
    std::int64_t total = 0;
    for_each_partition(n, [&](std::span<const int> parts) {
        if (odd_condition(parts)) {
            total += smallest_multiplicity(parts);
        }
    });
    return total;
}

/// Visits every pair (pi, delta_{s(pi)}) of total size n whose pi satisfies
/// the odd-part condition. The visitor receives the parts of pi.
template <typename Visitor>
void for_each_restricted_pair(int n, Visitor&& visit)
{
    for (int s = 1; s + s * (s - 1) / 2 <= n; ++s) {
        const int m = n - s * (s - 1) / 2;
        for_each_partition(
            m,
            [&](std::span<const int> parts) {
                if (parts.back() == s && odd_condition(parts)) {
                    visit(parts);
                }
            },
            s);
    }
}

/// Smallest parts of pi over the pairs (pi, delta_{s(pi)}) of total size n
/// whose pi satisfies the odd-part condition.
inline Integer spt_o_minus(int n)
{
    detail::require_enumerable(n, "spt_o_minus");
    std::int64_t total = 0;
    for_each_restricted_pair(n, [&](std::span<const int> parts) { total += smallest_multiplicity(parts); });
    return total;
}

inline Integer spt_o(int n) { return spt_o_plus(n) - spt_o_minus(n); }

/// A named integer sequence over the inclusive index range [lo, hi].
struct SequenceTable {
    std::string name;
    int lo = 0;
    int hi = -1;
    std::vector<Integer> values;

    const Integer& at(int n) const
    {
        if (n < lo || n > hi) {
            throw std::out_of_range(name + ": index " + std::to_string(n) + " outside table");
        }
        return values[static_cast<std::size_t>(n - lo)];
    }

    friend bool operator==(const SequenceTable&, const SequenceTable&) = default;
};

struct SequenceInfo {
    std::string_view id;
    std::string_view description;
    int min_index;
    int max_index;
};

inline constexpr SequenceInfo kSequences[] = {
    {"p", "number of partitions of n", 0, 100000},
    {"sigma", "sum of the divisors of n (sigma(0) = 0)", 0, 100000000},
    {"spt", "smallest parts over all partitions of n", 1, kEnumerationLimit},
    {"spt_o_plus", "smallest parts over partitions of n with no odd part > 2 s(pi)", 1, kEnumerationLimit},
    {"spt_o_minus", "smallest parts over pairs (pi, delta_s(pi)) of size n, same odd-part rule", 1,
     kEnumerationLimit},
    {"spt_o", "spt_o_plus(n) - spt_o_minus(n)", 1, kEnumerationLimit},
    {"n2", "second rank moment N_2(n)", 1, kEnumerationLimit},
    {"m2", "second crank moment M_2(n)", 1, kEnumerationLimit},
    {"t4", "ordered representations of n as a sum of four triangular numbers", 0, 100000},
};

inline const SequenceInfo* find_sequence(std::string_view id)
{
    for (const auto& s : kSequences) {
        if (s.id == id) {
            return &s;
        }
    }
    return nullptr;
}

inline SequenceTable sequence(std::string_view name, int lo, int hi)
{
    const auto* info = find_sequence(name);
    if (info == nullptr) {
        throw std::invalid_argument("unknown sequence '" + std::string(name) + "'");
    }
    if (lo > hi || lo < info->min_index || hi > info->max_index) {
        throw std::out_of_range("sequence '" + std::string(name) + "': range [" + std::to_string(lo) + ", " +
                                std::to_string(hi) + "] outside domain [" + std::to_string(info->min_index) +
                                ", " + std::to_string(info->max_index) + "]");
    }
    SequenceTable table{std::string(name), lo, hi, {}};
    table.values.reserve(static_cast<std::size_t>(hi - lo) + 1);
    if (name == "p") {
        auto all = partition_numbers(hi);
        table.values.assign(all.begin() + lo, all.end());
        return table;
    }
    std::function<Integer(int)> f;
    if (name == "sigma") {
        f = [](int n) { return sigma(n); };
    } else if (name == "spt") {
        f = spt;
    } else if (name == "spt_o_plus") {
        f = spt_o_plus;
    } else if (name == "spt_o_minus") {
        f = spt_o_minus;
    } else if (name == "spt_o") {
        f = spt_o;
    } else if (name == "n2") {
        f = n2;
    } else if (name == "m2") {
        f = m2;
    } else {
        f = t4;
    }
    for (int n = lo; n <= hi; ++n) {
        table.values.push_back(f(n));
    }
    return table;
}

} // namespace sptq
