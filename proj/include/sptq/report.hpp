// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <string>
#include <vector>

#include "sptq/series.hpp"

namespace sptq {

/// One disagreeing coefficient or index. `where` names the sub-check when a
/// report covers several.
struct Mismatch {
    long long k = 0;
    Integer lhs;
    Integer rhs;
    std::string where;
};

enum class Status { pass, fail };

inline const char* to_string(Status s) { return s == Status::pass ? "pass" : "fail"; }

struct IdentityReport {
    std::string id;
    int order = 0;
    Status status = Status::pass;
    /// First kMaxListed mismatches; mismatch_count has the full total.
    std::vector<Mismatch> mismatches;
    std::size_t mismatch_count = 0;
    /// Number of individual comparisons made.
    std::size_t checked = 0;
    std::chrono::duration<double, std::milli> elapsed{0};

    static constexpr std::size_t kMaxListed = 20;

    bool passed() const noexcept { return status == Status::pass; }
};

/// Accumulates comparisons for one report.
class MismatchLog {
public:
    void expect_equal(long long k, const Integer& lhs, const Integer& rhs, const std::string& where = {})
    {
        ++checked_;
        if (lhs != rhs) {
            record(k, lhs, rhs, where);
        }
    }

    /// Coefficientwise comparison up to the smaller of the two orders.
    void expect_equal(const TruncatedSeries& lhs, const TruncatedSeries& rhs, const std::string& where = {},
                      int from = 0)
    {
        const int n = std::min(lhs.order(), rhs.order());
        for (int k = from; k <= n; ++k) {
            expect_equal(k, lhs.coeffs()[k], rhs.coeffs()[k], where);
        }
    }

    /// Records value mod m against 0.
    void expect_divisible(long long k, const Integer& value, const Integer& modulus, const std::string& where = {})
    {
        ++checked_;
        Integer r = value % modulus;
        if (r < 0) {
            r += modulus;
        }
        if (r != 0) {
            record(k, r, 0, where);
        }
    }

    /// Records lhs mod m against rhs mod m.
    void expect_congruent(long long k, const Integer& lhs, const Integer& rhs, const Integer& modulus,
                          const std::string& where = {})
    {
        auto reduce = [&](Integer v) {
            v %= modulus;
            return v < 0 ? v + modulus : v;
        };
        expect_equal(k, reduce(lhs), reduce(rhs), where);
    }

    IdentityReport finish(std::string id, int order) &&
    {
        IdentityReport r;
        r.id = std::move(id);
        r.order = order;
        r.status = total_ == 0 ? Status::pass : Status::fail;
        r.mismatches = std::move(listed_);
        r.mismatch_count = total_;
        r.checked = checked_;
        return r;
    }

private:
    void record(long long k, const Integer& lhs, const Integer& rhs, const std::string& where)
    {
        ++total_;
        if (listed_.size() < IdentityReport::kMaxListed) {
            listed_.push_back({k, lhs, rhs, where});
        }
    }

    std::vector<Mismatch> listed_;
    std::size_t total_ = 0;
    std::size_t checked_ = 0;
};

} // namespace sptq
