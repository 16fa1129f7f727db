// SPDX-License-Identifier: Apache-2.0

// Command implementations behind the sptq tool: sequence tables with an
// on-disk cache, verification reports, the worked-example table and the
// registry listing. Commands write to the given streams and return the
// process exit code (0 ok / all pass, 1 some check failed, 2 usage error).

#pragma once

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <random>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "sptq/checks.hpp"
#include "sptq/partitions.hpp"

namespace sptq::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

/// Bumped whenever cached values could change meaning.
inline constexpr const char* kCacheVersion = "sptq-cache-1";

inline constexpr int kDefaultVerifyOrder = 40;

enum class Format { json, csv, text };

inline std::optional<Format> parse_format(std::string_view s)
{
    if (s == "json") {
        return Format::json;
    }
    if (s == "csv") {
        return Format::csv;
    }
    if (s == "text") {
        return Format::text;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Cache

struct CacheEntry {
    SequenceTable table;
    std::string version = kCacheVersion;
};

/// --cache-dir, then $SPTQ_CACHE_DIR, then $XDG_CACHE_HOME/sptq, then ~/.cache/sptq.
inline std::filesystem::path default_cache_dir()
{
    if (const char* env = std::getenv("SPTQ_CACHE_DIR"); env != nullptr && *env != '\0') {
        return env;
    }
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg != nullptr && *xdg != '\0') {
        return std::filesystem::path(xdg) / "sptq";
    }
    if (const char* home = std::getenv("HOME"); home != nullptr && *home != '\0') {
        return std::filesystem::path(home) / ".cache" / "sptq";
    }
    return std::filesystem::temp_directory_path() / "sptq-cache";
}

inline nlohmann::json table_to_json(const SequenceTable& t)
{
    nlohmann::json values = nlohmann::json::array();
    for (const auto& v : t.values) {
        values.push_back(v.str());
    }
    return {{"name", t.name}, {"lo", t.lo}, {"hi", t.hi}, {"values", std::move(values)}};
}

inline SequenceTable table_from_json(const nlohmann::json& j)
{
    SequenceTable t;
    t.name = j.at("name").get<std::string>();
    t.lo = j.at("lo").get<int>();
    t.hi = j.at("hi").get<int>();
    for (const auto& v : j.at("values")) {
        t.values.emplace_back(v.get<std::string>());
    }
    if (t.hi < t.lo || t.values.size() != static_cast<std::size_t>(t.hi - t.lo + 1)) {
        throw std::runtime_error("malformed table");
    }
    return t;
}

/// One JSON file per sequence. Reads never throw: anything unreadable is a miss.
class SequenceCache {
public:
    explicit SequenceCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

    const std::filesystem::path& dir() const noexcept { return dir_; }

    std::filesystem::path path_for(std::string_view name) const { return dir_ / (std::string(name) + ".json"); }

    std::optional<CacheEntry> load(std::string_view name) const
    {
        try {
            std::ifstream in(path_for(name));
            if (!in) {
                return std::nullopt;
            }
            const auto j = nlohmann::json::parse(in);
            CacheEntry e{table_from_json(j.at("table")), j.at("version").get<std::string>()};
            if (e.table.name != name) {
                return std::nullopt;
            }
            return e;
        } catch (const std::exception&) {
            return std::nullopt;
        }
    }

    /// The cached slice [lo, hi] if a matching entry covers it.
    std::optional<SequenceTable> lookup(std::string_view name, int lo, int hi) const
    {
        auto e = load(name);
        if (!e || e->version != kCacheVersion || e->table.lo > lo || e->table.hi < hi) {
            return std::nullopt;
        }
        SequenceTable out{std::string(name), lo, hi, {}};
        for (int n = lo; n <= hi; ++n) {
            out.values.push_back(e->table.at(n));
        }
        return out;
    }

    /// Writes via a temporary file and rename, so readers never see a
    /// partial entry. Returns false on I/O failure.
    bool store(const SequenceTable& table) const
    {
        try {
            std::filesystem::create_directories(dir_);
            const auto final_path = path_for(table.name);
            auto tmp = final_path;
            tmp += ".tmp" + std::to_string(std::random_device{}());
            {
                std::ofstream out(tmp);
                if (!out) {
                    return false;
                }
                out << nlohmann::json{{"version", kCacheVersion}, {"table", table_to_json(table)}}.dump();
                if (!out) {
                    return false;
                }
            }
            std::filesystem::rename(tmp, final_path);
            return true;
        } catch (const std::exception&) {
            return false;
        }
    }

private:
    std::filesystem::path dir_;
};

// ---------------------------------------------------------------------------
// compute

struct ComputeOptions {
    std::string sequence;
    int lo = 0;
    int hi = 0;
    Format format = Format::json;
    std::optional<std::filesystem::path> out;
    std::optional<std::filesystem::path> cache_dir;
    bool use_cache = true;
};

inline std::string render_table(const SequenceTable& t, Format f)
{
    std::ostringstream os;
    switch (f) {
    case Format::json:
        os << table_to_json(t).dump(2) << '\n';
        break;
    case Format::csv:
        os << "n,value\n";
        for (int n = t.lo; n <= t.hi; ++n) {
            os << n << ',' << t.at(n) << '\n';
        }
        break;
    case Format::text:
        for (int n = t.lo; n <= t.hi; ++n) {
            os << t.name << '(' << n << ") = " << t.at(n) << '\n';
        }
        break;
    }
    return os.str();
}

/// Cached when possible; a cache that cannot be read or written only costs
/// a recomputation.
inline SequenceTable cached_sequence(const ComputeOptions& opt, std::ostream& err)
{
    std::optional<SequenceCache> cache;
    if (opt.use_cache) {
        cache.emplace(opt.cache_dir.value_or(default_cache_dir()));
        if (auto hit = cache->lookup(opt.sequence, opt.lo, opt.hi)) {
            return *hit;
        }
    }
    auto table = sequence(opt.sequence, opt.lo, opt.hi);
    if (cache) {
        // Keep the wider of the old and new ranges when they overlap or touch.
        auto to_store = table;
        if (auto old = cache->load(opt.sequence); old && old->version == kCacheVersion &&
                                                  old->table.lo <= table.hi + 1 && table.lo <= old->table.hi + 1) {
            const int lo = std::min(old->table.lo, table.lo);
            const int hi = std::max(old->table.hi, table.hi);
            to_store = SequenceTable{table.name, lo, hi, {}};
            for (int n = lo; n <= hi; ++n) {
                to_store.values.push_back(n >= table.lo && n <= table.hi ? table.at(n) : old->table.at(n));
            }
        }
        if (!cache->store(to_store)) {
            err << "warning: could not write cache in " << cache->dir() << '\n';
        }
    }
    return table;
}

inline int cmd_compute(const ComputeOptions& opt, std::ostream& out, std::ostream& err)
{
    if (find_sequence(opt.sequence) == nullptr) {
        err << "error: unknown sequence '" << opt.sequence << "' (see `sptq list`)\n";
        return kExitUsage;
    }
    SequenceTable table;
    try {
        table = cached_sequence(opt, err);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    const auto text = render_table(table, opt.format);
    if (opt.out) {
        std::ofstream f(*opt.out);
        if (!(f << text)) {
            err << "error: cannot write " << *opt.out << '\n';
            return kExitUsage;
        }
    } else {
        out << text;
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyOptions {
    bool all = false;
    std::vector<std::string> ids;
    int order = kDefaultVerifyOrder;
    std::optional<std::filesystem::path> report;
    bool parallel = true;
};

inline nlohmann::json report_to_json(const IdentityReport& r)
{
    nlohmann::json mismatches = nlohmann::json::array();
    for (const auto& m : r.mismatches) {
        nlohmann::json j{{"k", m.k}, {"lhs", m.lhs.str()}, {"rhs", m.rhs.str()}};
        if (!m.where.empty()) {
            j["where"] = m.where;
        }
        mismatches.push_back(std::move(j));
    }
    return {{"id", r.id},
            {"order", r.order},
            {"status", to_string(r.status)},
            {"mismatches", std::move(mismatches)},
            {"mismatch_count", r.mismatch_count},
            {"checked", r.checked},
            {"elapsed_ms", r.elapsed.count()}};
}

inline int cmd_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err)
{
    if (opt.all == !opt.ids.empty()) {
        err << "error: give either --all or at least one --identity\n";
        return kExitUsage;
    }
    if (opt.order < 1) {
        err << "error: --order must be at least 1\n";
        return kExitUsage;
    }
    std::vector<IdentityReport> reports;
    try {
        reports = verify_many(opt.ids, opt.order, opt.parallel);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << " (see `sptq list`)\n";
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    nlohmann::json arr = nlohmann::json::array();
    bool all_pass = true;
    for (const auto& r : reports) {
        arr.push_back(report_to_json(r));
        all_pass = all_pass && r.passed();
        err << std::left << std::setw(16) << r.id << to_string(r.status) << "  (" << r.checked << " comparisons, "
            << std::fixed << std::setprecision(1) << r.elapsed.count() << " ms)\n";
    }
    const auto text = arr.dump(2) + "\n";
    if (opt.report) {
        std::ofstream f(*opt.report);
        if (!(f << text)) {
            err << "error: cannot write " << *opt.report << '\n';
            return kExitUsage;
        }
    } else {
        out << text;
    }
    return all_pass ? kExitOk : kExitFailed;
}

// ---------------------------------------------------------------------------
// examples

struct ExampleRow {
    std::string quantity;
    Integer computed;
    /// Reference value, when one is given.
    std::optional<Integer> stated;
    std::string note;

    bool discrepant() const { return stated && *stated != computed; }

    std::string flag() const
    {
        if (!stated) {
            return "computed only";
        }
        if (!discrepant()) {
            return "matches paper";
        }
        return "paper states " + stated->str() + "; see notes";
    }
};

inline std::vector<ExampleRow> example_rows()
{
    return {
        {"spt(2)", spt(2), Integer(3), "smallest parts of (2) and (1,1)"},
        {"spt_o_plus(3)", spt_o_plus(3), Integer(5), ""},
        {"spt_o_minus(3)", spt_o_minus(3), Integer(5), "(2,1)+{}, (1,1,1)+{}, (2)+(1)"},
        {"spt_o_plus(5)", spt_o_plus(5), Integer(12), ""},
        {"spt_o_minus(5)", spt_o_minus(5), Integer(12), ""},
        {"spt_o_plus(4)", spt_o_plus(4), Integer(7),
         "(2,1,1) also satisfies the odd-part rule: weights 1+2+2+4 = 9; 9 - spt(2) = 6 is still even"},
        {"spt_o_minus(6)", spt_o_minus(6), Integer(18),
         "(3,1,1,1) and (3,2,1) have the odd part 3 > 2 s(pi) = 2 and are excluded; 21 - 16 = 5 = spt(3)"},
        {"spt_o(4)", spt_o(4), std::nullopt, "equals spt(2)"},
        {"spt_o(6)", spt_o(6), std::nullopt, "equals spt(3)"},
    };
}

inline int cmd_examples(std::ostream& out)
{
    const auto rows = example_rows();
    out << std::left << std::setw(16) << "quantity" << std::setw(10) << "computed"
        << "flag\n";
    int flagged = 0;
    for (const auto& r : rows) {
        out << std::left << std::setw(16) << r.quantity << std::setw(10) << r.computed.str() << r.flag() << '\n';
        if (r.discrepant()) {
            ++flagged;
        }
    }
    out << "\nnotes:\n";
    for (const auto& r : rows) {
        if (!r.note.empty()) {
            out << "  " << r.quantity << ": " << r.note << '\n';
        }
    }
    const auto density = spt_o_plus_even_density(400);
    out << "\nspt_o_plus(2n) even for " << density.even << " of " << density.total
        << " n <= 200 (finite-range report only)\n";
    out << flagged << " value(s) differ from the reference values\n";
    return kExitOk;
}

// ---------------------------------------------------------------------------
// list

inline int cmd_list(std::ostream& out)
{
    out << "sequences:\n";
    for (const auto& s : kSequences) {
        out << "  " << std::left << std::setw(14) << s.id << s.description << "  [" << s.min_index << ".."
            << s.max_index << "]\n";
    }
    out << "\nidentities:\n";
    for (const auto& c : identity_registry()) {
        out << "  " << std::left << std::setw(16) << c.id << c.description << '\n'
            << "  " << std::setw(16) << "" << to_string(c.kind) << ", order <= " << c.max_order << ": "
            << c.statement << '\n';
    }
    return kExitOk;
}

} // namespace sptq::cli
