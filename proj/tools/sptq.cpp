// SPDX-License-Identifier: Apache-2.0

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sptq/cli.hpp"

int main(int argc, char** argv)
{
    using namespace sptq::cli;

    CLI::App app{"Exact spt-type partition counts and q-series identity checks"};
    app.require_subcommand(1);

    ComputeOptions compute;
    std::string compute_format = "json";
    std::string compute_out;
    std::string cache_dir;
    bool no_cache = false;
    auto* c = app.add_subcommand("compute", "Print a sequence table");
    c->add_option("--sequence", compute.sequence, "Sequence id (see `list`)")->required();
    c->add_option("--lo", compute.lo, "First index")->required();
    c->add_option("--hi", compute.hi, "Last index")->required();
    c->add_option("--format", compute_format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
    c->add_option("--out", compute_out, "Write to FILE instead of stdout");
    c->add_option("--cache-dir", cache_dir, "Cache directory (default $SPTQ_CACHE_DIR or the user cache)");
    c->add_flag("--no-cache", no_cache, "Neither read nor write the cache");

    VerifyOptions verify;
    std::string report;
    bool serial = false;
    auto* v = app.add_subcommand("verify", "Run identity checks; exit 0 iff all pass");
    v->add_flag("--all", verify.all, "Run every registered check");
    v->add_option("--identity", verify.ids, "Check id (repeatable)");
    v->add_option("--order", verify.order, "Truncation order N")->capture_default_str();
    v->add_option("--report", report, "Write the JSON report to FILE instead of stdout");
    v->add_flag("--serial", serial, "Run checks one after another");

    app.add_subcommand("examples", "Reference values with discrepancy flags");
    app.add_subcommand("list", "Registered sequences and identities");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    if (c->parsed()) {
        compute.format = *parse_format(compute_format);
        if (!compute_out.empty()) {
            compute.out = compute_out;
        }
        if (!cache_dir.empty()) {
            compute.cache_dir = cache_dir;
        }
        compute.use_cache = !no_cache;
        return cmd_compute(compute, std::cout, std::cerr);
    }
    if (v->parsed()) {
        if (!report.empty()) {
            verify.report = report;
        }
        verify.parallel = !serial;
        return cmd_verify(verify, std::cout, std::cerr);
    }
    if (app.got_subcommand("examples")) {
        return cmd_examples(std::cout);
    }
    return cmd_list(std::cout);
}
