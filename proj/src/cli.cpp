#include "qparity/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "qparity/errors.hpp"
#include "qparity/genfun.hpp"
#include "qparity/records.hpp"
#include "qparity/verify.hpp"

namespace qparity {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::size_t default_limit()
{
    const char* env = std::getenv(kLimitEnvVar);
    if (!env || !*env)
        return kDefaultLimit;
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (*end != '\0' || v == 0 || env[0] == '-')
        throw UsageError(std::string(kLimitEnvVar) + " must be a positive integer, got '" + env + "'");
    return static_cast<std::size_t>(v);
}

struct CommonOptions {
    std::size_t limit = kDefaultLimit;
    std::string format = "plain";
    std::string out_path;
};

void add_common(CLI::App* cmd, CommonOptions& opts)
{
    cmd->add_option("--limit", opts.limit, "Exclusive upper bound on n (env " +
                                               std::string(kLimitEnvVar) + " sets the default)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--format", opts.format, "Output format: plain, jsonl or csv")
        ->check(CLI::IsMember({"plain", "table", "jsonl", "json-lines", "json", "csv"}));
    cmd->add_option("--out", opts.out_path, "Write records to FILE instead of stdout");
}

void require_odd_t(std::size_t t)
{
    if (t == 0 || t % 2 == 0)
        throw UsageError("--t must be an odd positive integer, got " + std::to_string(t));
}

int cmd_compute(std::size_t t, const CommonOptions& opts, bool force_mod2, bool force_integers,
                RecordWriter& w)
{
    require_odd_t(t);
    Domain domain = t >= 5 ? Domain::Mod2 : Domain::Integers;
    if (force_mod2)
        domain = Domain::Mod2;
    if (force_integers)
        domain = Domain::Integers;
    if (domain == Domain::Integers && opts.limit > kComputeIntegerCap)
        throw UsageError("Integers-domain compute is capped at --limit " +
                         std::to_string(kComputeIntegerCap) + "; use --mod2 for parities");
    auto series = domain == Domain::Mod2 ? ptt_mod2_series(t, opts.limit) : ptt_series(t, opts.limit);
    for (std::size_t n = 0; n < opts.limit; ++n)
        w.write(coefficient_record(t, n, domain, series.coefficient(n)));
    return kExitOk;
}

int cmd_verify(const std::string& suite_name, const CommonOptions& opts, RecordWriter& w,
               std::ostream& err)
{
    auto suite = parse_suite(suite_name);
    if (!suite) {
        std::string names;
        for (auto n : suite_names())
            names += (names.empty() ? "" : ", ") + std::string(n);
        throw UsageError("unknown suite '" + suite_name + "' (expected one of: " + names + ")");
    }
    bool ok = true;
    for (const auto& report : run_suite(*suite, opts.limit)) {
        w.write(to_record(report));
        if (!report.passed) {
            ok = false;
            err << "FAILED " << report.theorem_id << " at " << *report.counterexample << ": "
                << report.detail << '\n';
        }
    }
    return ok ? kExitOk : kExitFailed;
}

int cmd_scan(std::size_t t, std::size_t modulus, const CommonOptions& opts, RecordWriter& w)
{
    require_odd_t(t);
    if (modulus == 0)
        throw UsageError("--modulus must be positive");
    for (const auto& claim : scan_congruences(t, modulus, opts.limit))
        w.write(to_record(claim));
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Parity computations for the mex partition functions p_{t,t}(n)", "qparity"};
    app.require_subcommand(1);

    CommonOptions compute_opts, verify_opts, scan_opts;
    std::size_t compute_t = 0, scan_t = 0, scan_modulus = 0;
    bool mod2 = false, integers = false;
    std::string suite = "all";

    try {
        std::size_t limit = default_limit();
        compute_opts.limit = verify_opts.limit = scan_opts.limit = limit;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    auto* compute = app.add_subcommand("compute", "Print p_{t,t}(n), or its parity, for 0 <= n < limit");
    compute->add_option("--t", compute_t, "Odd t")->required();
    auto* mod2_flag = compute->add_flag("--mod2", mod2, "Parities via the Z/2 product formula");
    compute->add_flag("--integers", integers, "Exact values (capped limit)")->excludes(mod2_flag);
    add_common(compute, compute_opts);

    auto* verify = app.add_subcommand("verify", "Run verification suites");
    verify->add_option("--suite", suite, "all, p11, p33, crank-rank, theorem6, corollaries, "
                                         "identities, tcore or dissection");
    add_common(verify, verify_opts);

    auto* scan = app.add_subcommand("scan", "Search residues j mod M with p_{t,t}(Mn+j) even");
    scan->add_option("--t", scan_t, "Odd t")->required();
    scan->add_option("--modulus", scan_modulus, "Modulus M")->required();
    add_common(scan, scan_opts);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    const CommonOptions& opts = compute->parsed() ? compute_opts
                                : verify->parsed() ? verify_opts
                                                   : scan_opts;
    try {
        auto format = parse_format(opts.format);
        std::ofstream file;
        if (!opts.out_path.empty()) {
            file.open(opts.out_path);
            if (!file)
                throw UsageError("cannot open --out file '" + opts.out_path + "'");
        }
        std::ostream& sink = opts.out_path.empty() ? out : file;
        RecordWriter writer(sink, *format);
        int code = kExitOk;
        if (compute->parsed())
            code = cmd_compute(compute_t, opts, mod2, integers, writer);
        else if (verify->parsed())
            code = cmd_verify(suite, opts, writer, err);
        else
            code = cmd_scan(scan_t, scan_modulus, opts, writer);
        writer.finish();
        return code;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ResourceLimitError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

}  // namespace qparity
