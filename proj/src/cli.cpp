#include "pbar/cli.hpp"

#include <algorithm>
#include <chrono>
#include <charconv>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string_view>
#include <variant>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "pbar/congruence.hpp"
#include "pbar/numtheory.hpp"
#include "pbar/overpartition.hpp"
#include "pbar/report_json.hpp"
#include "pbar/scan.hpp"
#include "pbar/squares.hpp"

namespace pbar {

namespace {

using nlohmann::ordered_json;

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

OutputFormat parse_format(const std::string& s)
{
    if (s == "json")
        return OutputFormat::Json;
    if (s == "csv")
        return OutputFormat::Csv;
    if (s == "table")
        return OutputFormat::Table;
    throw UsageError("unknown format '" + s + "'");
}

std::uint64_t parse_u64(std::string_view s, const char* what)
{
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw UsageError(std::string("invalid ") + what + " '" + std::string(s) + "'");
    return v;
}

// "--mod 16" or "--mod 2^4" -> bit width 4.
unsigned parse_modulus_bits(const std::string& s)
{
    if (auto caret = s.find('^'); caret != std::string::npos) {
        if (s.substr(0, caret) != "2")
            throw UsageError("--mod must be a power of two, got '" + s + "'");
        auto j = parse_u64(std::string_view(s).substr(caret + 1), "exponent");
        if (j < 1 || j > 64)
            throw UsageError("--mod exponent must be in [1, 64]");
        return static_cast<unsigned>(j);
    }
    auto bits = exact_log2(parse_u64(s, "modulus"));
    if (!bits || *bits == 0)
        throw UsageError("--mod must be a power of two >= 2, got '" + s + "'");
    return *bits;
}

std::string modulus_label(unsigned bits)
{
    BigInt m;
    mpz_ui_pow_ui(m.get_mpz_t(), 2, bits);
    return m.get_str();
}

ordered_json bigint_json(const BigInt& v)
{
    if (v.fits_slong_p())
        return static_cast<std::int64_t>(v.get_si());
    return v.get_str();
}

OverpartitionSource parse_source_flag(const std::string& s)
{
    try {
        return parse_source(s);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

// The coefficients printed in `ring` must all be determined by `source`.
Series overpartitions_for_output(const OverpartitionSource& source, std::size_t order, CoeffRing ring)
{
    const unsigned have = valid_bits(source, ring);
    if (ring.is_exact() ? !std::holds_alternative<TwoAdic>(source) : have >= ring.bits()) {
        if (const auto* two = std::get_if<TwoAdic>(&source); two && ring.bits() < two->max_k + 1)
            return series_reduce_mod(overpartitions(source, order, CoeffRing::mod2power(two->max_k + 1)), ring.bits());
        return overpartitions(source, order, ring);
    }
    throw UsageError("source '" + to_string(source) + "' only determines values mod 2^" + std::to_string(have)
                     + "; use --mod 2^" + std::to_string(have) + " or smaller");
}

struct RingFlags {
    std::string mod;
    bool exact = false;

    CoeffRing ring() const { return mod.empty() ? CoeffRing::exact() : CoeffRing::mod2power(parse_modulus_bits(mod)); }
};

void add_ring_flags(CLI::App* cmd, RingFlags& flags)
{
    auto* mod = cmd->add_option("--mod", flags.mod, "Reduce modulo 2^j (give 16 or 2^4)");
    auto* exact = cmd->add_flag("--exact", flags.exact, "Exact integer coefficients (default)");
    mod->excludes(exact);
}

void print_rows(std::ostream& out, OutputFormat format, const std::vector<std::string>& header,
                const std::vector<std::vector<std::string>>& rows)
{
    if (format == OutputFormat::Csv) {
        out << fmt::format("{}\n", fmt::join(header, ","));
        for (const auto& r : rows)
            out << fmt::format("{}\n", fmt::join(r, ","));
        return;
    }
    std::vector<std::size_t> width(header.size());
    for (std::size_t i = 0; i < header.size(); ++i)
        width[i] = header[i].size();
    for (const auto& r : rows)
        for (std::size_t i = 0; i < r.size(); ++i)
            width[i] = std::max(width[i], r[i].size());
    auto line = [&](const std::vector<std::string>& r) {
        std::string s;
        for (std::size_t i = 0; i < r.size(); ++i)
            s += fmt::format("{}{:>{}}", i ? "  " : "", r[i], width[i]);
        out << s << '\n';
    };
    line(header);
    for (const auto& r : rows)
        line(r);
}

// ---- gen --------------------------------------------------------------------

struct GenOptions {
    std::size_t limit = 20;
    RingFlags ring;
    std::string source = "invert";
    std::string format = "csv";
};

int cmd_gen(const GenOptions& o, std::ostream& out)
{
    const auto source = parse_source_flag(o.source);
    const auto ring = o.ring.ring();
    const Series s = overpartitions_for_output(source, o.limit, ring);
    const std::string value_name = ring.is_exact() ? "pbar" : "pbar_mod_" + modulus_label(ring.bits());
    const auto format = parse_format(o.format);
    if (format == OutputFormat::Json) {
        ordered_json arr = ordered_json::array();
        for (std::size_t n = 0; n <= s.order(); ++n) {
            ordered_json row;
            row["n"] = n;
            row[value_name] = bigint_json(s.coeff(n));
            arr.push_back(std::move(row));
        }
        out << arr.dump(2) << '\n';
        return kExitOk;
    }
    std::vector<std::vector<std::string>> rows;
    for (std::size_t n = 0; n <= s.order(); ++n)
        rows.push_back({std::to_string(n), s.coeff(n).get_str()});
    print_rows(out, format, {"n", value_name}, rows);
    return kExitOk;
}

// ---- verify -----------------------------------------------------------------

struct VerifyOptions {
    std::vector<std::string> suites;
    std::uint64_t limit = 10'000;
    std::string source = "invert";
    unsigned kmax = 2;
    std::string format = "json";
};

struct Suite {
    std::string name;
    std::uint64_t order; // table order the suite needs
    std::function<std::vector<VerificationReport>(const OverpartitionTable&)> run;
};

std::vector<Suite> expand_suite(const std::string& name, const VerifyOptions& o, bool from_all)
{
    const std::uint64_t n = o.limit;
    auto one = [](VerificationReport r) { return std::vector<VerificationReport>{std::move(r)}; };
    auto after_colon = [&](std::string_view prefix) { return std::string_view(name).substr(prefix.size()); };

    if (name == "all") {
        std::vector<Suite> out;
        std::vector<std::string> members = {"thm-16n14", "thm-ell:7", "thm-ell:23"};
        for (auto t : {"4", "8", "16", "32", "64", "128"})
            members.push_back(std::string("thm-4n:") + t);
        for (auto m : {"dissection", "kim8", "families8:3", "families8:5", "families8:7", "families8:11", "families8:13",
                       "known-table", "combined"})
            members.emplace_back(m);
        for (const auto& m : members)
            for (auto& s : expand_suite(m, o, true))
                out.push_back(std::move(s));
        return out;
    }
    if (name == "thm-16n14")
        return {{name, n, [=](const auto& t) { return one(verify_progression(t, {16, 14, 16}, n, "thm-16n14")); }}};
    if (name.starts_with("thm-ell:")) {
        const auto ell = parse_u64(after_colon("thm-ell:"), "prime");
        if (from_all && n < ell * ell)
            return {};
        // Surface precondition failures as usage errors before any work.
        if (ell < 3 || !is_prime(ell))
            throw UsageError(name + ": " + std::to_string(ell) + " is not an odd prime");
        if (ell % 8 != 7)
            throw UsageError(name + ": the mod-16 family needs ell = -1 (mod 8), but " + std::to_string(ell) + " = "
                             + std::to_string(ell % 8) + " (mod 8)");
        if (n < ell * ell)
            throw UsageError(name + ": --limit must be at least ell^2 = " + std::to_string(ell * ell));
        return {{name, n, [=](const auto& t) { return verify_ell_family(t, ell, 16, n); }}};
    }
    if (name.starts_with("thm-4n:")) {
        RelationTier tier;
        try {
            tier = parse_tier(after_colon("thm-4n:"));
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        return {{name, 4 * n, [=](const auto& t) { return one(verify_4n_relations(t, tier, n)); }}};
    }
    if (name == "dissection") {
        if (n < 16) {
            if (from_all)
                return {};
            throw UsageError("dissection: --limit must be at least 16");
        }
        return {{name, n, [=](const auto& t) {
                     auto out = one(verify_dissection_mod16(t, n));
                     for (auto& r : verify_dissection_vanishing(n))
                         out.push_back(std::move(r));
                     return out;
                 }}};
    }
    if (name == "dissection:as-printed") {
        if (n < 16)
            throw UsageError("dissection: --limit must be at least 16");
        return {{name, n, [=](const auto& t) {
                     auto out = one(verify_dissection_mod16(t, n, DissectionForm::AsPrinted));
                     for (auto& r : verify_dissection_vanishing(n, DissectionForm::AsPrinted))
                         out.push_back(std::move(r));
                     return out;
                 }}};
    }
    if (name.starts_with("progression:")) {
        // progression:A,B,M
        std::vector<std::uint64_t> abm;
        const std::string_view triple = after_colon("progression:");
        for (std::size_t pos = 0;;) {
            const auto comma = triple.find(',', pos);
            abm.push_back(parse_u64(triple.substr(pos, comma - pos), "A, B and M"));
            if (comma == std::string_view::npos)
                break;
            pos = comma + 1;
        }
        if (abm.size() != 3)
            throw UsageError(name + ": expected progression:A,B,M");
        CongruenceClaim claim;
        try {
            claim = CongruenceClaim::make(abm[0], abm[1], abm[2]);
        } catch (const std::invalid_argument& e) {
            throw UsageError(name + ": " + e.what());
        }
        return {{name, n, [=](const auto& t) { return one(verify_progression(t, claim, n, name)); }}};
    }
    if (name == "kim8")
        return {{name, n, [=](const auto& t) { return one(verify_kim_mod8(t, n)); }}};
    if (name.starts_with("families8:")) {
        const auto ell = parse_u64(after_colon("families8:"), "prime");
        if (ell < 3 || !is_prime(ell))
            throw UsageError(name + ": " + std::to_string(ell) + " is not an odd prime");
        return {{name, n, [=](const auto& t) { return verify_mod8_families(t, ell, n); }}};
    }
    if (name == "known-table")
        return {{name, n, [=](const auto& t) { return verify_known_table(t, n); }}};
    if (name == "combined") {
        const unsigned kmax = o.kmax;
        return {{name, n, [=](const auto& t) { return verify_combined_families(t, n, kmax); }}};
    }
    throw UsageError("unknown suite '" + name
                     + "' (expected thm-16n14, thm-ell:L, thm-4n:TIER, dissection, dissection:as-printed, kim8, "
                       "families8:L, known-table, combined, progression:A,B,M or all)");
}

int cmd_verify(const VerifyOptions& o, std::ostream& out, std::ostream& err)
{
    const auto format = parse_format(o.format);
    if (format == OutputFormat::Csv)
        throw UsageError("verify supports --format json or table");
    const auto source = parse_source_flag(o.source);

    std::vector<Suite> suites;
    for (const auto& name : o.suites)
        for (auto& s : expand_suite(name, o, false))
            suites.push_back(std::move(s));

    std::uint64_t order = 0;
    for (const auto& s : suites)
        order = std::max(order, s.order);

    const auto start = std::chrono::steady_clock::now();
    const auto table = OverpartitionTable::build(source, order);
    std::vector<VerificationReport> reports;
    for (const auto& s : suites)
        for (auto& r : s.run(table))
            reports.push_back(std::move(r));
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;

    bool failed = false;
    for (const auto& r : reports)
        failed |= r.status == Status::Counterexample;

    if (format == OutputFormat::Json) {
        out << to_json(std::span<const VerificationReport>(reports)).dump(2) << '\n';
    } else {
        std::vector<std::vector<std::string>> rows;
        for (const auto& r : reports)
            rows.push_back({std::string(to_string(r.status)), r.id, r.claim ? to_string(*r.claim) : std::string("-"),
                            std::to_string(r.range),
                            r.witness ? fmt::format("n={} index={} residue={}", r.witness->n, r.witness->index,
                                                    r.witness->residue)
                                      : std::string("-")});
        print_rows(out, format, {"status", "id", "claim", "range", "witness"}, rows);
    }
    err << fmt::format("verify: {} reports, {} order table, {:.3f} s\n", reports.size(), order, elapsed.count());
    return failed ? kExitCounterexample : kExitOk;
}

// ---- ck ---------------------------------------------------------------------

struct CkOptions {
    unsigned k = 3;
    std::size_t limit = 100;
    std::string format = "csv";
};

int cmd_ck(const CkOptions& o, std::ostream& out)
{
    if (o.k < 1)
        throw UsageError("--k must be at least 1");
    const auto format = parse_format(o.format);
    const auto table = cached_ck_table(o.k, o.limit);
    std::vector<std::string> header{"n"};
    for (unsigned k = 1; k <= o.k; ++k)
        header.push_back("c" + std::to_string(k));
    if (format == OutputFormat::Json) {
        ordered_json arr = ordered_json::array();
        for (std::size_t n = 0; n <= o.limit; ++n) {
            ordered_json row;
            row["n"] = n;
            for (unsigned k = 1; k <= o.k; ++k)
                row[header[k]] = bigint_json(table->at(k, n));
            arr.push_back(std::move(row));
        }
        out << arr.dump(2) << '\n';
        return kExitOk;
    }
    std::vector<std::vector<std::string>> rows;
    for (std::size_t n = 0; n <= o.limit; ++n) {
        std::vector<std::string> r{std::to_string(n)};
        for (unsigned k = 1; k <= o.k; ++k)
            r.push_back(table->at(k, n).get_str());
        rows.push_back(std::move(r));
    }
    print_rows(out, format, header, rows);
    return kExitOk;
}

// ---- dissect ----------------------------------------------------------------

struct DissectOptions {
    std::size_t t = 16;
    std::size_t r = 0;
    RingFlags ring;
    std::size_t limit = 1000;
    std::string source = "invert";
    std::string format = "csv";
};

int cmd_dissect(const DissectOptions& o, std::ostream& out)
{
    if (o.t < 1 || o.r >= o.t)
        throw UsageError("need --t >= 1 and 0 <= --r < --t");
    if (o.r > o.limit)
        throw UsageError("--r exceeds --limit");
    const auto format = parse_format(o.format);
    const auto ring = o.ring.ring();
    const Series part = series_dissect(overpartitions_for_output(parse_source_flag(o.source), o.limit, ring), o.t, o.r);
    const std::string value_name = ring.is_exact() ? "pbar" : "pbar_mod_" + modulus_label(ring.bits());
    if (format == OutputFormat::Json) {
        ordered_json arr = ordered_json::array();
        for (std::size_t n = 0; n <= part.order(); ++n) {
            ordered_json row;
            row["n"] = n;
            row["index"] = o.t * n + o.r;
            row[value_name] = bigint_json(part.coeff(n));
            arr.push_back(std::move(row));
        }
        out << arr.dump(2) << '\n';
        return kExitOk;
    }
    std::vector<std::vector<std::string>> rows;
    for (std::size_t n = 0; n <= part.order(); ++n)
        rows.push_back({std::to_string(n), std::to_string(o.t * n + o.r), part.coeff(n).get_str()});
    print_rows(out, format, {"n", "index", value_name}, rows);
    return kExitOk;
}

// ---- scan -------------------------------------------------------------------

struct ScanOptions {
    std::uint64_t amax = 16;
    std::vector<std::uint64_t> mods{4, 8, 16, 32, 64};
    std::uint64_t limit = 10'000;
    std::uint64_t min_checks = 20;
    std::string source = "invert";
    std::string format = "json";
};

int cmd_scan(const ScanOptions& o, std::ostream& out, std::ostream& err)
{
    const auto format = parse_format(o.format);
    if (o.amax < 1)
        throw UsageError("--amax must be at least 1");
    for (auto m : o.mods)
        if (std::find(std::begin(kScanModuli), std::end(kScanModuli), m) == std::end(kScanModuli))
            throw UsageError("--mods entries must be among 4, 8, 16, 32, 64, 128");
    const auto start = std::chrono::steady_clock::now();
    const auto table = OverpartitionTable::build(parse_source_flag(o.source), o.limit);
    const auto hits = scan_congruences(table, o.amax, o.mods, o.limit, o.min_checks);
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    if (format == OutputFormat::Json) {
        out << to_json(std::span<const ScanHit>(hits)).dump(2) << '\n';
    } else {
        std::vector<std::vector<std::string>> rows;
        for (const auto& h : hits)
            rows.push_back({std::to_string(h.claim.A), std::to_string(h.claim.B), std::to_string(h.claim.M),
                            std::to_string(h.checks), h.known ? "KNOWN" : "CANDIDATE"});
        print_rows(out, format, {"A", "B", "M", "checks", "label"}, rows);
    }
    err << fmt::format("scan: {} hits, {:.3f} s\n", hits.size(), elapsed.count());
    return kExitOk;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Overpartition congruence toolkit: generate p(n), verify congruences, scan for new ones", "pbar"};
    app.require_subcommand(1);

    GenOptions gen;
    auto* gen_cmd = app.add_subcommand("gen", "Emit n, p(n) for 0 <= n <= limit");
    gen_cmd->add_option("--limit", gen.limit, "Largest n")->capture_default_str();
    add_ring_flags(gen_cmd, gen.ring);
    gen_cmd->add_option("--source", gen.source, "product | invert | 2adic:K")->capture_default_str();
    gen_cmd->add_option("--format", gen.format, "csv | json | table")->capture_default_str();

    VerifyOptions verify;
    auto* verify_cmd = app.add_subcommand("verify", "Run verification suites");
    verify_cmd->add_option("suites", verify.suites,
                           "thm-16n14 | thm-ell:L | thm-4n:TIER | dissection | dissection:as-printed | kim8 | "
                           "families8:L | known-table | combined | progression:A,B,M | all")
        ->required();
    verify_cmd->add_option("--limit", verify.limit, "Largest argument (largest n for thm-4n)")->capture_default_str();
    verify_cmd->add_option("--source", verify.source, "product | invert | 2adic:K")->capture_default_str();
    verify_cmd->add_option("--kmax", verify.kmax, "Largest k for the combined 4^k families")->capture_default_str();
    verify_cmd->add_option("--format", verify.format, "json | table")->capture_default_str();

    CkOptions ck;
    auto* ck_cmd = app.add_subcommand("ck", "Dump c_k(n) as CSV: n,c1,...,cK");
    ck_cmd->add_option("--k", ck.k, "Largest k")->capture_default_str();
    ck_cmd->add_option("--limit", ck.limit, "Largest n")->capture_default_str();
    ck_cmd->add_option("--format", ck.format, "csv | json | table")->capture_default_str();

    DissectOptions dissect;
    auto* dissect_cmd = app.add_subcommand("dissect", "Emit p(t n + r) for t n + r <= limit");
    dissect_cmd->add_option("--t", dissect.t, "Dissection modulus")->required();
    dissect_cmd->add_option("--r", dissect.r, "Residue class")->required();
    add_ring_flags(dissect_cmd, dissect.ring);
    dissect_cmd->add_option("--limit", dissect.limit, "Largest argument t n + r")->capture_default_str();
    dissect_cmd->add_option("--source", dissect.source, "product | invert | 2adic:K")->capture_default_str();
    dissect_cmd->add_option("--format", dissect.format, "csv | json | table")->capture_default_str();

    ScanOptions scan;
    auto* scan_cmd = app.add_subcommand("scan", "Search for p(A n + B) = 0 (mod M) candidates");
    scan_cmd->add_option("--amax", scan.amax, "Largest progression modulus A")->capture_default_str();
    scan_cmd->add_option("--mods", scan.mods, "Moduli M to test (subset of 4 8 16 32 64 128)")->delimiter(',');
    scan_cmd->add_option("--limit", scan.limit, "Largest argument A n + B")->capture_default_str();
    scan_cmd->add_option("--min-checks", scan.min_checks, "Minimum number of tested terms per claim")
        ->capture_default_str();
    scan_cmd->add_option("--source", scan.source, "product | invert | 2adic:K")->capture_default_str();
    scan_cmd->add_option("--format", scan.format, "json | csv | table")->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (*gen_cmd)
            return cmd_gen(gen, out);
        if (*verify_cmd)
            return cmd_verify(verify, out, err);
        if (*ck_cmd)
            return cmd_ck(ck, out);
        if (*dissect_cmd)
            return cmd_dissect(dissect, out);
        if (*scan_cmd)
            return cmd_scan(scan, out, err);
    } catch (const std::exception& e) {
        // Precondition violations trace back to flag values.
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

} // namespace pbar
