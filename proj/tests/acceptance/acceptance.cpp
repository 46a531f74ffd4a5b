// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails or overruns its time budget.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "ck_properties.hpp"
#include "pbar/congruence.hpp"
#include "pbar/overpartition.hpp"
#include "pbar/scan.hpp"
#include "pbar/squares.hpp"
#include "pbar/theta.hpp"

using namespace pbar;
using Clock = std::chrono::steady_clock;

namespace {

// Exact arithmetic throughout; no numeric tolerance applies anywhere.
constexpr double kBudget1 = 1.0;
constexpr double kBudget2 = 30.0;
constexpr double kBudget3 = 10.0;
constexpr double kBudget4 = 30.0;
constexpr double kBudget5 = 10.0;
constexpr double kBudget6 = 30.0;
constexpr double kBudget7 = 60.0;
constexpr double kBudget8 = 60.0;
constexpr double kBudget9 = 120.0;

struct Outcome {
    bool ok = true;
    std::string detail;
};

// Counts checks and keeps every failure; the detail line shows two.
struct Checker {
    std::size_t checks = 0;
    std::vector<std::string> failures;

    void expect(bool cond, const std::string& what)
    {
        ++checks;
        if (!cond)
            failures.push_back(what);
    }
    void expect_all_verified(const std::vector<VerificationReport>& reports)
    {
        for (const auto& r : reports)
            expect(r.status == Status::Verified, r.id + (r.claim ? " " + to_string(*r.claim) : "") + " is "
                                                     + std::string(to_string(r.status)));
    }
    Outcome outcome(std::string extra = {}) const
    {
        Outcome o{failures.empty(), fmt::format("{} checks", checks)};
        if (!failures.empty()) {
            o.detail += fmt::format(", {} failed: {}", failures.size(), failures.front());
            if (failures.size() > 1)
                o.detail += fmt::format("; {}", failures[1]);
        }
        if (!extra.empty())
            o.detail += "; " + extra;
        return o;
    }
};

Outcome base_values()
{
    Checker c;
    const auto ring = CoeffRing::exact();
    const auto inv = overpartitions_by_inversion(40, ring);
    const std::vector<long> first = {1, 2, 4, 8};
    for (std::size_t n = 0; n < first.size(); ++n)
        c.expect(inv.coeff(n) == first[n], fmt::format("p({}) != {}", n, first[n]));
    for (unsigned n = 0; n <= 40; ++n)
        c.expect(inv.coeff(n) == BigInt(static_cast<unsigned long>(overpartitions_bruteforce(n))),
                 fmt::format("p({}) differs from enumeration", n));
    return c.outcome();
}

Outcome construction_equivalence()
{
    Checker c;
    const std::size_t order = 5000;
    const auto exact = CoeffRing::exact();
    const auto inv = overpartitions_by_inversion(order, exact);
    c.expect(overpartitions_by_product(order, exact) == inv, "product form != inversion");
    for (unsigned K = 3; K <= 7; ++K)
        c.expect(overpartitions_2adic(order, K, CoeffRing::mod2power(K + 1)) == series_reduce_mod(inv, K + 1),
                 fmt::format("2-adic K={} disagrees mod 2^{}", K, K + 1));
    return c.outcome();
}

Outcome theta_identities()
{
    Checker c;
    for (const auto& id : theta_identity_suite(2000))
        c.expect(id.lhs.order() == 2000 && id.lhs == id.rhs, id.name);
    return c.outcome();
}

std::size_t count_mismatches(const Series& rhs, const OverpartitionTable& table)
{
    std::size_t bad = 0;
    for (std::size_t n = 0; n <= rhs.order(); ++n)
        bad += rhs.coeff_mod2(n, 4) != table.residue(n, 16);
    return bad;
}

Outcome dissection()
{
    Checker c;
    const std::uint64_t limit = 4096;
    const auto table = OverpartitionTable::build(PhiInversion{}, limit);
    c.expect_all_verified({verify_dissection_mod16(table, limit)});
    c.expect_all_verified(verify_dissection_vanishing(limit));

    // The q^4 term as originally typeset, for the record.
    const auto printed = verify_dissection_mod16(table, limit, DissectionForm::AsPrinted);
    const auto misses = count_mismatches(dissection_mod16_rhs(limit, DissectionForm::AsPrinted), table);
    std::string note = printed.witness
                         ? fmt::format("printed q^4 term 2A(4P^2+3AP) fails at n={} ({} mismatches), "
                                       "checked with 2A(4P+3AP)",
                                       printed.witness->index, misses)
                         : "printed q^4 term also holds";
    return c.outcome(note);
}

Outcome progressions_16n14_and_ell()
{
    Checker c;
    const auto table = OverpartitionTable::build(PhiInversion{}, 20000);
    c.expect_all_verified({verify_progression(table, CongruenceClaim::make(16, 14, 16), 10000)});
    auto seven = verify_ell_family(table, 7, 16, 10000);
    c.expect(seven.size() == 6, "l=7 should give 6 classes");
    c.expect_all_verified(seven);
    auto twenty_three = verify_ell_family(table, 23, 16, 20000);
    c.expect(twenty_three.size() == 22, "l=23 should give 22 classes");
    c.expect_all_verified(twenty_three);
    return c.outcome();
}

Outcome relations_4n()
{
    Checker c;
    const std::uint64_t limit = 5000;
    const auto table = OverpartitionTable::build(PhiInversion{}, 4 * limit);
    for (auto tier : {RelationTier::Mod4, RelationTier::Mod8, RelationTier::Mod16, RelationTier::Mod32,
                      RelationTier::Mod64, RelationTier::Mod128})
        c.expect_all_verified({verify_4n_relations(table, tier, limit)});
    return c.outcome();
}

Outcome known_regression()
{
    Checker c;
    const std::uint64_t limit = 10000;
    const auto table = OverpartitionTable::build(PhiInversion{}, limit);
    auto known = verify_known_table(table, limit);
    c.expect(known.size() == 12, "expected 12 listed progressions");
    c.expect_all_verified(known);
    c.expect_all_verified({verify_kim_mod8(table, limit)});
    for (std::uint64_t ell : {3, 5, 7, 11, 13}) {
        auto reports = verify_mod8_families(table, ell, limit);
        std::set<std::string> families;
        for (const auto& f : mod8_family_claims(ell))
            families.insert(f.family);
        c.expect(families.count("ell2") && families.count("2ell"), fmt::format("l={} lacks a family", ell));
        // (r/9) = (r/3)^2 is never -1, so the 3l family is empty for l = 3.
        c.expect(families.count("3ell") == (ell != 3 && (ell % 8 == 3 || ell % 8 == 5)),
                 fmt::format("l={} 3l family presence", ell));
        c.expect_all_verified(reports);
    }
    return c.outcome();
}

Outcome ck_checks()
{
    Checker c;
    const auto table = ck_table(6, 200);
    for (unsigned k = 1; k <= 6; ++k)
        for (std::uint64_t n = 0; n <= 200; ++n)
            c.expect(table.at(k, n) == BigInt(static_cast<unsigned long>(ck_bruteforce(k, n))),
                     fmt::format("c{}({}) table != brute force", k, n));
    for (const auto& r : test::ck_properties(2000, 5000)) {
        c.expect(r.checked > 0, r.name + " checked nothing");
        c.expect(!r.first_failure, r.name + (r.first_failure ? fmt::format(" fails at {}", *r.first_failure) : ""));
    }
    return c.outcome();
}

Outcome scanner()
{
    Checker c;
    const std::uint64_t limit = 10000, min_checks = 20, max_a = 16;
    const std::vector<std::uint64_t> mods = {4, 8, 16, 32, 64};
    const auto table = OverpartitionTable::build(PhiInversion{}, limit);
    const auto hits = scan_congruences(table, max_a, mods, limit, min_checks);
    std::set<CongruenceClaim> found;
    std::size_t candidates = 0;
    for (const auto& h : hits) {
        found.insert(h.claim);
        candidates += !h.known;
        c.expect(verify_progression(table, h.claim, limit).status == Status::Verified,
                 to_string(h.claim) + " contradicted");
    }
    std::size_t applicable = 0;
    for (const auto& claim : published_base_claims(max_a)) {
        if (std::find(mods.begin(), mods.end(), claim.M) == mods.end() || (limit - claim.B) / claim.A + 1 < min_checks)
            continue;
        ++applicable;
        c.expect(found.count(claim) == 1, to_string(claim) + " not rediscovered");
    }
    c.expect(applicable > 0, "no applicable published claims");
    return c.outcome(fmt::format("{} hits, {} published claims rediscovered, {} candidates not implied by published claims", hits.size(),
                                 applicable, candidates));
}

struct Criterion {
    int id;
    const char* name;
    double budget;
    std::function<Outcome()> run;
};

} // namespace

int main()
{
    const std::vector<Criterion> criteria = {
        {1, "base values and enumeration to 40", kBudget1, base_values},
        {2, "construction equivalence to 5000", kBudget2, construction_equivalence},
        {3, "theta identities to 2000", kBudget3, theta_identities},
        {4, "16-dissection mod 16 to 4096", kBudget4, dissection},
        {5, "16n+14 mod 16; l=7 and l=23 families mod 16", kBudget5, progressions_16n14_and_ell},
        {6, "p(4n) relations mod 4..128 to 5000", kBudget6, relations_4n},
        {7, "known congruences, square theorem, mod-8 families", kBudget7, known_regression},
        {8, "c_k table, identities and divisibilities", kBudget8, ck_checks},
        {9, "scanner rediscovery and consistency", kBudget9, scanner},
    };

    int failed = 0;
    for (const auto& cr : criteria) {
        const auto start = Clock::now();
        Outcome o;
        try {
            o = cr.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(Clock::now() - start).count();
        const bool in_budget = secs <= cr.budget;
        const bool pass = o.ok && in_budget;
        failed += !pass;
        fmt::print("{} {}. {} [{:.3f}s / {:.0f}s{}] {}\n", pass ? "PASS" : "FAIL", cr.id, cr.name, secs, cr.budget,
                   in_budget ? "" : " OVER BUDGET", o.detail);
        std::fflush(stdout);
    }
    fmt::print("{}/{} criteria passed\n", criteria.size() - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
