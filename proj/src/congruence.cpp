#include "pbar/congruence.hpp"

#include <bit>
#include <stdexcept>
#include <utility>

#include "pbar/numtheory.hpp"
#include "pbar/squares.hpp"
#include "pbar/theta.hpp"

namespace pbar {

namespace {

using Clock = std::chrono::steady_clock;

class Stopwatch {
public:
    std::chrono::nanoseconds elapsed() const { return Clock::now() - start_; }

private:
    Clock::time_point start_ = Clock::now();
};

VerificationReport finish(VerificationReport r, const Stopwatch& sw)
{
    r.elapsed = sw.elapsed();
    return r;
}

void require_order(const OverpartitionTable& table, std::uint64_t needed, const char* what)
{
    if (table.order() < needed)
        throw std::invalid_argument(std::string(what) + ": overpartition table has order " + std::to_string(table.order())
                                    + ", needs " + std::to_string(needed));
}

void require_odd_prime(std::uint64_t ell)
{
    if (ell < 3 || !is_prime(ell))
        throw std::invalid_argument(std::to_string(ell) + " is not an odd prime");
}

} // namespace

CongruenceClaim CongruenceClaim::make(std::uint64_t A, std::uint64_t B, std::uint64_t M)
{
    if (A < 1)
        throw std::invalid_argument("claim modulus A must be >= 1");
    if (B >= A)
        throw std::invalid_argument("claim residue must satisfy 0 <= B < A");
    if (M < 2 || !exact_log2(M))
        throw std::invalid_argument("claim modulus M must be a power of two >= 2, got " + std::to_string(M));
    return CongruenceClaim{A, B, M};
}

std::string to_string(const CongruenceClaim& c)
{
    return "p(" + std::to_string(c.A) + "n+" + std::to_string(c.B) + ") = 0 mod " + std::to_string(c.M);
}

std::string_view to_string(Status s)
{
    switch (s) {
    case Status::Verified: return "Verified";
    case Status::Counterexample: return "Counterexample";
    case Status::Skipped: return "Skipped";
    }
    return "?";
}

bool same_outcome(const VerificationReport& a, const VerificationReport& b)
{
    return a.id == b.id && a.claim == b.claim && a.range == b.range && a.status == b.status && a.witness == b.witness;
}

std::optional<unsigned> exact_log2(std::uint64_t m)
{
    if (m == 0 || !std::has_single_bit(m))
        return std::nullopt;
    return static_cast<unsigned>(std::countr_zero(m));
}

OverpartitionTable::OverpartitionTable(Series series, std::string source, unsigned valid_bits)
    : series_(std::move(series)), source_(std::move(source)), valid_bits_(valid_bits)
{
}

OverpartitionTable OverpartitionTable::build(const OverpartitionSource& source, std::size_t order, CoeffRing ring)
{
    return OverpartitionTable(overpartitions(source, order, ring), to_string(source), pbar::valid_bits(source, ring));
}

std::uint64_t OverpartitionTable::residue(std::size_t n, std::uint64_t modulus) const
{
    auto bits = exact_log2(modulus);
    if (!bits || *bits == 0)
        throw std::invalid_argument("modulus " + std::to_string(modulus) + " is not a power of two >= 2");
    if (*bits > valid_bits_)
        throw std::invalid_argument("table from '" + source_ + "' only determines residues mod 2^"
                                    + std::to_string(valid_bits_) + ", asked for mod " + std::to_string(modulus));
    return series_.coeff_mod2(n, *bits);
}

unsigned OverpartitionTable::valuation(std::size_t n) const
{
    if (series_.ring().is_exact()) {
        const BigInt c = series_.coeff(n);
        if (c == 0)
            return valid_bits_;
        return std::min<unsigned>(valid_bits_, static_cast<unsigned>(mpz_scan1(c.get_mpz_t(), 0)));
    }
    if (n > series_.order())
        throw std::out_of_range("valuation beyond table order");
    const std::uint64_t w = series_.words()[n];
    if (w == 0)
        return valid_bits_;
    return std::min<unsigned>(valid_bits_, static_cast<unsigned>(std::countr_zero(w)));
}

VerificationReport verify_progression(const OverpartitionTable& table, const CongruenceClaim& claim, std::uint64_t limit,
                                      std::string id)
{
    Stopwatch sw;
    VerificationReport r{std::move(id), claim, limit, Status::Skipped, std::nullopt, table.source(), {}};
    if (claim.B > limit)
        return finish(std::move(r), sw);
    require_order(table, limit, "verify_progression");
    r.status = Status::Verified;
    for (std::uint64_t n = 0, index = claim.B; index <= limit; ++n, index += claim.A) {
        const std::uint64_t res = table.residue(index, claim.M);
        if (res != 0) {
            r.status = Status::Counterexample;
            r.witness = Witness{n, index, res};
            break;
        }
    }
    return finish(std::move(r), sw);
}

std::vector<VerificationReport> verify_ell_family(const OverpartitionTable& table, std::uint64_t ell, std::uint64_t modulus,
                                                  std::uint64_t limit)
{
    require_odd_prime(ell);
    if (modulus != 8 && modulus != 16)
        throw std::invalid_argument("ell-family modulus must be 8 or 16");
    if (modulus == 16 && ell % 8 != 7)
        throw std::invalid_argument("mod-16 ell-family needs ell = -1 (mod 8); " + std::to_string(ell) + " = "
                                    + std::to_string(ell % 8) + " (mod 8)");
    if (limit < ell * ell)
        throw std::invalid_argument("ell-family check needs limit >= ell^2 = " + std::to_string(ell * ell));
    std::vector<VerificationReport> out;
    const std::string id = modulus == 16 ? "thm-ell:" + std::to_string(ell) : "families8:" + std::to_string(ell) + "/ell2";
    for (std::uint64_t rr = 1; rr < ell; ++rr)
        out.push_back(verify_progression(table, CongruenceClaim::make(ell * ell, rr * ell, modulus), limit, id));
    return out;
}

std::vector<FamilyClaim> mod8_family_claims(std::uint64_t ell)
{
    require_odd_prime(ell);
    const auto l = static_cast<std::int64_t>(ell);
    std::vector<FamilyClaim> out;
    for (std::uint64_t r = 1; r < ell; ++r)
        out.push_back({"ell2", CongruenceClaim::make(ell * ell, r * ell, 8)});
    for (std::int64_t r = 1; r < 2 * l; r += 2)
        if (jacobi(r, l) == SymbolValue::Minus)
            out.push_back({"2ell", CongruenceClaim::make(2 * ell, static_cast<std::uint64_t>(r), 8)});
    if (ell % 8 == 3 || ell % 8 == 5) {
        for (std::int64_t r = 1; r < 3 * l; ++r)
            if (jacobi(r, 3 * l) == SymbolValue::Minus)
                out.push_back({"3ell", CongruenceClaim::make(3 * ell, static_cast<std::uint64_t>(r), 8)});
    }
    const std::uint64_t kim_modulus = (ell % 8 == 1 || ell % 8 == 7) ? 8 : 4;
    for (std::int64_t r = 1; r < l; ++r)
        if (is_qnr(r, ell))
            out.push_back({"qnr", CongruenceClaim::make(ell, static_cast<std::uint64_t>(r), kim_modulus)});
    return out;
}

std::vector<VerificationReport> verify_mod8_families(const OverpartitionTable& table, std::uint64_t ell,
                                                     std::uint64_t limit)
{
    std::vector<VerificationReport> out;
    for (const auto& fc : mod8_family_claims(ell))
        out.push_back(verify_progression(table, fc.claim, limit, "families8:" + std::to_string(ell) + "/" + fc.family));
    return out;
}

VerificationReport verify_kim_mod8(const OverpartitionTable& table, std::uint64_t limit)
{
    Stopwatch sw;
    require_order(table, limit, "verify_kim_mod8");
    VerificationReport r{"kim8", std::nullopt, limit, Status::Verified, std::nullopt, table.source(), {}};
    for (std::uint64_t n = 0; n <= limit; ++n) {
        const auto p = square_predicates(n);
        if (p.is_square || p.is_twice_square)
            continue;
        if (auto res = table.residue(n, 8); res != 0) {
            r.status = Status::Counterexample;
            r.witness = Witness{n, n, res};
            break;
        }
    }
    return finish(std::move(r), sw);
}

std::uint64_t RelationClaim::modulus() const noexcept
{
    switch (tier) {
    case RelationTier::Mod4: return 4;
    case RelationTier::Mod8: return 8;
    case RelationTier::Mod16: return 16;
    case RelationTier::Mod32: return 32;
    case RelationTier::Mod64: return 64;
    case RelationTier::Mod128: return 128;
    }
    return 0;
}

bool RelationClaim::applies(std::uint64_t n) const
{
    switch (tier) {
    case RelationTier::Mod4:
    case RelationTier::Mod8:
    case RelationTier::Mod16: return true;
    case RelationTier::Mod32: return !square_predicates(n).is_odd_square;
    case RelationTier::Mod64: return n % 8 != 1 && n % 8 != 2 && n % 8 != 5;
    case RelationTier::Mod128: return n % 4 == 0;
    }
    return false;
}

std::string_view to_string(RelationTier tier)
{
    switch (tier) {
    case RelationTier::Mod4: return "mod4";
    case RelationTier::Mod8: return "mod8";
    case RelationTier::Mod16: return "mod16";
    case RelationTier::Mod32: return "mod32";
    case RelationTier::Mod64: return "mod64";
    case RelationTier::Mod128: return "mod128";
    }
    return "?";
}

RelationTier parse_tier(std::string_view text)
{
    if (text.starts_with("mod"))
        text.remove_prefix(3);
    for (auto t : {RelationTier::Mod4, RelationTier::Mod8, RelationTier::Mod16, RelationTier::Mod32, RelationTier::Mod64,
                   RelationTier::Mod128})
        if (text == std::to_string(RelationClaim{t}.modulus()))
            return t;
    throw std::invalid_argument("unknown relation tier '" + std::string(text) + "' (expected 4, 8, 16, 32, 64 or 128)");
}

VerificationReport verify_4n_relations(const OverpartitionTable& table, RelationTier tier, std::uint64_t limit)
{
    Stopwatch sw;
    require_order(table, 4 * limit, "verify_4n_relations");
    const RelationClaim rel{tier};
    const std::uint64_t m = rel.modulus();
    VerificationReport r{"thm-4n:" + std::string(to_string(tier)), std::nullopt, limit, Status::Verified, std::nullopt,
                         table.source(), {}};
    for (std::uint64_t n = 0; n <= limit; ++n) {
        if (!rel.applies(n))
            continue;
        const std::uint64_t lhs = table.residue(4 * n, m);
        std::uint64_t rhs = table.residue(n, m);
        if (rel.alternating() && n % 2 == 1)
            rhs = (m - rhs) % m;
        if (lhs != rhs) {
            r.status = Status::Counterexample;
            r.witness = Witness{n, 4 * n, (lhs + m - rhs) % m};
            break;
        }
    }
    return finish(std::move(r), sw);
}

Series dissection_mod16_rhs(std::size_t order, DissectionForm form)
{
    const auto ring = CoeffRing::mod2power(4);
    const Series A = series_substitute_power(theta_phi(order, ring), 16);
    const Series P = series_substitute_power(theta_psi(order, ring), 32);
    const Series P1 = series_substitute_power(theta_psi1(order, ring), 16);
    const Series P2 = series_substitute_power(theta_psi2(order, ring), 16);
    const Series D = series_substitute_power(theta_phi_neg(order, ring), 16);
    auto q = [](std::size_t s, const Series& x) { return series_shift(x, s); };

    const Series AA = A * A;
    const Series PP = P * P;
    const Series T = q(16, P2 * P2) + P1 * P1;
    const Series X = form == DissectionForm::Corrected ? P : PP;

    Series bracket = AA * A;
    bracket = bracket - 2 * q(1, 4 * q(16, PP * P2) + 7 * (AA * P1));
    bracket = bracket + 4 * q(2, A * T);
    bracket = bracket + 8 * q(3, P1 * T);
    bracket = bracket + 2 * q(4, A * (4 * X + 3 * (A * P)));
    bracket = bracket + 8 * q(5, A * P * P1);
    bracket = bracket + 8 * q(6, P * T);
    bracket = bracket + 4 * q(8, A * PP);
    bracket = bracket - 2 * q(9, 7 * (AA * P2) + 4 * (PP * P1));
    bracket = bracket + 8 * q(10, A * P1 * P2);
    bracket = bracket + 8 * q(11, P2 * T);
    bracket = bracket + 8 * q(12, PP * P);
    bracket = bracket + 8 * q(13, A * P * P2);

    return series_pow(A, 12) * series_invert(series_pow(D, 16)) * bracket;
}

VerificationReport verify_dissection_mod16(const OverpartitionTable& table, std::uint64_t limit, DissectionForm form)
{
    Stopwatch sw;
    if (limit < 16)
        throw std::invalid_argument("dissection check needs limit >= 16");
    require_order(table, limit, "verify_dissection_mod16");
    const Series rhs = dissection_mod16_rhs(limit, form);
    const auto w = rhs.words();
    VerificationReport r{form == DissectionForm::Corrected ? "dissection" : "dissection:as-printed",
                         std::nullopt, limit, Status::Verified, std::nullopt, table.source(), {}};
    for (std::uint64_t n = 0; n <= limit; ++n) {
        const std::uint64_t lhs = table.residue(n, 16);
        if (w[n] != lhs) {
            r.status = Status::Counterexample;
            r.witness = Witness{n, n, (w[n] + 16 - lhs) % 16};
            break;
        }
    }
    return finish(std::move(r), sw);
}

std::vector<VerificationReport> verify_dissection_vanishing(std::uint64_t limit, DissectionForm form)
{
    if (limit < 16)
        throw std::invalid_argument("dissection check needs limit >= 16");
    Stopwatch sw;
    const Series rhs = dissection_mod16_rhs(limit, form);
    std::vector<VerificationReport> out;
    for (std::uint64_t residue : {7, 14, 15}) {
        const Series part = series_dissect(rhs, 16, residue);
        VerificationReport r{"dissection:r" + std::to_string(residue), CongruenceClaim::make(16, residue, 16), limit,
                             Status::Verified, std::nullopt, "dissection-rhs", {}};
        const auto w = part.words();
        for (std::size_t n = 0; n < w.size(); ++n)
            if (w[n] != 0) {
                r.status = Status::Counterexample;
                r.witness = Witness{n, 16 * n + residue, w[n]};
                break;
            }
        out.push_back(finish(std::move(r), sw));
    }
    return out;
}

std::vector<VerificationReport> verify_combined_families(const OverpartitionTable& table, std::uint64_t limit,
                                                         unsigned kmax)
{
    std::vector<VerificationReport> out;
    std::uint64_t scale = 1;
    for (unsigned k = 0; k <= kmax; ++k, scale *= 4) {
        const std::string id = "combined:k=" + std::to_string(k);
        out.push_back(verify_progression(table, CongruenceClaim::make(16 * scale, 14 * scale, 16), limit, id));
        out.push_back(verify_progression(table, CongruenceClaim::make(72 * scale, 69 * scale, 32), limit, id));
        out.push_back(verify_progression(table, CongruenceClaim::make(8 * scale, 7 * scale, 64), limit, id));
    }
    return out;
}

std::vector<CongruenceClaim> known_progressions()
{
    return {
        CongruenceClaim{5, 2, 4},   CongruenceClaim{4, 3, 8},   CongruenceClaim{8, 7, 64},
        CongruenceClaim{48, 26, 8}, CongruenceClaim{24, 17, 16}, CongruenceClaim{72, 69, 32},
        CongruenceClaim{8, 5, 8},   CongruenceClaim{8, 6, 8},   CongruenceClaim{12, 10, 8},
        CongruenceClaim{16, 10, 8}, CongruenceClaim{20, 6, 8},  CongruenceClaim{20, 14, 8},
    };
}

std::vector<VerificationReport> verify_known_table(const OverpartitionTable& table, std::uint64_t limit)
{
    std::vector<VerificationReport> out;
    for (const auto& c : known_progressions())
        out.push_back(verify_progression(table, c, limit, "known-table"));
    return out;
}

} // namespace pbar
