#include "pbar/scan.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "pbar/numtheory.hpp"

namespace pbar {

namespace {

bool hits_residue(std::uint64_t A, std::uint64_t B, std::uint64_t scale)
{
    for (std::uint64_t x = 0; x < A; ++x)
        if ((scale * (x * x % A)) % A == B)
            return true;
    return false;
}

} // namespace

std::vector<CongruenceClaim> published_base_claims(std::uint64_t max_a)
{
    std::vector<CongruenceClaim> base = known_progressions();
    base.push_back({16, 14, 16});
    for (std::uint64_t scale = 4; 8 * scale <= max_a; scale *= 4) {
        base.push_back({16 * scale, 14 * scale, 16});
        base.push_back({72 * scale, 69 * scale, 32});
        base.push_back({8 * scale, 7 * scale, 64});
    }
    for (std::uint64_t ell = 3; ell <= max_a; ell += 2) {
        if (!is_prime(ell))
            continue;
        for (const auto& fc : mod8_family_claims(ell))
            base.push_back(fc.claim);
        if (ell % 8 == 7)
            for (std::uint64_t r = 1; r < ell; ++r)
                base.push_back({ell * ell, r * ell, 16});
    }
    std::erase_if(base, [&](const CongruenceClaim& c) { return c.A > max_a; });
    std::sort(base.begin(), base.end());
    base.erase(std::unique(base.begin(), base.end()), base.end());
    return base;
}

bool is_known_claim(const CongruenceClaim& claim)
{
    for (const auto& b : published_base_claims(claim.A))
        if (claim.A % b.A == 0 && claim.B % b.A == b.B && b.M % claim.M == 0)
            return true;
    // An+B contains a square iff B is a square mod A, and likewise for 2x^2.
    return claim.M <= 8 && !hits_residue(claim.A, claim.B, 1) && !hits_residue(claim.A, claim.B, 2);
}

std::vector<ScanHit> scan_congruences(const OverpartitionTable& table, std::uint64_t max_a,
                                      std::span<const std::uint64_t> moduli, std::uint64_t limit,
                                      std::uint64_t min_checks)
{
    std::vector<std::uint64_t> ms(moduli.begin(), moduli.end());
    std::sort(ms.begin(), ms.end());
    ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
    for (auto m : ms) {
        if (std::find(std::begin(kScanModuli), std::end(kScanModuli), m) == std::end(kScanModuli))
            throw std::invalid_argument("scan modulus " + std::to_string(m) + " is not one of 4, 8, 16, 32, 64, 128");
        if (*exact_log2(m) > table.valid_bits())
            throw std::invalid_argument("table cannot resolve residues mod " + std::to_string(m));
    }
    if (ms.empty())
        return {};
    if (table.order() < limit)
        throw std::invalid_argument("scan limit exceeds overpartition table order");
    const unsigned needed = *exact_log2(ms.front());

    std::vector<ScanHit> hits;
    for (std::uint64_t A = 1; A <= max_a; ++A) {
        for (std::uint64_t B = 0; B < A && B <= limit; ++B) {
            const std::uint64_t checks = (limit - B) / A + 1;
            if (checks < std::max<std::uint64_t>(min_checks, 1))
                continue;
            // All moduli at once: the claim holds mod 2^j iff j <= min v2.
            unsigned v = table.valid_bits();
            for (std::uint64_t idx = B; idx <= limit && v >= needed; idx += A)
                v = std::min(v, table.valuation(idx));
            for (auto m : ms) {
                if (*exact_log2(m) > v)
                    break;
                CongruenceClaim c{A, B, m};
                hits.push_back({c, checks, is_known_claim(c)});
            }
        }
    }
    return hits;
}

} // namespace pbar
