#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "pbar/congruence.hpp"

namespace pbar {

struct ScanHit {
    CongruenceClaim claim;
    std::uint64_t checks = 0; ///< number of progression terms tested
    bool known = false;       ///< implied by a published congruence
};

/// Moduli the scanner accepts.
inline constexpr std::uint64_t kScanModuli[] = {4, 8, 16, 32, 64, 128};

/// Every (A, B, M) with A <= max_a, B < A and M in `moduli` that has no
/// counterexample up to `limit` and was tested on at least `min_checks`
/// terms. Hits are finite evidence only, sorted by (A, B, M).
std::vector<ScanHit> scan_congruences(const OverpartitionTable& table, std::uint64_t max_a,
                                      std::span<const std::uint64_t> moduli, std::uint64_t limit,
                                      std::uint64_t min_checks);

/// True if the claim follows from a published congruence: some base claim
/// (A', B', M') with A' | A, B = B' (mod A') and M | M', or (for M <= 8) the
/// progression avoids squares and twice squares.
bool is_known_claim(const CongruenceClaim& claim);

/// Base claims with modulus A' <= max_a that is_known_claim consults.
std::vector<CongruenceClaim> published_base_claims(std::uint64_t max_a);

} // namespace pbar
