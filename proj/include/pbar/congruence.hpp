#pragma once

#include <chrono>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pbar/overpartition.hpp"
#include "pbar/series.hpp"

namespace pbar {

/// p(A n + B) = 0 (mod M) for all n >= 0, M a power of two.
struct CongruenceClaim {
    std::uint64_t A = 1;
    std::uint64_t B = 0;
    std::uint64_t M = 2;

    /// Throws std::invalid_argument unless A >= 1, B < A and M = 2^j, j >= 1.
    static CongruenceClaim make(std::uint64_t A, std::uint64_t B, std::uint64_t M);

    friend auto operator<=>(const CongruenceClaim&, const CongruenceClaim&) = default;
};

std::string to_string(const CongruenceClaim& c);

enum class Status { Verified, Counterexample, Skipped };

std::string_view to_string(Status s);

struct Witness {
    std::uint64_t n = 0;      ///< progression / relation parameter
    std::uint64_t index = 0;  ///< argument of the offending coefficient
    std::uint64_t residue = 0; ///< nonzero residue mod M that broke the claim
    friend bool operator==(const Witness&, const Witness&) = default;
};

struct VerificationReport {
    std::string id;
    std::optional<CongruenceClaim> claim;
    std::uint64_t range = 0; ///< largest argument covered
    Status status = Status::Skipped;
    std::optional<Witness> witness;
    std::string source;
    std::chrono::nanoseconds elapsed{0};
};

/// Equal id, claim, range, status and witness; source and timing ignored.
bool same_outcome(const VerificationReport& a, const VerificationReport& b);

/// Overpartition coefficients p(0..N) as the verifiers see them: a series
/// plus how many low bits of each coefficient it pins down.
class OverpartitionTable {
public:
    OverpartitionTable(Series series, std::string source, unsigned valid_bits);

    /// Default verification table: 1/phi(-q) in Mod2Power(32).
    static OverpartitionTable build(const OverpartitionSource& source, std::size_t order,
                                    CoeffRing ring = CoeffRing::mod2power());

    std::size_t order() const noexcept { return series_.order(); }
    unsigned valid_bits() const noexcept { return valid_bits_; }
    const std::string& source() const noexcept { return source_; }
    const Series& series() const noexcept { return series_; }

    /// p(n) mod M. Throws std::invalid_argument if M is not a power of two the
    /// table can resolve, std::out_of_range if n > order().
    std::uint64_t residue(std::size_t n, std::uint64_t modulus) const;

    /// min(v2(p(n)), valid_bits()).
    unsigned valuation(std::size_t n) const;

private:
    Series series_;
    std::string source_;
    unsigned valid_bits_;
};

/// Checks every n with A n + B <= limit; stops at the first counterexample.
/// B > limit gives Skipped.
VerificationReport verify_progression(const OverpartitionTable& table, const CongruenceClaim& claim, std::uint64_t limit,
                                      std::string id = "progression");

/// One report per class r*ell mod ell^2, r = 1..ell-1. M = 16 needs
/// ell = -1 (mod 8); M = 8 holds for every odd prime. Requires limit >= ell^2.
std::vector<VerificationReport> verify_ell_family(const OverpartitionTable& table, std::uint64_t ell, std::uint64_t modulus,
                                                  std::uint64_t limit);

/// The mod-8 consequences of the square / twice-square theorem for an odd
/// prime ell, plus the quadratic-nonresidue dichotomy:
///   (ell^2, r ell, 8)      r = 1..ell-1
///   (2 ell, r, 8)          odd r < 2 ell with (r/ell) = -1
///   (3 ell, r, 8)          ell = +-3 (mod 8), r < 3 ell with (r/3ell) = -1
///   (ell, r, 8 or 4)       r a nonresidue; 8 iff ell = +-1 (mod 8)
struct FamilyClaim {
    std::string family; ///< "ell2", "2ell", "3ell" or "qnr"
    CongruenceClaim claim;
};
std::vector<FamilyClaim> mod8_family_claims(std::uint64_t ell);

std::vector<VerificationReport> verify_mod8_families(const OverpartitionTable& table, std::uint64_t ell,
                                                     std::uint64_t limit);

/// p(n) = 0 (mod 8) whenever n is neither a square nor twice a square.
VerificationReport verify_kim_mod8(const OverpartitionTable& table, std::uint64_t limit);

enum class RelationTier { Mod4, Mod8, Mod16, Mod32, Mod64, Mod128 };

/// p(4n) = s(n) p(n) (mod M) on the tier's filter, with s(n) = (-1)^n except
/// for the mod-4 tier where s = 1.
struct RelationClaim {
    RelationTier tier;

    std::uint64_t modulus() const noexcept;
    bool applies(std::uint64_t n) const;
    bool alternating() const noexcept { return tier != RelationTier::Mod4; }
};

std::string_view to_string(RelationTier tier);
/// Accepts "4".."128" or "mod4".."mod128".
RelationTier parse_tier(std::string_view text);

/// Needs a table of order >= 4 * limit.
VerificationReport verify_4n_relations(const OverpartitionTable& table, RelationTier tier, std::uint64_t limit);

enum class DissectionForm {
    Corrected, ///< q^4 term 2 phi (4 psi + 3 phi psi), as re-derived
    AsPrinted, ///< q^4 term 2 phi (4 psi^2 + 3 phi psi)
};

/// 16-dissection of the overpartition generating function modulo 16, built
/// in Mod2Power(4) from phi(q^16), psi(q^32), psi1(q^16), psi2(q^16) and
/// phi(-q^16).
Series dissection_mod16_rhs(std::size_t order, DissectionForm form = DissectionForm::Corrected);

/// RHS = sum p(n) q^n (mod 16) coefficientwise for n <= limit.
VerificationReport verify_dissection_mod16(const OverpartitionTable& table, std::uint64_t limit,
                                           DissectionForm form = DissectionForm::Corrected);

/// Residues 7, 14 and 15 modulo 16 of the RHS vanish mod 16.
std::vector<VerificationReport> verify_dissection_vanishing(std::uint64_t limit,
                                                            DissectionForm form = DissectionForm::Corrected);

/// (4^k 16, 4^k 14, 16), (4^k 72, 4^k 69, 32), (4^k 8, 4^k 7, 64) for k = 0..kmax.
std::vector<VerificationReport> verify_combined_families(const OverpartitionTable& table, std::uint64_t limit,
                                                         unsigned kmax);

/// Twelve previously published progressions: (5,2,4), (4,3,8), (8,7,64),
/// (48,26,8), (24,17,16), (72,69,32) and six mod-8 special cases.
std::vector<CongruenceClaim> known_progressions();

std::vector<VerificationReport> verify_known_table(const OverpartitionTable& table, std::uint64_t limit);

/// Integer log2 of a power of two, or nullopt.
std::optional<unsigned> exact_log2(std::uint64_t m);

} // namespace pbar
