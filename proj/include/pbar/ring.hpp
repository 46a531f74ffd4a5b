#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace pbar {

using BigInt = mpz_class;

enum class RingKind { Exact, Mod2Power };

/// Coefficient ring of a truncated series: arbitrary-precision integers, or
/// integers modulo 2^m with 1 <= m <= 64 held in machine words.
class CoeffRing {
public:
    static constexpr unsigned kDefaultBits = 32;

    static CoeffRing exact() noexcept { return CoeffRing(RingKind::Exact, 0); }
    /// Throws std::invalid_argument unless 1 <= bits <= 64.
    static CoeffRing mod2power(unsigned bits = kDefaultBits);

    RingKind kind() const noexcept { return kind_; }
    bool is_exact() const noexcept { return kind_ == RingKind::Exact; }
    /// Width m of a Mod2Power ring; 0 for the exact ring.
    unsigned bits() const noexcept { return bits_; }
    /// 2^m - 1; all ones for the exact ring (unused there).
    std::uint64_t mask() const noexcept;

    // Canonical representative in [0, 2^m). Only meaningful for Mod2Power.
    std::uint64_t reduce(const BigInt& v) const;
    std::uint64_t reduce(std::int64_t v) const noexcept { return static_cast<std::uint64_t>(v) & mask(); }

    std::string name() const;

    friend bool operator==(const CoeffRing&, const CoeffRing&) = default;

private:
    CoeffRing(RingKind kind, unsigned bits) noexcept : kind_(kind), bits_(bits) {}

    RingKind kind_;
    unsigned bits_;
};

// Residue of v modulo 2^bits, bits in [1, 64].
std::uint64_t low_bits(const BigInt& v, unsigned bits);

BigInt to_bigint(std::uint64_t v);

} // namespace pbar
