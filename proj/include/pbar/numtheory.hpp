#pragma once

#include <cstdint>

namespace pbar {

enum class SymbolValue : int { Minus = -1, Zero = 0, Plus = 1 };

constexpr int to_int(SymbolValue v) noexcept { return static_cast<int>(v); }

/// Deterministic Miller-Rabin; exact for all 64-bit inputs.
bool is_prime(std::uint64_t n);

/// Jacobi symbol (a/n) for odd n > 0; throws std::invalid_argument otherwise.
SymbolValue jacobi(std::int64_t a, std::int64_t n);

/// r is a quadratic nonresidue modulo the odd prime ell. Requires ell not
/// dividing r; throws std::invalid_argument on a violated precondition.
bool is_qnr(std::int64_t r, std::uint64_t ell);

} // namespace pbar
