#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include "pbar/series.hpp"

namespace pbar {

struct ProductForm {
    friend bool operator==(const ProductForm&, const ProductForm&) = default;
};
struct PhiInversion {
    friend bool operator==(const PhiInversion&, const PhiInversion&) = default;
};
struct TwoAdic {
    unsigned max_k = 3;
    friend bool operator==(const TwoAdic&, const TwoAdic&) = default;
};
struct BruteForce {
    friend bool operator==(const BruteForce&, const BruteForce&) = default;
};

using OverpartitionSource = std::variant<ProductForm, PhiInversion, TwoAdic, BruteForce>;

/// "product", "invert", "2adic:K" or "bruteforce".
std::string to_string(const OverpartitionSource& source);
/// Inverse of to_string; throws std::invalid_argument.
OverpartitionSource parse_source(std::string_view text);

/// 1 / phi(-q).
Series overpartitions_by_inversion(std::size_t order, CoeffRing ring);

/// (-q;q)_inf / (q;q)_inf.
Series overpartitions_by_product(std::size_t order, CoeffRing ring);

/// 1 + sum_{k=1}^{K} 2^k sum_{n>=1} (-1)^(n+k) c_k(n) q^n.
///
/// Agrees with the overpartition function modulo 2^(K+1). In a Mod2Power ring
/// the width must be at least K + 1 bits; narrower rings throw
/// std::invalid_argument.
Series overpartitions_2adic(std::size_t order, unsigned max_k, CoeffRing ring);

/// Sum over ordinary partitions of n of 2^(number of distinct part sizes),
/// by direct enumeration. n <= 60.
std::uint64_t overpartitions_bruteforce(unsigned n);

Series overpartitions(const OverpartitionSource& source, std::size_t order, CoeffRing ring);

/// Number of low bits of the true overpartition count that a series built by
/// `source` in `ring` determines (64 stands for "all" in the exact ring).
unsigned valid_bits(const OverpartitionSource& source, CoeffRing ring);

} // namespace pbar
