#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "pbar/series.hpp"

namespace pbar {

/// c_k(n) for 1 <= k <= K, 0 <= n <= N: ordered k-tuples of positive
/// integers whose squares sum to n.
class RepCountTable {
public:
    /// rows[k - 1] holds c_k(0..N).
    RepCountTable(std::size_t max_n, std::vector<std::vector<BigInt>> rows);

    unsigned max_k() const noexcept { return static_cast<unsigned>(rows_.size()); }
    std::size_t max_n() const noexcept { return max_n_; }

    /// Throws std::out_of_range outside 1 <= k <= K, n <= N.
    const BigInt& at(unsigned k, std::size_t n) const;
    std::span<const BigInt> row(unsigned k) const;

private:
    std::size_t max_n_;
    std::vector<std::vector<BigInt>> rows_;
};

/// S(q) = sum_{a >= 1} q^(a^2).
Series positive_square_series(std::size_t order, CoeffRing ring);

/// Row k is S(q)^k, built by K successive exact convolutions.
RepCountTable ck_table(unsigned max_k, std::size_t max_n);

/// Memoized ck_table keyed by (K, N); safe for concurrent callers.
std::shared_ptr<const RepCountTable> cached_ck_table(unsigned max_k, std::size_t max_n);

/// Direct recursive enumeration, k <= 8 and n <= 10^4.
std::uint64_t ck_bruteforce(unsigned k, std::uint64_t n);

struct SquarePredicates {
    bool is_square;        ///< n = a^2, a >= 0 (0 counts)
    bool is_twice_square;  ///< n = 2 a^2, a >= 0
    bool is_odd_square;    ///< n = a^2 with a odd
};

SquarePredicates square_predicates(std::uint64_t n);

std::uint64_t isqrt(std::uint64_t n);

} // namespace pbar
