#include "pbar/squares.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <utility>

namespace pbar {

RepCountTable::RepCountTable(std::size_t max_n, std::vector<std::vector<BigInt>> rows)
    : max_n_(max_n), rows_(std::move(rows))
{
    for (const auto& r : rows_)
        if (r.size() != max_n_ + 1)
            throw std::invalid_argument("RepCountTable: row length must be N + 1");
}

const BigInt& RepCountTable::at(unsigned k, std::size_t n) const
{
    if (k < 1 || k > max_k() || n > max_n_)
        throw std::out_of_range("c_" + std::to_string(k) + "(" + std::to_string(n) + ") outside table (K="
                                + std::to_string(max_k()) + ", N=" + std::to_string(max_n_) + ")");
    return rows_[k - 1][n];
}

std::span<const BigInt> RepCountTable::row(unsigned k) const
{
    if (k < 1 || k > max_k())
        throw std::out_of_range("row c_" + std::to_string(k) + " outside table");
    return rows_[k - 1];
}

Series positive_square_series(std::size_t order, CoeffRing ring)
{
    std::vector<std::int64_t> c(order + 1, 0);
    for (std::size_t a = 1; a * a <= order; ++a)
        c[a * a] = 1;
    return Series::from_coeffs(ring, c);
}

RepCountTable ck_table(unsigned max_k, std::size_t max_n)
{
    if (max_k < 1)
        throw std::invalid_argument("ck_table: K must be at least 1");
    const auto ring = CoeffRing::exact();
    const Series s = positive_square_series(max_n, ring);
    std::vector<std::vector<BigInt>> rows;
    rows.reserve(max_k);
    Series power = s;
    for (unsigned k = 1; k <= max_k; ++k) {
        if (k > 1)
            power = series_mul(power, s);
        auto c = power.ints();
        rows.emplace_back(c.begin(), c.end());
    }
    return RepCountTable(max_n, std::move(rows));
}

std::shared_ptr<const RepCountTable> cached_ck_table(unsigned max_k, std::size_t max_n)
{
    static std::shared_mutex mutex;
    static std::map<std::pair<unsigned, std::size_t>, std::shared_ptr<const RepCountTable>> cache;

    const auto key = std::make_pair(max_k, max_n);
    {
        std::shared_lock lock(mutex);
        if (auto it = cache.find(key); it != cache.end())
            return it->second;
    }
    std::unique_lock lock(mutex);
    auto& slot = cache[key];
    if (!slot)
        slot = std::make_shared<const RepCountTable>(ck_table(max_k, max_n));
    return slot;
}

namespace {

std::uint64_t count_tuples(unsigned k, std::uint64_t n)
{
    if (k == 0)
        return n == 0 ? 1 : 0;
    if (n < k)
        return 0;
    std::uint64_t total = 0;
    for (std::uint64_t a = 1; a * a + (k - 1) <= n; ++a)
        total += count_tuples(k - 1, n - a * a);
    return total;
}

} // namespace

std::uint64_t ck_bruteforce(unsigned k, std::uint64_t n)
{
    if (k > 8 || n > 10'000)
        throw std::out_of_range("ck_bruteforce is limited to k <= 8, n <= 10^4");
    return count_tuples(k, n);
}

std::uint64_t isqrt(std::uint64_t n)
{
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
    while (r > 0 && r > n / r)
        --r;
    while ((r + 1) <= n / (r + 1))
        ++r;
    return r;
}

SquarePredicates square_predicates(std::uint64_t n)
{
    const std::uint64_t r = isqrt(n);
    const bool square = r * r == n;
    bool twice = false;
    if (n % 2 == 0) {
        const std::uint64_t h = isqrt(n / 2);
        twice = h * h == n / 2;
    }
    return {square, twice, square && r % 2 == 1};
}

} // namespace pbar
