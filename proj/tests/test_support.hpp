#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "pbar/series.hpp"

namespace pbar::test {

// Small random series with coefficients in [-bound, bound]; a unit constant
// term when requested (+-1 for exact, odd for Mod2Power).
inline std::vector<std::int64_t> random_coeffs(std::mt19937_64& rng, std::size_t order, std::int64_t bound,
                                               bool unit_constant = false)
{
    std::uniform_int_distribution<std::int64_t> dist(-bound, bound);
    std::vector<std::int64_t> c(order + 1);
    for (auto& x : c)
        x = dist(rng);
    if (unit_constant)
        c[0] = (rng() & 1) ? 1 : -1;
    return c;
}

inline Series random_series(std::mt19937_64& rng, CoeffRing ring, std::size_t order, std::int64_t bound = 50,
                            bool unit_constant = false)
{
    return Series::from_coeffs(ring, random_coeffs(rng, order, bound, unit_constant));
}

} // namespace pbar::test
