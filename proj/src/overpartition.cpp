#include "pbar/overpartition.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>
#include <vector>

#include "pbar/squares.hpp"
#include "pbar/theta.hpp"

namespace pbar {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// Partitions of `remaining` into parts <= max_part, tracking how many distinct
// sizes have been used so far.
std::uint64_t enumerate(unsigned remaining, unsigned max_part, unsigned distinct)
{
    if (remaining == 0)
        return std::uint64_t{1} << distinct;
    std::uint64_t total = 0;
    for (unsigned part = std::min(remaining, max_part); part >= 1; --part)
        for (unsigned copies = 1; copies * part <= remaining; ++copies)
            total += enumerate(remaining - copies * part, part - 1, distinct + 1);
    return total;
}

} // namespace

std::string to_string(const OverpartitionSource& source)
{
    return std::visit(overloaded{
                          [](const ProductForm&) { return std::string("product"); },
                          [](const PhiInversion&) { return std::string("invert"); },
                          [](const TwoAdic& t) { return "2adic:" + std::to_string(t.max_k); },
                          [](const BruteForce&) { return std::string("bruteforce"); },
                      },
                      source);
}

OverpartitionSource parse_source(std::string_view text)
{
    if (text == "product")
        return ProductForm{};
    if (text == "invert")
        return PhiInversion{};
    if (text == "bruteforce")
        return BruteForce{};
    constexpr std::string_view prefix = "2adic:";
    if (text.starts_with(prefix)) {
        auto digits = text.substr(prefix.size());
        unsigned k = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
        if (ec == std::errc() && ptr == digits.data() + digits.size() && k >= 1)
            return TwoAdic{k};
    }
    throw std::invalid_argument("unknown source '" + std::string(text) + "' (expected product, invert, 2adic:K or bruteforce)");
}

Series overpartitions_by_inversion(std::size_t order, CoeffRing ring)
{
    return series_invert(theta_phi_neg(order, ring));
}

Series overpartitions_by_product(std::size_t order, CoeffRing ring)
{
    return series_mul(pochhammer_negqq(order, ring), series_invert(pochhammer_qq(order, ring)));
}

Series overpartitions_2adic(std::size_t order, unsigned max_k, CoeffRing ring)
{
    if (max_k < 1)
        throw std::invalid_argument("2-adic expansion needs K >= 1");
    if (!ring.is_exact() && ring.bits() < max_k + 1)
        throw std::invalid_argument("2-adic expansion to K=" + std::to_string(max_k) + " needs at least "
                                    + std::to_string(max_k + 1) + " bits, ring is " + ring.name());
    const auto table = cached_ck_table(max_k, order);
    std::vector<BigInt> c(order + 1);
    c[0] = 1;
    for (unsigned k = 1; k <= max_k; ++k) {
        auto row = table->row(k);
        BigInt weight;
        mpz_ui_pow_ui(weight.get_mpz_t(), 2, k);
        for (std::size_t n = 1; n <= order; ++n) {
            if (row[n] == 0)
                continue;
            if ((n + k) % 2 == 0)
                c[n] += weight * row[n];
            else
                c[n] -= weight * row[n];
        }
    }
    return Series::from_ints(ring, std::move(c));
}

std::uint64_t overpartitions_bruteforce(unsigned n)
{
    if (n > 60)
        throw std::out_of_range("overpartitions_bruteforce is limited to n <= 60");
    return enumerate(n, n, 0);
}

Series overpartitions(const OverpartitionSource& source, std::size_t order, CoeffRing ring)
{
    return std::visit(overloaded{
                          [&](const ProductForm&) { return overpartitions_by_product(order, ring); },
                          [&](const PhiInversion&) { return overpartitions_by_inversion(order, ring); },
                          [&](const TwoAdic& t) { return overpartitions_2adic(order, t.max_k, ring); },
                          [&](const BruteForce&) {
                              if (order > 60)
                                  throw std::out_of_range("bruteforce source is limited to order 60");
                              std::vector<std::int64_t> c(order + 1);
                              for (std::size_t n = 0; n <= order; ++n)
                                  c[n] = static_cast<std::int64_t>(overpartitions_bruteforce(static_cast<unsigned>(n)));
                              return Series::from_coeffs(ring, c);
                          },
                      },
                      source);
}

unsigned valid_bits(const OverpartitionSource& source, CoeffRing ring)
{
    unsigned bits = ring.is_exact() ? 64 : ring.bits();
    if (const auto* t = std::get_if<TwoAdic>(&source))
        bits = std::min(bits, t->max_k + 1);
    return bits;
}

} // namespace pbar
