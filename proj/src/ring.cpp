#include "pbar/ring.hpp"

#include <stdexcept>

namespace pbar {

CoeffRing CoeffRing::mod2power(unsigned bits)
{
    if (bits < 1 || bits > 64)
        throw std::invalid_argument("Mod2Power width must be in [1, 64], got " + std::to_string(bits));
    return CoeffRing(RingKind::Mod2Power, bits);
}

std::uint64_t CoeffRing::mask() const noexcept
{
    if (kind_ == RingKind::Exact || bits_ == 64)
        return ~std::uint64_t{0};
    return (std::uint64_t{1} << bits_) - 1;
}

std::uint64_t CoeffRing::reduce(const BigInt& v) const
{
    return low_bits(v, is_exact() ? 64 : bits_);
}

std::string CoeffRing::name() const
{
    return is_exact() ? std::string("exact") : "mod 2^" + std::to_string(bits_);
}

std::uint64_t low_bits(const BigInt& v, unsigned bits)
{
    // mpz_fdiv_r_2exp yields the non-negative residue even for negative v.
    mpz_class r;
    mpz_fdiv_r_2exp(r.get_mpz_t(), v.get_mpz_t(), bits);
    std::uint64_t out = 0;
    mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, r.get_mpz_t());
    return out;
}

BigInt to_bigint(std::uint64_t v)
{
    BigInt r;
    mpz_import(r.get_mpz_t(), 1, -1, sizeof(v), 0, 0, &v);
    return r;
}

} // namespace pbar
