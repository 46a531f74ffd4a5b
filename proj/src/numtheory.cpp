#include "pbar/numtheory.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace pbar {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m)
{
    return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 powmod(u64 b, u64 e, u64 m)
{
    u64 r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1)
            r = mulmod(r, b, m);
        b = mulmod(b, b, m);
        e >>= 1;
    }
    return r;
}

bool strong_probable_prime(u64 n, u64 a, u64 d, unsigned s)
{
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1)
        return true;
    for (unsigned i = 1; i < s; ++i) {
        x = mulmod(x, x, n);
        if (x == n - 1)
            return true;
    }
    return false;
}

} // namespace

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % p == 0)
            return n == p;
    }
    u64 d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // The first twelve primes as bases are sufficient below 3.3e24.
    for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37})
        if (!strong_probable_prime(n, a, d, s))
            return false;
    return true;
}

SymbolValue jacobi(std::int64_t a, std::int64_t n)
{
    if (n <= 0 || n % 2 == 0)
        throw std::invalid_argument("jacobi: modulus must be odd and positive, got " + std::to_string(n));
    u64 m = static_cast<u64>(n);
    u64 x = static_cast<u64>(((a % n) + n) % n);
    int result = 1;
    while (x != 0) {
        while ((x & 1) == 0) {
            x >>= 1;
            if (m % 8 == 3 || m % 8 == 5)
                result = -result;
        }
        std::swap(x, m);
        if (x % 4 == 3 && m % 4 == 3)
            result = -result;
        x %= m;
    }
    return m == 1 ? static_cast<SymbolValue>(result) : SymbolValue::Zero;
}

bool is_qnr(std::int64_t r, std::uint64_t ell)
{
    if (ell < 3 || !is_prime(ell))
        throw std::invalid_argument("is_qnr: " + std::to_string(ell) + " is not an odd prime");
    const auto l = static_cast<std::int64_t>(ell);
    if (r % l == 0)
        throw std::invalid_argument("is_qnr: " + std::to_string(ell) + " divides " + std::to_string(r));
    return jacobi(r, l) == SymbolValue::Minus;
}

} // namespace pbar
