#include <doctest.h>

#include <random>
#include <set>
#include <stdexcept>

#include "pbar/numtheory.hpp"

using namespace pbar;

TEST_CASE("is_prime")
{
    CHECK(is_prime(7));
    CHECK(is_prime(23));
    CHECK_FALSE(is_prime(0));
    CHECK_FALSE(is_prime(1));
    CHECK(is_prime(2));
    CHECK_FALSE(is_prime(561));
    CHECK_FALSE(is_prime(3215031751ull));
    CHECK(is_prime(9223372036854775783ull));
    CHECK_FALSE(is_prime(9223372036854775807ull));
    CHECK(is_prime(18446744073709551557ull));

    std::vector<bool> sieve(20001, true);
    sieve[0] = sieve[1] = false;
    for (std::size_t i = 2; i * i <= 20000; ++i)
        if (sieve[i])
            for (std::size_t j = i * i; j <= 20000; j += i)
                sieve[j] = false;
    for (std::uint64_t n = 0; n <= 20000; ++n)
        CHECK(is_prime(n) == sieve[n]);
}

TEST_CASE("jacobi")
{
    CHECK(jacobi(3, 7) == SymbolValue::Minus);
    CHECK(jacobi(2, 7) == SymbolValue::Plus);
    CHECK(jacobi(7, 21) == SymbolValue::Zero);
    CHECK(jacobi(2, 15) == SymbolValue::Plus);
    CHECK(jacobi(7, 15) == SymbolValue::Minus);
    CHECK(jacobi(-1, 7) == SymbolValue::Minus);
    CHECK(jacobi(-1, 5) == SymbolValue::Plus);
    CHECK(jacobi(5, 1) == SymbolValue::Plus);
    CHECK(to_int(jacobi(1001, 9907)) == -1);
    CHECK_THROWS_AS(jacobi(3, 8), std::invalid_argument);
    CHECK_THROWS_AS(jacobi(3, -7), std::invalid_argument);
    CHECK_THROWS_AS(jacobi(3, 0), std::invalid_argument);
}

TEST_CASE("jacobi is multiplicative in the top argument")
{
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<std::int64_t> arg(-100000, 100000), mod(0, 4999);
    for (int i = 0; i < 5000; ++i) {
        const std::int64_t a = arg(rng), b = arg(rng), n = 2 * mod(rng) + 1;
        CHECK(to_int(jacobi(a * b, n)) == to_int(jacobi(a, n)) * to_int(jacobi(b, n)));
        CHECK(jacobi(a + n, n) == jacobi(a, n));
    }
}

TEST_CASE("Legendre symbols agree with squaring for primes below 100")
{
    for (std::int64_t ell = 3; ell < 100; ell += 2) {
        if (!is_prime(static_cast<std::uint64_t>(ell)))
            continue;
        std::set<std::int64_t> squares;
        for (std::int64_t x = 1; x < ell; ++x)
            squares.insert(x * x % ell);
        for (std::int64_t r = 1; r < ell; ++r) {
            CAPTURE(ell);
            CAPTURE(r);
            CHECK((jacobi(r, ell) == SymbolValue::Plus) == (squares.count(r) == 1));
            CHECK(is_qnr(r, static_cast<std::uint64_t>(ell)) == (squares.count(r) == 0));
            CHECK(is_qnr(r - 3 * ell, static_cast<std::uint64_t>(ell)) == (squares.count(r) == 0));
        }
        CHECK(jacobi(0, ell) == SymbolValue::Zero);
    }
}

TEST_CASE("is_qnr")
{
    CHECK(is_qnr(3, 7));
    CHECK_FALSE(is_qnr(2, 7));
    for (std::int64_t r = 1; r < 40; ++r)
        for (std::uint64_t ell : {3, 5, 7, 11, 13, 23})
            if (r % static_cast<std::int64_t>(ell) != 0)
                CHECK_FALSE(is_qnr(r * r, ell));
    CHECK_THROWS_AS(is_qnr(14, 7), std::invalid_argument);
    CHECK_THROWS_AS(is_qnr(3, 9), std::invalid_argument);
    CHECK_THROWS_AS(is_qnr(3, 2), std::invalid_argument);
}
