#include <doctest.h>

#include <thread>

#include "ck_properties.hpp"
#include "pbar/squares.hpp"
#include "pbar/theta.hpp"

using namespace pbar;

TEST_CASE("positive_square_series")
{
    const auto ring = CoeffRing::exact();
    auto s = positive_square_series(10, ring);
    CHECK(s == Series::from_coeffs(ring, {0, 1, 0, 0, 1, 0, 0, 0, 0, 1, 0}));
    CHECK(s.coeff(0) == 0);
    auto phi = theta_phi(500, ring);
    CHECK(2 * positive_square_series(500, ring) + Series::one(ring, 500) == phi);
}

TEST_CASE("ck_table small values")
{
    auto t = ck_table(3, 20);
    CHECK(t.max_k() == 3);
    CHECK(t.max_n() == 20);
    CHECK(t.at(2, 2) == 1);
    CHECK(t.at(2, 5) == 2);
    CHECK(t.at(3, 6) == 3);
    CHECK(t.at(1, 16) == 1);
    CHECK(t.at(1, 15) == 0);
    for (unsigned k = 1; k <= 3; ++k) {
        CHECK(t.at(k, 0) == 0);
        for (std::size_t n = 0; n < k; ++n)
            CHECK(t.at(k, n) == 0);
    }
    CHECK(t.row(2).size() == 21);
    CHECK_THROWS_AS(t.at(0, 1), std::out_of_range);
    CHECK_THROWS_AS(t.at(4, 1), std::out_of_range);
    CHECK_THROWS_AS(t.at(1, 21), std::out_of_range);
}

TEST_CASE("ck_bruteforce")
{
    CHECK(ck_bruteforce(1, 9) == 1);
    CHECK(ck_bruteforce(2, 3) == 0);
    CHECK(ck_bruteforce(4, 4) == 1);
    CHECK(ck_bruteforce(3, 6) == 3);
    CHECK_THROWS_AS(ck_bruteforce(9, 10), std::out_of_range);
    CHECK_THROWS_AS(ck_bruteforce(2, 10001), std::out_of_range);
}

TEST_CASE("ck_table agrees with brute force for k <= 6, n <= 200")
{
    auto t = ck_table(6, 200);
    for (unsigned k = 1; k <= 6; ++k)
        for (std::uint64_t n = 0; n <= 200; ++n) {
            CAPTURE(k);
            CAPTURE(n);
            CHECK(t.at(k, n) == BigInt(static_cast<unsigned long>(ck_bruteforce(k, n))));
        }
}

TEST_CASE("large counts stay exact")
{
    // Frozen from an independent evaluation of S(q)^6.
    auto t = cached_ck_table(6, 8000);
    CHECK(t->at(6, 8000) == 16113240);
}

TEST_CASE("cached_ck_table shares instances across threads")
{
    std::shared_ptr<const RepCountTable> a, b;
    std::thread t1([&] { a = cached_ck_table(4, 700); });
    std::thread t2([&] { b = cached_ck_table(4, 700); });
    t1.join();
    t2.join();
    CHECK(a.get() == b.get());
    CHECK(cached_ck_table(4, 701).get() != a.get());
}

TEST_CASE("square_predicates")
{
    auto p9 = square_predicates(9);
    CHECK(p9.is_square);
    CHECK_FALSE(p9.is_twice_square);
    CHECK(p9.is_odd_square);
    auto p18 = square_predicates(18);
    CHECK_FALSE(p18.is_square);
    CHECK(p18.is_twice_square);
    CHECK_FALSE(p18.is_odd_square);
    auto p12 = square_predicates(12);
    CHECK_FALSE((p12.is_square || p12.is_twice_square || p12.is_odd_square));
    CHECK(square_predicates(0).is_square);
    CHECK(square_predicates(0).is_twice_square);
    CHECK_FALSE(square_predicates(0).is_odd_square);
    CHECK_FALSE(square_predicates(16).is_odd_square);

    const std::uint64_t big = 4294967295ull;
    CHECK(square_predicates(big * big).is_square);
    CHECK(square_predicates(big * big).is_odd_square);
    CHECK_FALSE(square_predicates(big * big - 1).is_square);
    CHECK(isqrt(big * big) == big);
    CHECK(isqrt(big * big - 1) == big - 1);
    CHECK(isqrt(~std::uint64_t{0}) == big);

    for (std::uint64_t n = 0; n <= 2000; ++n) {
        bool sq = false, tw = false;
        for (std::uint64_t a = 0; a * a <= n; ++a) {
            sq = sq || a * a == n;
            tw = tw || 2 * a * a == n;
        }
        CHECK(square_predicates(n).is_square == sq);
        CHECK(square_predicates(n).is_twice_square == tw);
    }
}

TEST_CASE("c_k difference and vanishing properties")
{
    for (const auto& r : test::ck_properties(2000, 5000)) {
        CAPTURE(r.name);
        CHECK(r.checked > 0);
        CHECK_FALSE(r.first_failure.has_value());
    }
}
