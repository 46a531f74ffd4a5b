#include <doctest.h>

#include <set>

#include "pbar/theta.hpp"

using namespace pbar;

namespace {

const CoeffRing kExact = CoeffRing::exact();
const CoeffRing kMod32 = CoeffRing::mod2power(32);

std::set<std::size_t> support(const Series& s)
{
    std::set<std::size_t> out;
    for (std::size_t n = 0; n <= s.order(); ++n)
        if (s.coeff(n) != 0)
            out.insert(n);
    return out;
}

// Exponent set of sum over n in Z of q^(a n^2 + b n), by brute enumeration.
std::set<std::size_t> quadratic_exponents(long a, long b, long limit)
{
    std::set<std::size_t> out;
    for (long n = -2000; n <= 2000; ++n) {
        long e = a * n * n + b * n;
        if (e >= 0 && e <= limit)
            out.insert(static_cast<std::size_t>(e));
    }
    return out;
}

} // namespace

TEST_CASE("theta_phi")
{
    CHECK(theta_phi(9, kExact) == Series::from_coeffs(kExact, {1, 2, 0, 0, 2, 0, 0, 0, 0, 2}));
    auto p = theta_phi(20, kExact);
    CHECK(p.coeff(2) == 0);
    CHECK(p.coeff(16) == 2);
    CHECK(theta_phi(0, kExact) == Series::one(kExact, 0));
}

TEST_CASE("theta_phi_neg")
{
    CHECK(theta_phi_neg(4, kExact) == Series::from_coeffs(kExact, {1, -2, 0, 0, 2}));
    CHECK(theta_phi_neg(9, kExact).coeff(9) == -2);
    CHECK(theta_phi_neg(9, kMod32).coeff(9) == BigInt(0xFFFFFFFEu));
}

TEST_CASE("theta_psi")
{
    CHECK(theta_psi(10, kExact) == Series::from_coeffs(kExact, {1, 1, 0, 1, 0, 0, 1, 0, 0, 0, 1}));
    CHECK(theta_psi(10, kExact).coeff(2) == 0);
}

TEST_CASE("theta_psi1 and theta_psi2")
{
    CHECK(support(theta_psi1(20, kExact)) == std::set<std::size_t>{0, 3, 5, 14, 18});
    CHECK(theta_psi1(20, kExact).coeff(1) == 0);
    CHECK(support(theta_psi2(25, kExact)) == std::set<std::size_t>{0, 1, 7, 10, 22});
    CHECK(theta_psi2(25, kExact).coeff(2) == 0);

    SUBCASE("supports overlap only at zero")
    {
        auto s1 = quadratic_exponents(4, 1, 10000);
        auto s2 = quadratic_exponents(4, -3, 10000);
        CHECK(support(theta_psi1(10000, kExact)) == s1);
        CHECK(support(theta_psi2(10000, kExact)) == s2);
        std::set<std::size_t> both;
        for (auto e : s1)
            if (s2.count(e))
                both.insert(e);
        CHECK(both == std::set<std::size_t>{0});
    }
}

TEST_CASE("coefficient values stay in {0, 1, 2} up to sign")
{
    for (auto kind : {ThetaKind::Phi, ThetaKind::PhiNegQ, ThetaKind::Psi, ThetaKind::Psi1, ThetaKind::Psi2}) {
        CAPTURE(to_string(kind));
        auto s = theta(kind, 3000, kExact);
        for (std::size_t n = 0; n <= 3000; ++n) {
            const BigInt& c = s.coeff(n);
            CHECK((c == 0 || c == 1 || c == 2 || c == -2));
        }
    }
}

TEST_CASE("q-Pochhammer products")
{
    CHECK(pochhammer_qq(5, kExact) == Series::from_coeffs(kExact, {1, -1, -1, 0, 0, 1}));
    CHECK(pochhammer_negqq(5, kExact).coeff(0) == 1);
    // Distinct-part partition counts 1, 1, 1, 2, 2, 3.
    CHECK(pochhammer_negqq(5, kExact) == Series::from_coeffs(kExact, {1, 1, 1, 2, 2, 3}));

    SUBCASE("Euler pentagonal pattern to 1000")
    {
        auto e = pochhammer_qq(1000, kExact);
        std::vector<std::int64_t> expected(1001, 0);
        for (long k = -30; k <= 30; ++k) {
            long g = k * (3 * k - 1) / 2;
            if (g >= 0 && g <= 1000)
                expected[static_cast<std::size_t>(g)] = (k % 2 == 0) ? 1 : -1;
        }
        CHECK(e == Series::from_coeffs(kExact, expected));
    }
    SUBCASE("(q;q)(-q;q) = (q^2;q^2) to 1000")
    {
        auto lhs = pochhammer_qq(1000, kExact) * pochhammer_negqq(1000, kExact);
        CHECK(lhs == series_substitute_power(pochhammer_qq(1000, kExact), 2));
    }
    SUBCASE("Mod2Power matches exact")
    {
        CHECK(series_reduce_mod(pochhammer_negqq(300, kExact), 32) == pochhammer_negqq(300, kMod32));
        CHECK(series_reduce_mod(pochhammer_qq(300, kExact), 32) == pochhammer_qq(300, kMod32));
    }
}

TEST_CASE("theta dispatcher")
{
    CHECK(theta(ThetaKind::Psi2, 30, kMod32) == theta_psi2(30, kMod32));
    CHECK(theta(ThetaKind::PochhammerNegQQ, 30, kExact) == pochhammer_negqq(30, kExact));
    CHECK(to_string(ThetaKind::Psi1) == "psi1");
}

TEST_CASE("identity suite holds to order 2000")
{
    auto suite = theta_identity_suite(2000);
    CHECK(suite.size() == 5);
    for (const auto& id : suite) {
        CAPTURE(id.name);
        CHECK(id.lhs.order() == 2000);
        CHECK(id.lhs == id.rhs);
    }
}

TEST_CASE("phi(q)^2 against a lattice-point count")
{
    const long N = 300;
    std::vector<std::int64_t> r2(N + 1, 0);
    for (long a = -20; a <= 20; ++a)
        for (long b = -20; b <= 20; ++b)
            if (a * a + b * b <= N)
                ++r2[static_cast<std::size_t>(a * a + b * b)];
    CHECK(series_pow(theta_phi(N, kExact), 2) == Series::from_coeffs(kExact, r2));
}
