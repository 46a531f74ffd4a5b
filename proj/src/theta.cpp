#include "pbar/theta.hpp"

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

namespace pbar {

namespace {

using Exponent = std::function<std::int64_t(std::int64_t)>;

// Sum of weight * q^f(n) over n = 0, +-1, +-2, ... until f leaves [0, order]
// on both sides. Each exponent is hit once per n, so repeated exponents add.
std::vector<std::int64_t> bilateral(std::size_t order, const Exponent& f, std::int64_t weight = 1)
{
    std::vector<std::int64_t> c(order + 1, 0);
    const auto limit = static_cast<std::int64_t>(order);
    c[static_cast<std::size_t>(f(0))] += weight;
    for (std::int64_t n = 1;; ++n) {
        bool any = false;
        for (std::int64_t m : {n, -n}) {
            std::int64_t e = f(m);
            if (e <= limit) {
                c[static_cast<std::size_t>(e)] += weight;
                any = true;
            }
        }
        if (!any)
            break;
    }
    return c;
}

// prod_{n=1}^{order} (1 + sign q^n), one factor at a time, updated in place
// from the top so each factor reads the previous partial product.
template <class T>
std::vector<T> pochhammer(std::size_t order, int sign, T zero, T one)
{
    std::vector<T> c(order + 1, zero);
    c[0] = one;
    for (std::size_t n = 1; n <= order; ++n)
        for (std::size_t k = order; k >= n; --k) {
            if (sign > 0)
                c[k] += c[k - n];
            else
                c[k] -= c[k - n];
        }
    return c;
}

Series pochhammer_series(std::size_t order, CoeffRing ring, int sign)
{
    if (ring.is_exact())
        return Series::from_ints(ring, pochhammer<BigInt>(order, sign, BigInt(0), BigInt(1)));
    return Series::from_words(ring, pochhammer<std::uint64_t>(order, sign, 0, 1));
}

} // namespace

std::string_view to_string(ThetaKind kind)
{
    switch (kind) {
    case ThetaKind::Phi: return "phi";
    case ThetaKind::PhiNegQ: return "phi_neg";
    case ThetaKind::Psi: return "psi";
    case ThetaKind::Psi1: return "psi1";
    case ThetaKind::Psi2: return "psi2";
    case ThetaKind::PochhammerQQ: return "qq";
    case ThetaKind::PochhammerNegQQ: return "negqq";
    }
    return "?";
}

Series theta_phi(std::size_t order, CoeffRing ring)
{
    return Series::from_coeffs(ring, bilateral(order, [](std::int64_t n) { return n * n; }));
}

Series theta_phi_neg(std::size_t order, CoeffRing ring)
{
    auto c = bilateral(order, [](std::int64_t n) { return n * n; });
    for (std::size_t i = 1; i < c.size(); i += 2)
        c[i] = -c[i];
    return Series::from_coeffs(ring, c);
}

Series theta_psi(std::size_t order, CoeffRing ring)
{
    std::vector<std::int64_t> c(order + 1, 0);
    for (std::size_t n = 0; n * (n + 1) / 2 <= order; ++n)
        c[n * (n + 1) / 2] = 1;
    return Series::from_coeffs(ring, c);
}

Series theta_psi1(std::size_t order, CoeffRing ring)
{
    return Series::from_coeffs(ring, bilateral(order, [](std::int64_t n) { return 4 * n * n + n; }));
}

Series theta_psi2(std::size_t order, CoeffRing ring)
{
    return Series::from_coeffs(ring, bilateral(order, [](std::int64_t n) { return 4 * n * n - 3 * n; }));
}

Series pochhammer_qq(std::size_t order, CoeffRing ring)
{
    return pochhammer_series(order, ring, -1);
}

Series pochhammer_negqq(std::size_t order, CoeffRing ring)
{
    return pochhammer_series(order, ring, +1);
}

Series theta(ThetaKind kind, std::size_t order, CoeffRing ring)
{
    switch (kind) {
    case ThetaKind::Phi: return theta_phi(order, ring);
    case ThetaKind::PhiNegQ: return theta_phi_neg(order, ring);
    case ThetaKind::Psi: return theta_psi(order, ring);
    case ThetaKind::Psi1: return theta_psi1(order, ring);
    case ThetaKind::Psi2: return theta_psi2(order, ring);
    case ThetaKind::PochhammerQQ: return pochhammer_qq(order, ring);
    case ThetaKind::PochhammerNegQQ: return pochhammer_negqq(order, ring);
    }
    throw std::invalid_argument("unknown theta kind");
}

std::vector<ThetaIdentity> theta_identity_suite(std::size_t order)
{
    const auto ring = CoeffRing::exact();
    const auto phi = theta_phi(order, ring);
    const auto phi_neg = theta_phi_neg(order, ring);
    const auto psi = theta_psi(order, ring);
    auto sub = series_substitute_power;

    std::vector<ThetaIdentity> suite;
    suite.push_back({"phi(q) = phi(q^4) + 2q psi(q^8)", phi,
                     sub(phi, 4) + 2 * series_shift(sub(psi, 8), 1)});
    suite.push_back({"phi(q)^2 = phi(q^2)^2 + 4q psi(q^4)^2", series_pow(phi, 2),
                     series_pow(sub(phi, 2), 2) + 4 * series_shift(series_pow(sub(psi, 4), 2), 1)});
    suite.push_back({"phi(q) phi(-q) = phi(-q^2)^2", phi * phi_neg, series_pow(sub(phi_neg, 2), 2)});
    suite.push_back({"psi(q) = psi1(q^2) + q psi2(q^2)", psi,
                     sub(theta_psi1(order, ring), 2) + series_shift(sub(theta_psi2(order, ring), 2), 1)});
    auto rhs = phi_neg * series_pow(sub(phi, 2), 2) * series_pow(sub(phi, 4), 4) * series_pow(sub(phi, 8), 8)
             * series_invert(series_pow(sub(phi_neg, 16), 16));
    suite.push_back({"1/phi(q) = phi(-q) phi(q^2)^2 phi(q^4)^4 phi(q^8)^8 / phi(-q^16)^16", series_invert(phi),
                     std::move(rhs)});
    return suite;
}

} // namespace pbar
