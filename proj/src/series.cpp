#include "pbar/series.hpp"

#include <algorithm>
#include <ostream>
#include <string>
#include <utility>

namespace pbar {

namespace {

void require_same_ring(const Series& a, const Series& b, const char* op)
{
    if (a.ring() != b.ring())
        throw RingMismatch(std::string(op) + ": ring mismatch (" + a.ring().name() + " vs " + b.ring().name() + ")");
}

template <class T>
std::vector<std::size_t> support(std::span<const T> c, std::size_t upto)
{
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i <= upto; ++i)
        if (c[i] != 0)
            idx.push_back(i);
    return idx;
}

std::vector<std::size_t> support_of(const Series& s, std::size_t upto)
{
    return s.ring().is_exact() ? support(s.ints(), upto) : support(s.words(), upto);
}

// acc += c * x for a small signed multiplier c.
void addmul_small(BigInt& acc, const BigInt& x, const BigInt& c)
{
    if (c.fits_slong_p()) {
        long v = c.get_si();
        if (v >= 0)
            mpz_addmul_ui(acc.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(v));
        else
            mpz_submul_ui(acc.get_mpz_t(), x.get_mpz_t(), -static_cast<unsigned long>(v));
    } else {
        mpz_addmul(acc.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    }
}

// Inverse of an odd word modulo 2^64 (Newton: each step doubles correct bits).
std::uint64_t inverse_odd(std::uint64_t a)
{
    std::uint64_t x = a;
    for (int i = 0; i < 5; ++i)
        x *= 2 - a * x;
    return x;
}

template <class Fn>
Series coefficientwise(const Series& a, const Series& b, Fn&& fn, const char* op)
{
    require_same_ring(a, b, op);
    std::size_t order = std::min(a.order(), b.order());
    if (a.ring().is_exact()) {
        auto x = a.ints();
        auto y = b.ints();
        Series::Ints c(order + 1);
        for (std::size_t i = 0; i <= order; ++i)
            c[i] = fn(x[i], y[i]);
        return Series::from_ints(a.ring(), std::move(c));
    }
    auto x = a.words();
    auto y = b.words();
    Series::Words c(order + 1);
    for (std::size_t i = 0; i <= order; ++i)
        c[i] = fn(x[i], y[i]);
    return Series::from_words(a.ring(), std::move(c));
}

} // namespace

Series::Series(CoeffRing ring, Ints coeffs) : ring_(ring), order_(coeffs.size() - 1), coeffs_(std::move(coeffs)) {}

Series::Series(CoeffRing ring, Words coeffs) : ring_(ring), order_(coeffs.size() - 1), coeffs_(std::move(coeffs)) {}

Series Series::zero(CoeffRing ring, std::size_t order)
{
    if (ring.is_exact())
        return Series(ring, Ints(order + 1));
    return Series(ring, Words(order + 1, 0));
}

Series Series::one(CoeffRing ring, std::size_t order)
{
    return monomial(ring, order, 0, 1);
}

Series Series::monomial(CoeffRing ring, std::size_t order, std::size_t exponent, std::int64_t c)
{
    if (ring.is_exact()) {
        Ints v(order + 1);
        if (exponent <= order)
            v[exponent] = static_cast<long>(c);
        return Series(ring, std::move(v));
    }
    Words v(order + 1, 0);
    if (exponent <= order)
        v[exponent] = ring.reduce(c);
    return Series(ring, std::move(v));
}

Series Series::from_coeffs(CoeffRing ring, std::span<const std::int64_t> coeffs)
{
    if (coeffs.empty())
        throw std::invalid_argument("series needs at least one coefficient");
    if (ring.is_exact()) {
        Ints v(coeffs.size());
        for (std::size_t i = 0; i < coeffs.size(); ++i)
            v[i] = static_cast<long>(coeffs[i]);
        return Series(ring, std::move(v));
    }
    Words v(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        v[i] = ring.reduce(coeffs[i]);
    return Series(ring, std::move(v));
}

Series Series::from_coeffs(CoeffRing ring, std::initializer_list<std::int64_t> coeffs)
{
    return from_coeffs(ring, std::span<const std::int64_t>(coeffs.begin(), coeffs.size()));
}

Series Series::from_ints(CoeffRing ring, Ints coeffs)
{
    if (coeffs.empty())
        throw std::invalid_argument("series needs at least one coefficient");
    if (ring.is_exact())
        return Series(ring, std::move(coeffs));
    Words v(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        v[i] = ring.reduce(coeffs[i]);
    return Series(ring, std::move(v));
}

Series Series::from_words(CoeffRing ring, Words coeffs)
{
    if (coeffs.empty())
        throw std::invalid_argument("series needs at least one coefficient");
    if (ring.is_exact()) {
        Ints v(coeffs.size());
        for (std::size_t i = 0; i < coeffs.size(); ++i)
            v[i] = to_bigint(coeffs[i]);
        return Series(ring, std::move(v));
    }
    const std::uint64_t mask = ring.mask();
    for (auto& c : coeffs)
        c &= mask;
    return Series(ring, std::move(coeffs));
}

BigInt Series::coeff(std::size_t n) const
{
    if (n > order_)
        throw std::out_of_range("coefficient q^" + std::to_string(n) + " is beyond truncation order " + std::to_string(order_));
    if (ring_.is_exact())
        return std::get<Ints>(coeffs_)[n];
    return to_bigint(std::get<Words>(coeffs_)[n]);
}

std::uint64_t Series::coeff_mod2(std::size_t n, unsigned bits) const
{
    if (n > order_)
        throw std::out_of_range("coefficient q^" + std::to_string(n) + " is beyond truncation order " + std::to_string(order_));
    if (bits < 1 || bits > 64)
        throw std::invalid_argument("bit width must be in [1, 64]");
    if (ring_.is_exact())
        return low_bits(std::get<Ints>(coeffs_)[n], bits);
    if (bits > ring_.bits())
        throw std::invalid_argument("cannot read mod 2^" + std::to_string(bits) + " from a " + ring_.name() + " series");
    std::uint64_t w = std::get<Words>(coeffs_)[n];
    return bits == 64 ? w : (w & ((std::uint64_t{1} << bits) - 1));
}

std::span<const std::uint64_t> Series::words() const
{
    if (ring_.is_exact())
        throw std::logic_error("words() on an exact series");
    return std::get<Words>(coeffs_);
}

std::span<const BigInt> Series::ints() const
{
    if (!ring_.is_exact())
        throw std::logic_error("ints() on a " + ring_.name() + " series");
    return std::get<Ints>(coeffs_);
}

bool Series::is_zero() const
{
    return std::visit([](const auto& v) { return std::all_of(v.begin(), v.end(), [](const auto& x) { return x == 0; }); },
                      coeffs_);
}

bool operator==(const Series& a, const Series& b)
{
    return a.ring_ == b.ring_ && a.coeffs_ == b.coeffs_;
}

Series series_add(const Series& a, const Series& b)
{
    return coefficientwise(a, b, [](const auto& x, const auto& y) -> std::decay_t<decltype(x)> { return x + y; }, "series_add");
}

Series series_sub(const Series& a, const Series& b)
{
    return coefficientwise(a, b, [](const auto& x, const auto& y) -> std::decay_t<decltype(x)> { return x - y; }, "series_sub");
}

Series series_negate(const Series& a)
{
    return series_scale(a, -1);
}

Series series_scale(const Series& a, std::int64_t c)
{
    if (a.ring().is_exact()) {
        auto x = a.ints();
        Series::Ints v(x.size());
        BigInt m = static_cast<long>(c);
        for (std::size_t i = 0; i < x.size(); ++i)
            v[i] = x[i] * m;
        return Series::from_ints(a.ring(), std::move(v));
    }
    auto x = a.words();
    const auto m = static_cast<std::uint64_t>(c);
    Series::Words v(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        v[i] = x[i] * m;
    return Series::from_words(a.ring(), std::move(v));
}

Series series_shift(const Series& a, std::size_t s)
{
    const std::size_t n = a.order();
    if (a.ring().is_exact()) {
        auto x = a.ints();
        Series::Ints v(n + 1);
        for (std::size_t i = s; i <= n; ++i)
            v[i] = x[i - s];
        return Series::from_ints(a.ring(), std::move(v));
    }
    auto x = a.words();
    Series::Words v(n + 1, 0);
    for (std::size_t i = s; i <= n; ++i)
        v[i] = x[i - s];
    return Series::from_words(a.ring(), std::move(v));
}

Series series_mul(const Series& a, const Series& b)
{
    require_same_ring(a, b, "series_mul");
    const std::size_t order = std::min(a.order(), b.order());

    // Drive the outer loop from the sparser factor; theta series and
    // Pochhammer factors are mostly zeros.
    auto sa = support_of(a, order);
    auto sb = support_of(b, order);
    const bool swap = sb.size() < sa.size();
    const Series& outer = swap ? b : a;
    const Series& inner = swap ? a : b;
    const auto& idx = swap ? sb : sa;

    if (a.ring().is_exact()) {
        auto x = outer.ints();
        auto y = inner.ints();
        Series::Ints c(order + 1);
        for (std::size_t i : idx)
            for (std::size_t j = 0; i + j <= order; ++j)
                if (y[j] != 0)
                    addmul_small(c[i + j], y[j], x[i]);
        return Series::from_ints(a.ring(), std::move(c));
    }
    auto x = outer.words();
    auto y = inner.words();
    Series::Words c(order + 1, 0);
    for (std::size_t i : idx) {
        const std::uint64_t xi = x[i];
        for (std::size_t j = 0; i + j <= order; ++j)
            c[i + j] += xi * y[j];
    }
    return Series::from_words(a.ring(), std::move(c));
}

Series series_pow(const Series& a, std::uint64_t e)
{
    Series result = Series::one(a.ring(), a.order());
    Series base = a;
    while (e > 0) {
        if (e & 1)
            result = series_mul(result, base);
        e >>= 1;
        if (e > 0)
            base = series_mul(base, base);
    }
    return result;
}

Series series_invert(const Series& a)
{
    const std::size_t order = a.order();
    auto idx = support_of(a, order);
    if (a.ring().is_exact()) {
        auto x = a.ints();
        if (x[0] != 1 && x[0] != -1)
            throw std::domain_error("series_invert: constant term " + x[0].get_str() + " is not a unit in the exact ring");
        const bool negative = x[0] < 0;
        Series::Ints b(order + 1);
        b[0] = x[0];
        BigInt acc;
        for (std::size_t n = 1; n <= order; ++n) {
            acc = 0;
            for (std::size_t i : idx) {
                if (i == 0)
                    continue;
                if (i > n)
                    break;
                addmul_small(acc, b[n - i], x[i]);
            }
            // b(n) = -a(0)^{-1} acc, and a(0)^{-1} = a(0) for +-1.
            b[n] = negative ? acc : BigInt(-acc);
        }
        return Series::from_ints(a.ring(), std::move(b));
    }
    auto x = a.words();
    if ((x[0] & 1) == 0)
        throw std::domain_error("series_invert: constant term " + std::to_string(x[0]) + " is even in " + a.ring().name());
    const std::uint64_t inv0 = inverse_odd(x[0]);
    Series::Words b(order + 1, 0);
    b[0] = inv0;
    for (std::size_t n = 1; n <= order; ++n) {
        std::uint64_t acc = 0;
        for (std::size_t i : idx) {
            if (i == 0)
                continue;
            if (i > n)
                break;
            acc += x[i] * b[n - i];
        }
        b[n] = (0 - inv0) * acc;
    }
    return Series::from_words(a.ring(), std::move(b));
}

Series series_substitute_power(const Series& a, std::size_t t)
{
    if (t == 0)
        throw std::invalid_argument("series_substitute_power: t must be positive");
    const std::size_t n = a.order();
    if (a.ring().is_exact()) {
        auto x = a.ints();
        Series::Ints v(n + 1);
        for (std::size_t i = 0; i * t <= n; ++i)
            v[i * t] = x[i];
        return Series::from_ints(a.ring(), std::move(v));
    }
    auto x = a.words();
    Series::Words v(n + 1, 0);
    for (std::size_t i = 0; i * t <= n; ++i)
        v[i * t] = x[i];
    return Series::from_words(a.ring(), std::move(v));
}

Series series_dissect(const Series& a, std::size_t t, std::size_t r)
{
    if (t == 0)
        throw std::invalid_argument("series_dissect: t must be positive");
    if (r >= t)
        throw std::invalid_argument("series_dissect: residue must satisfy 0 <= r < t");
    if (r > a.order())
        throw std::invalid_argument("series_dissect: residue " + std::to_string(r) + " exceeds truncation order "
                                    + std::to_string(a.order()));
    const std::size_t order = (a.order() - r) / t;
    if (a.ring().is_exact()) {
        auto x = a.ints();
        Series::Ints v(order + 1);
        for (std::size_t i = 0; i <= order; ++i)
            v[i] = x[t * i + r];
        return Series::from_ints(a.ring(), std::move(v));
    }
    auto x = a.words();
    Series::Words v(order + 1);
    for (std::size_t i = 0; i <= order; ++i)
        v[i] = x[t * i + r];
    return Series::from_words(a.ring(), std::move(v));
}

Series series_reduce_mod(const Series& a, unsigned bits)
{
    const CoeffRing target = CoeffRing::mod2power(bits);
    if (a.ring().is_exact()) {
        auto x = a.ints();
        Series::Words v(x.size());
        for (std::size_t i = 0; i < x.size(); ++i)
            v[i] = low_bits(x[i], bits);
        return Series::from_words(target, std::move(v));
    }
    if (bits > a.ring().bits())
        throw std::invalid_argument("series_reduce_mod: 2^" + std::to_string(bits) + " exceeds ring " + a.ring().name());
    auto x = a.words();
    return Series::from_words(target, Series::Words(x.begin(), x.end()));
}

Series series_truncate(const Series& a, std::size_t order)
{
    if (order >= a.order())
        return a;
    if (a.ring().is_exact()) {
        auto x = a.ints();
        return Series::from_ints(a.ring(), Series::Ints(x.begin(), x.begin() + order + 1));
    }
    auto x = a.words();
    return Series::from_words(a.ring(), Series::Words(x.begin(), x.begin() + order + 1));
}

std::ostream& operator<<(std::ostream& os, const Series& s)
{
    constexpr std::size_t kMaxTerms = 16;
    std::size_t shown = 0;
    for (std::size_t n = 0; n <= s.order() && shown < kMaxTerms; ++n) {
        BigInt c = s.coeff(n);
        if (c == 0)
            continue;
        if (shown++ > 0)
            os << " + ";
        os << c.get_str();
        if (n == 1)
            os << "*q";
        else if (n > 1)
            os << "*q^" << n;
    }
    if (shown == 0)
        os << "0";
    return os << " + O(q^" << s.order() + 1 << ") [" << s.ring().name() << "]";
}

} // namespace pbar
