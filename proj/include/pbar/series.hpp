#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <variant>
#include <vector>

#include "pbar/ring.hpp"

namespace pbar {

class RingMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Truncated power series a(0) + a(1) q + ... + a(N) q^N over a CoeffRing.
///
/// Values are immutable once built. The order N is the largest retained
/// exponent; coefficients beyond it are unknown, not zero, so reading past the
/// order throws. Binary operations truncate to the smaller operand order.
class Series {
public:
    using Words = std::vector<std::uint64_t>;
    using Ints = std::vector<BigInt>;

    static Series zero(CoeffRing ring, std::size_t order);
    static Series one(CoeffRing ring, std::size_t order);
    /// c * q^exponent; exponent beyond order gives the zero series.
    static Series monomial(CoeffRing ring, std::size_t order, std::size_t exponent, std::int64_t c = 1);
    /// Order is coeffs.size() - 1; coeffs must be non-empty.
    static Series from_coeffs(CoeffRing ring, std::span<const std::int64_t> coeffs);
    static Series from_coeffs(CoeffRing ring, std::initializer_list<std::int64_t> coeffs);
    static Series from_ints(CoeffRing ring, Ints coeffs);
    static Series from_words(CoeffRing ring, Words coeffs);

    const CoeffRing& ring() const noexcept { return ring_; }
    std::size_t order() const noexcept { return order_; }

    /// a(n); throws std::out_of_range when n > order().
    BigInt coeff(std::size_t n) const;
    /// a(n) reduced mod 2^bits; cheaper than coeff() on word rings.
    std::uint64_t coeff_mod2(std::size_t n, unsigned bits) const;

    /// Raw storage. words() requires a Mod2Power ring, ints() the exact ring.
    std::span<const std::uint64_t> words() const;
    std::span<const BigInt> ints() const;

    bool is_zero() const;

    friend bool operator==(const Series& a, const Series& b);

private:
    Series(CoeffRing ring, Ints coeffs);
    Series(CoeffRing ring, Words coeffs);

    CoeffRing ring_;
    std::size_t order_;
    std::variant<Ints, Words> coeffs_;
};

Series series_add(const Series& a, const Series& b);
Series series_sub(const Series& a, const Series& b);
Series series_negate(const Series& a);
Series series_scale(const Series& a, std::int64_t c);
/// Multiply by q^s, keeping the order of a.
Series series_shift(const Series& a, std::size_t s);
/// Cauchy product truncated at min(order_a, order_b).
Series series_mul(const Series& a, const Series& b);
Series series_pow(const Series& a, std::uint64_t e);
/// Multiplicative inverse by the linear recurrence. The constant term must be
/// a unit: +-1 in the exact ring, odd in Mod2Power. Throws std::domain_error.
Series series_invert(const Series& a);
/// a(q^t), same order as a.
Series series_substitute_power(const Series& a, std::size_t t);
/// b(n) = a(t n + r), order floor((N - r) / t).
Series series_dissect(const Series& a, std::size_t t, std::size_t r);
/// Coefficients reduced into [0, 2^bits); the result lives in Mod2Power(bits).
Series series_reduce_mod(const Series& a, unsigned bits);
Series series_truncate(const Series& a, std::size_t order);
inline BigInt coeff_at(const Series& a, std::size_t n) { return a.coeff(n); }

inline Series operator+(const Series& a, const Series& b) { return series_add(a, b); }
inline Series operator-(const Series& a, const Series& b) { return series_sub(a, b); }
inline Series operator-(const Series& a) { return series_negate(a); }
inline Series operator*(const Series& a, const Series& b) { return series_mul(a, b); }
inline Series operator*(std::int64_t c, const Series& a) { return series_scale(a, c); }

std::ostream& operator<<(std::ostream& os, const Series& s);

} // namespace pbar
