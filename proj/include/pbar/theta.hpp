#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "pbar/series.hpp"

namespace pbar {

enum class ThetaKind { Phi, PhiNegQ, Psi, Psi1, Psi2, PochhammerQQ, PochhammerNegQQ };

std::string_view to_string(ThetaKind kind);

/// phi(q) = sum over all integers n of q^(n^2).
Series theta_phi(std::size_t order, CoeffRing ring);
/// phi(-q).
Series theta_phi_neg(std::size_t order, CoeffRing ring);
/// psi(q) = sum over n >= 0 of q^((n^2 + n) / 2).
Series theta_psi(std::size_t order, CoeffRing ring);
/// psi1(q) = sum over all integers n of q^(4n^2 + n); psi(q) = psi1(q^2) + q psi2(q^2).
Series theta_psi1(std::size_t order, CoeffRing ring);
/// psi2(q) = sum over all integers n of q^(4n^2 - 3n).
Series theta_psi2(std::size_t order, CoeffRing ring);
/// (q;q)_inf truncated at q^order.
Series pochhammer_qq(std::size_t order, CoeffRing ring);
/// (-q;q)_inf truncated at q^order.
Series pochhammer_negqq(std::size_t order, CoeffRing ring);

Series theta(ThetaKind kind, std::size_t order, CoeffRing ring);

/// Both sides of a theta function identity, truncated at the same order.
struct ThetaIdentity {
    std::string name;
    Series lhs;
    Series rhs;
};

/// The five identities the dissection argument rests on, exact ring:
///   phi(q) = phi(q^4) + 2q psi(q^8)
///   phi(q)^2 = phi(q^2)^2 + 4q psi(q^4)^2
///   phi(q) phi(-q) = phi(-q^2)^2
///   psi(q) = psi1(q^2) + q psi2(q^2)
///   1/phi(q) = phi(-q) phi(q^2)^2 phi(q^4)^4 phi(q^8)^8 / phi(-q^16)^16
std::vector<ThetaIdentity> theta_identity_suite(std::size_t order);

} // namespace pbar
