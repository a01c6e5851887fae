#pragma once

#include <cstdint>

#include "taubound/character.hpp"
#include "taubound/poly.hpp"

namespace taubound {

/// The five terms of the explicit divisor-sum upper bound, reported
/// individually. With L = certified upper end of L(1,chi), M = m_delta,
/// X = sqrt(f(N)):
///   main_term        = (2/zeta(2)) L N log X
///   linear_term      = (2.332 L + 4M/zeta(2)) N
///   x_term           = (2M/zeta(2)) X
///   n_over_sqrtx_term= 4 sqrt(3) (1 - 1/zeta(2)) M N / sqrt(X)
///   sqrtx_term       = 2 sqrt(3) (1 - 1/zeta(2)) M sqrt(X)
/// All terms rounded upward; total >= their exact sum.
struct BoundBreakdown {
    double main_term = 0.0;
    double linear_term = 0.0;
    double x_term = 0.0;
    double n_over_sqrtx_term = 0.0;
    double sqrtx_term = 0.0;
    double total = 0.0;
    std::uint64_t n = 0;
    double x = 0.0;

    bool operator==(const BoundBreakdown&) const = default;
};

/// Rigorous upper bound for sum_{n<=N} tau(f(n)). Preconditions checked:
/// f(n) >= 0 on [1, N] and f(N) >= f(1); throws std::domain_error
/// otherwise.
BoundBreakdown theorem2_bound(const QuadraticPoly& f, std::uint64_t n,
                              const CertifiedValue& l_value);

/// (3/pi) N log N + 3.0475 N + 1.3586 sqrt(N), rounded upward. Upper bound
/// for sum_{n<=N} tau(n^2+1), any N >= 1.
double corollary1_bound(std::uint64_t n);

/// 2 L(1,chi) / zeta(2), the leading coefficient of the N log N asymptotic,
/// with the error radius propagated linearly.
CertifiedValue asymptotic_constant(const CertifiedValue& l_value);

/// log(x)/zeta(2) + 1.166, upper bound for sum_{n<=x} mu^2(n)/n, x >= 1.
double ramare_bound(double x);

/// 0.6793 sqrt(N), radius of |Q(N) - N/zeta(2)|.
double moser_macleod_radius(std::uint64_t n);

}  // namespace taubound
