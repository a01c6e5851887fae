#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "taubound/poly.hpp"

namespace taubound {

/// Kronecker symbol (a|n), the completely multiplicative extension of the
/// Legendre symbol to all integer pairs. (a|0) is 1 for a = +-1 and 0
/// otherwise; negative a and n follow the usual conventions
/// (a|-1) = sign(a) restricted to {-1,1}, (a|2) by a mod 8.
int kronecker(std::int64_t a, std::int64_t n) noexcept;

/// floor(sqrt(n)) for unsigned 128-bit arguments.
std::uint64_t isqrt(unsigned __int128 n) noexcept;

bool is_perfect_square(unsigned __int128 n) noexcept;

/// Smallest-prime-factor sieve up to a fixed limit. Immutable once built;
/// safe to share across threads.
class PrimeFactorTable {
public:
    explicit PrimeFactorTable(std::uint32_t limit);

    std::uint32_t limit() const noexcept { return limit_; }

    /// Least prime dividing n, for 2 <= n <= limit.
    std::uint32_t smallest_factor(std::uint32_t n) const { return spf_[n]; }

    bool is_prime(std::uint32_t n) const { return n >= 2 && spf_[n] == n; }

    const std::vector<std::uint32_t>& primes() const noexcept { return primes_; }

private:
    std::uint32_t limit_;
    std::vector<std::uint32_t> spf_;
    std::vector<std::uint32_t> primes_;
};

/// (prime, exponent) pairs with primes strictly increasing.
using Factorization = std::vector<std::pair<std::uint64_t, int>>;

/// Factor n >= 1. Table lookup for n <= limit, trial division by the
/// table's primes beyond that; supports any n <= limit^2. Throws
/// std::domain_error when n = 0 or primality of a cofactor cannot be
/// certified with the available primes.
Factorization factorize(std::uint64_t n, const PrimeFactorTable& table);

/// Number of positive divisors.
std::uint64_t tau(std::uint64_t n, const PrimeFactorTable& table);

/// Squarefree test by trial division; intended for moderate n (up to ~1e12).
bool is_squarefree(std::uint64_t n);
inline int mu_squared(std::uint64_t n) { return is_squarefree(n) ? 1 : 0; }

/// Q(n) = #{m <= n : m squarefree}, exact, via mu(d) * floor(n / d^2).
std::uint64_t squarefree_count(std::uint64_t n);

/// mu^2(m) for every m <= limit as a flat byte array (index 0 unused).
std::vector<std::uint8_t> squarefree_indicator(std::uint32_t limit);

/// rho(d) = #{0 <= m < d : f(m) = 0 mod d} by direct scan. O(d); this is
/// the oracle the fast paths are checked against.
std::uint64_t rho_bruteforce(std::uint64_t d, const QuadraticPoly& f);

/// rho(d) via the divisor-sum identity rho = mu^2 * chi, valid exactly
/// because QuadraticPoly guarantees a fundamental discriminant 4*delta.
std::uint64_t rho_convolution(std::uint64_t d, const QuadraticPoly& f,
                              const PrimeFactorTable& table);

}  // namespace taubound
