#pragma once

#include <chrono>
#include <cstdint>
#include <vector>

#include "taubound/arith.hpp"
#include "taubound/poly.hpp"

namespace taubound {

enum class SumMethod { naive, sieve };

struct SumResult {
    std::uint64_t n = 0;       // range bound N
    std::uint64_t value = 0;   // exact sum_{m<=N} tau(f(m))
    SumMethod method = SumMethod::naive;
    std::chrono::nanoseconds elapsed{0};
    std::uint64_t square_count = 0;  // #{m <= N : f(m) is a perfect square}
};

/// Exactly the residues r in [0, d) with f(r) = 0 mod d, sorted. Roots are
/// found per prime power (direct scan for p = 2, modular square root plus
/// Hensel lifting for odd p) and assembled by CRT.
std::vector<std::uint64_t> root_enumeration(std::uint64_t d, const QuadraticPoly& f);

/// #{1 <= m <= N : f(m) is a perfect square}, by integer square-root test.
std::uint64_t square_values_count(const QuadraticPoly& f, std::uint64_t n);

/// Exact sum by factorizing each f(m) individually. The independent oracle
/// for the sieve; table.limit must reach sqrt(f(N)). Throws
/// std::domain_error (naming the offending m) if some f(m) < 1.
SumResult sum_naive(const QuadraticPoly& f, std::uint64_t n,
                    const PrimeFactorTable& table);

/// Exact sum by the paired-divisor identity
///   tau(m) = 2 #{d <= sqrt(m) : d | m} - [m is a square]:
/// every modulus d <= X = sqrt(f(N)) contributes 2 hits per residue class
/// of roots over the n-range where d^2 <= f(n). A decreasing prefix
/// (possible when b < 0) is summed naively; the increasing tail is sieved.
/// Agrees with sum_naive exactly. Deterministic for any thread count.
SumResult sum_sieve(const QuadraticPoly& f, std::uint64_t n,
                    const PrimeFactorTable& table, unsigned threads = 1);

}  // namespace taubound
