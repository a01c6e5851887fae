#include "taubound/arith.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace taubound {

int kronecker(std::int64_t a, std::int64_t n) noexcept {
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    if ((a & 1) == 0 && (n & 1) == 0) return 0;

    int sign = 1;
    // Strip factors of 2 from n; each contributes (a|2), i.e. -1 iff
    // a = +-3 mod 8. Two's complement makes a & 7 the residue mod 8.
    int twos = 0;
    while ((n & 1) == 0) {
        n /= 2;
        ++twos;
    }
    if (twos & 1) {
        const int r = static_cast<int>(a & 7);
        if (r == 3 || r == 5) sign = -sign;
    }
    if (n < 0) {
        n = -n;
        if (a < 0) sign = -sign;  // (a|-1) = -1 for a < 0
    }
    // Jacobi-style loop: n positive odd from here on.
    a %= n;
    if (a < 0) a += n;
    while (a != 0) {
        while ((a & 1) == 0) {
            a /= 2;
            const int r = static_cast<int>(n & 7);
            if (r == 3 || r == 5) sign = -sign;
        }
        // reciprocity flip: both odd, both = 3 mod 4
        if ((a & 3) == 3 && (n & 3) == 3) sign = -sign;
        const std::int64_t t = a;
        a = n % t;
        n = t;
    }
    return n == 1 ? sign : 0;
}

std::uint64_t isqrt(unsigned __int128 n) noexcept {
    if (n == 0) return 0;
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    // fix up double rounding
    while (r > 0 && static_cast<unsigned __int128>(r) * r > n) --r;
    while (static_cast<unsigned __int128>(r + 1) * (r + 1) <= n) ++r;
    return r;
}

bool is_perfect_square(unsigned __int128 n) noexcept {
    const std::uint64_t r = isqrt(n);
    return static_cast<unsigned __int128>(r) * r == n;
}

PrimeFactorTable::PrimeFactorTable(std::uint32_t limit) : limit_(limit) {
    if (limit < 2) limit_ = 2;
    spf_.assign(static_cast<std::size_t>(limit_) + 1, 0);
    for (std::uint32_t i = 2; i <= limit_; ++i) {
        if (spf_[i] == 0) {
            spf_[i] = i;
            primes_.push_back(i);
        }
        for (std::uint32_t p : primes_) {
            const std::uint64_t next = static_cast<std::uint64_t>(p) * i;
            if (p > spf_[i] || next > limit_) break;
            spf_[next] = p;
        }
    }
}

Factorization factorize(std::uint64_t n, const PrimeFactorTable& table) {
    if (n == 0) throw std::domain_error("factorize: n must be >= 1");
    Factorization out;
    if (n <= table.limit()) {
        auto m = static_cast<std::uint32_t>(n);
        while (m > 1) {
            const std::uint32_t p = table.smallest_factor(m);
            int e = 0;
            while (m % p == 0) {
                m /= p;
                ++e;
            }
            out.emplace_back(p, e);
        }
        return out;
    }
    std::uint64_t m = n;
    for (const std::uint32_t p : table.primes()) {
        if (static_cast<std::uint64_t>(p) * p > m) break;
        if (m % p == 0) {
            int e = 0;
            do {
                m /= p;
                ++e;
            } while (m % p == 0);
            out.emplace_back(p, e);
        }
    }
    if (m > 1) {
        // Every prime <= min(sqrt(m), limit) has been removed, so m is prime
        // as long as it fits below limit^2.
        const std::uint64_t lim = table.limit();
        if (m > lim * lim)
            throw std::domain_error("factorize: " + std::to_string(n) +
                                    " exceeds the table's certified range");
        out.emplace_back(m, 1);
    }
    return out;
}

std::uint64_t tau(std::uint64_t n, const PrimeFactorTable& table) {
    std::uint64_t t = 1;
    for (const auto& [p, e] : factorize(n, table)) t *= static_cast<std::uint64_t>(e) + 1;
    return t;
}

bool is_squarefree(std::uint64_t n) {
    if (n == 0) return false;
    for (std::uint64_t p = 2; p * p * p <= n && p <= 1'000'000; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return false;
        }
    }
    // Remaining cofactor has at most two prime factors; a repeated one
    // would make it a perfect square.
    return !(n > 1 && is_perfect_square(n));
}

std::uint64_t squarefree_count(std::uint64_t n) {
    if (n == 0) return 0;
    const std::uint64_t root = isqrt(n);
    // mu over [1, root] from a small factor sieve
    std::vector<std::int8_t> mu(root + 1, 1);
    std::vector<std::uint32_t> spf(root + 1, 0);
    for (std::uint64_t i = 2; i <= root; ++i) {
        if (spf[i] == 0) {
            for (std::uint64_t j = i; j <= root; j += i)
                if (spf[j] == 0) spf[j] = static_cast<std::uint32_t>(i);
        }
    }
    for (std::uint64_t i = 2; i <= root; ++i) {
        const std::uint64_t p = spf[i];
        const std::uint64_t q = i / p;
        mu[i] = (q % p == 0) ? 0 : static_cast<std::int8_t>(-mu[q]);
    }
    std::int64_t count = 0;
    for (std::uint64_t d = 1; d <= root; ++d)
        if (mu[d] != 0) count += mu[d] * static_cast<std::int64_t>(n / (d * d));
    return static_cast<std::uint64_t>(count);
}

std::vector<std::uint8_t> squarefree_indicator(std::uint32_t limit) {
    std::vector<std::uint8_t> sf(static_cast<std::size_t>(limit) + 1, 1);
    sf[0] = 0;
    for (std::uint64_t p = 2; p * p <= limit; ++p) {
        // composite p only repeats strikes already made by its prime factors
        if (!sf[p]) continue;
        const std::uint64_t pp = p * p;
        for (std::uint64_t m = pp; m <= limit; m += pp) sf[m] = 0;
    }
    return sf;
}

std::uint64_t rho_bruteforce(std::uint64_t d, const QuadraticPoly& f) {
    if (d == 0) throw std::domain_error("rho: modulus must be >= 1");
    std::uint64_t count = 0;
    for (std::uint64_t m = 0; m < d; ++m) {
        const int128 v = f(static_cast<std::int64_t>(m));
        int128 r = v % static_cast<int128>(d);
        if (r < 0) r += d;
        if (r == 0) ++count;
    }
    return count;
}

std::uint64_t rho_convolution(std::uint64_t d, const QuadraticPoly& f,
                              const PrimeFactorTable& table) {
    if (d == 0) throw std::domain_error("rho: modulus must be >= 1");
    const std::int64_t four_delta = 4 * f.delta();
    const Factorization fac = factorize(d, table);
    // Enumerate divisors l of d, adding mu^2(l) * chi(d / l).
    std::int64_t sum = 0;
    std::vector<std::uint64_t> divisors{1};
    for (const auto& [p, e] : fac) {
        const std::size_t count = divisors.size();
        std::uint64_t pe = 1;
        for (int k = 1; k <= e; ++k) {
            pe *= p;
            for (std::size_t i = 0; i < count; ++i) divisors.push_back(divisors[i] * pe);
        }
    }
    for (const std::uint64_t l : divisors) {
        bool sf = true;
        std::uint64_t m = l;
        for (const auto& [p, e] : fac) {
            int k = 0;
            while (m % p == 0) {
                m /= p;
                ++k;
            }
            if (k >= 2) {
                sf = false;
                break;
            }
        }
        if (!sf) continue;
        sum += kronecker(four_delta, static_cast<std::int64_t>(d / l));
    }
    return static_cast<std::uint64_t>(sum);
}

}  // namespace taubound
