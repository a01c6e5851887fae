#include "taubound/divisor_sum.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>

namespace taubound {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 base, u64 exp, u64 m) {
    u64 r = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return r;
}

// inverse of a mod m, gcd(a, m) = 1
u64 inv_mod(u64 a, u64 m) {
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(m), new_r = static_cast<std::int64_t>(a % m);
    while (new_r != 0) {
        const std::int64_t q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    return static_cast<u64>(t < 0 ? t + static_cast<std::int64_t>(m) : t);
}

// Tonelli-Shanks: x with x^2 = a (mod p), p odd prime, a a nonzero QR.
u64 sqrt_mod_prime(u64 a, u64 p) {
    a %= p;
    if (p % 4 == 3) return powmod(a, (p + 1) / 4, p);
    u64 q = p - 1;
    int s = 0;
    while ((q & 1) == 0) {
        q >>= 1;
        ++s;
    }
    // least quadratic non-residue as the auxiliary generator
    u64 z = 2;
    while (powmod(z, (p - 1) / 2, p) != p - 1) ++z;
    u64 m = static_cast<u64>(s);
    u64 c = powmod(z, q, p);
    u64 t = powmod(a, q, p);
    u64 r = powmod(a, (q + 1) / 2, p);
    while (t != 1) {
        u64 t2 = t;
        u64 i = 0;
        while (t2 != 1) {
            t2 = mulmod(t2, t2, p);
            ++i;
        }
        u64 b = c;
        for (u64 j = 0; j + i + 1 < m; ++j) b = mulmod(b, b, p);
        m = i;
        c = mulmod(b, b, p);
        t = mulmod(t, c, p);
        r = mulmod(r, b, p);
    }
    return r;
}

// f(n) mod m for n in [0, m), m >= 1
u64 f_mod(const QuadraticPoly& f, u64 n, u64 m) {
    const int128 v = f(static_cast<std::int64_t>(n));
    int128 r = v % static_cast<int128>(m);
    if (r < 0) r += static_cast<int128>(m);
    return static_cast<u64>(r);
}

// Residues n mod p with f(n) = 0, p prime. At most two.
int prime_roots(const QuadraticPoly& f, u64 p, std::array<u64, 2>& out) {
    if (p == 2) {
        int cnt = 0;
        for (u64 m = 0; m < 2; ++m)
            if (f_mod(f, m, 2) == 0) out[static_cast<std::size_t>(cnt++)] = m;
        return cnt;
    }
    const std::int64_t sp = static_cast<std::int64_t>(p);
    const u64 dm = static_cast<u64>(((f.delta() % sp) + sp) % sp);
    const u64 neg_b = static_cast<u64>(((-f.b()) % sp + sp) % sp);
    if (dm == 0) {
        out[0] = neg_b;  // (n + b)^2 = 0 mod p
        return 1;
    }
    if (kronecker(static_cast<std::int64_t>(dm), sp) != 1) return 0;
    const u64 x = sqrt_mod_prime(dm, p);
    out[0] = (neg_b + x) % p;
    out[1] = (neg_b + p - x) % p;
    if (out[0] > out[1]) std::swap(out[0], out[1]);
    return 2;
}

// Lift roots mod p^(k-1) (q_prev) to mod p^k (q). Odd p uses the Newton
// step; p = 2 tests both candidates since f'(n) = 2(n+b) is always even.
std::vector<u64> lift_roots(const QuadraticPoly& f, const std::vector<u64>& prev,
                            u64 p, u64 q_prev, u64 q) {
    std::vector<u64> out;
    out.reserve(prev.size());
    if (p == 2) {
        for (const u64 r : prev) {
            if (f_mod(f, r, q) == 0) out.push_back(r);
            if (f_mod(f, r + q_prev, q) == 0) out.push_back(r + q_prev);
        }
        std::sort(out.begin(), out.end());
        return out;
    }
    for (const u64 r : prev) {
        const u64 fr = f_mod(f, r, q);  // divisible by q_prev
        const std::int64_t sp = static_cast<std::int64_t>(p);
        const u64 g = static_cast<u64>((((2 * (static_cast<int128>(r) + f.b())) % sp) + sp) % sp);
        if (g != 0) {
            const u64 deficit = (fr / q_prev) % p;  // want t*g = -deficit mod p
            const u64 t = mulmod((p - deficit) % p, inv_mod(g, p), p);
            out.push_back(r + t * q_prev);
        } else if (fr == 0) {
            for (u64 t = 0; t < p; ++t) out.push_back(r + t * q_prev);
        }
        // singular with fr != 0: no lift
    }
    std::sort(out.begin(), out.end());
    return out;
}

// All roots mod p^k for k = 1..max with p^k <= limit; powers[k-1] is p^k.
struct PowerRoots {
    std::vector<u64> modulus;               // p^k
    std::vector<std::vector<u64>> roots;    // aligned with modulus
};

PowerRoots power_roots(const QuadraticPoly& f, u64 p, u64 limit) {
    PowerRoots out;
    std::array<u64, 2> first{};
    const int cnt = prime_roots(f, p, first);
    std::vector<u64> cur(first.begin(), first.begin() + cnt);
    u64 q = p;
    while (!cur.empty()) {
        out.modulus.push_back(q);
        out.roots.push_back(cur);
        if (q > limit / p) break;
        const u64 next = q * p;
        cur = lift_roots(f, cur, p, q, next);
        q = next;
    }
    return out;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {  // b > 0
    return a >= 0 ? a / b : -((-a + b - 1) / b);
}

// ---------------------------------------------------------------------------
// Sieve proper
// ---------------------------------------------------------------------------

struct SieveContext {
    const QuadraticPoly& f;
    u64 n_max;        // N
    u64 start;        // first sieved n (prefix below handled naively)
    u64 x;            // X = isqrt(f(N))
    std::vector<std::uint32_t> primes;          // primes <= X
    std::vector<std::uint8_t> root_count;       // per prime index
    std::vector<std::array<std::uint32_t, 2>> roots;  // per prime index
};

// #n in [start, N], n = r (mod d), f(n) >= d^2. Valid on the increasing
// branch (n + b >= 0).
u64 count_hits(const SieveContext& ctx, u64 d, u64 r) {
    const std::int64_t a = ctx.f.delta() + static_cast<std::int64_t>(d * d);
    std::int64_t lo = static_cast<std::int64_t>(ctx.start);
    if (a > 0) {
        const u64 t = isqrt(static_cast<u128>(a - 1)) + 1;  // least t with t^2 >= a
        const std::int64_t n_min = static_cast<std::int64_t>(t) - ctx.f.b();
        if (n_min > lo) lo = n_min;
    }
    const auto n_hi = static_cast<std::int64_t>(ctx.n_max);
    if (lo > n_hi) return 0;
    const auto sd = static_cast<std::int64_t>(d);
    const auto sr = static_cast<std::int64_t>(r);
    return static_cast<u64>(floor_div(n_hi - sr, sd) - floor_div(lo - 1 - sr, sd));
}

u64 count_hits_all(const SieveContext& ctx, u64 d, const std::vector<u64>& roots) {
    u64 total = 0;
    for (const u64 r : roots) total += count_hits(ctx, d, r);
    return total;
}

// Reusable per-depth buffers; fixed capacity so references stay valid
// across recursion (omega(d) for d <= X is far below 64).
struct Workspace {
    static constexpr std::size_t kMaxDepth = 64;
    std::vector<std::vector<u64>> combined{kMaxDepth};
    std::vector<std::vector<u64>> power{kMaxDepth};
};

u64 extend(const SieveContext& ctx, Workspace& ws, u64 d, const std::vector<u64>& d_roots,
           std::size_t next, std::size_t depth);

// CRT-combine roots of coprime moduli d and q, count hits of d*q, recurse.
u64 visit_product(const SieveContext& ctx, Workspace& ws, u64 d,
                  const std::vector<u64>& d_roots, u64 q, const u64* q_roots,
                  std::size_t q_count, std::size_t next, std::size_t depth) {
    std::vector<u64>& combined = ws.combined[depth];
    combined.clear();
    const u64 inv_d = inv_mod(d % q, q);
    for (const u64 rd : d_roots) {
        const u64 rd_q = rd % q;
        for (std::size_t k = 0; k < q_count; ++k) {
            const u64 diff = (q_roots[k] + q - rd_q) % q;
            combined.push_back(rd + d * mulmod(diff, inv_d, q));
        }
    }
    u64 total = count_hits_all(ctx, d * q, combined);
    total += extend(ctx, ws, d * q, combined, next, depth + 1);
    return total;
}

// Recursively extend modulus d (roots given) by prime powers of primes with
// index >= next, counting hits of every composite built. Each d <= X with
// rho(d) > 0 is visited exactly once (primes appear in increasing order).
u64 extend(const SieveContext& ctx, Workspace& ws, u64 d, const std::vector<u64>& d_roots,
           std::size_t next, std::size_t depth) {
    u64 total = 0;
    for (std::size_t j = next; j < ctx.primes.size(); ++j) {
        const u64 p = ctx.primes[j];
        if (p > ctx.x / d) break;
        if (ctx.root_count[j] == 0) continue;

        const u64 first[2] = {ctx.roots[j][0], ctx.roots[j][1]};
        total += visit_product(ctx, ws, d, d_roots, p, first, ctx.root_count[j], j + 1, depth);

        if (p > ctx.x / (d * p)) continue;  // p^2 * d already exceeds X
        std::vector<u64>& pw = ws.power[depth];
        pw.assign(first, first + ctx.root_count[j]);
        u64 q = p;
        while (true) {
            const u64 q_next = q * p;
            pw = lift_roots(ctx.f, pw, p, q, q_next);
            if (pw.empty()) break;
            q = q_next;
            total += visit_product(ctx, ws, d, d_roots, q, pw.data(), pw.size(), j + 1, depth);
            if (q > ctx.x / (d * p)) break;
        }
    }
    return total;
}

u64 sieve_hits(const SieveContext& ctx, unsigned threads) {
    // d = 1 contributes one residue class covering every n
    const std::vector<u64> unit{0};
    u64 total = count_hits_all(ctx, 1, unit);

    // Top-level tasks, one per prime branch, pulled from a shared cursor.
    // Each branch total is independent, so any schedule yields the same sum.
    std::vector<std::size_t> tasks;
    for (std::size_t j = 0; j < ctx.primes.size(); ++j)
        if (ctx.root_count[j] != 0 && ctx.primes[j] <= ctx.x) tasks.push_back(j);

    auto run_branch = [&ctx](Workspace& ws, std::size_t j) -> u64 {
        const u64 p = ctx.primes[j];
        u64 branch = 0;
        std::vector<u64> pw(ctx.roots[j].begin(), ctx.roots[j].begin() + ctx.root_count[j]);
        u64 q = p;
        while (true) {
            branch += count_hits_all(ctx, q, pw);
            branch += extend(ctx, ws, q, pw, j + 1, 0);
            if (q > ctx.x / p) break;
            const u64 q_next = q * p;
            pw = lift_roots(ctx.f, pw, p, q, q_next);
            if (pw.empty()) break;
            q = q_next;
        }
        return branch;
    };

    if (threads <= 1) {
        Workspace ws;
        for (const std::size_t j : tasks) total += run_branch(ws, j);
        return total;
    }

    std::atomic<std::size_t> cursor{0};
    std::vector<u64> partial(threads, 0);
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            Workspace ws;
            u64 own = 0;
            while (true) {
                const std::size_t k = cursor.fetch_add(1, std::memory_order_relaxed);
                if (k >= tasks.size()) break;
                own += run_branch(ws, tasks[k]);
            }
            partial[t] = own;
        });
    }
    for (auto& th : pool) th.join();
    for (const u64 x : partial) total += x;  // associative: order-independent
    return total;
}

u64 checked_f_value(const QuadraticPoly& f, u64 n) {
    const int128 v = f(static_cast<std::int64_t>(n));
    if (v < 1)
        throw std::domain_error("divisor sum: f(" + std::to_string(n) + ") = " +
                                std::to_string(static_cast<long long>(v)) + " < 1");
    return static_cast<u64>(v);
}

}  // namespace

std::vector<u64> root_enumeration(u64 d, const QuadraticPoly& f) {
    if (d == 0) throw std::domain_error("root_enumeration: modulus must be >= 1");
    std::vector<u64> roots{0};
    u64 modulus = 1;
    u64 m = d;
    for (u64 p = 2; p * p <= m; ++p) {
        if (m % p != 0) continue;
        u64 q = 1;
        while (m % p == 0) {
            m /= p;
            q *= p;
        }
        PowerRoots pr = power_roots(f, p, q);
        if (pr.modulus.empty() || pr.modulus.back() != q) return {};
        const std::vector<u64>& rq = pr.roots.back();
        std::vector<u64> combined;
        combined.reserve(roots.size() * rq.size());
        const u64 inv = inv_mod(modulus % q, q);
        for (const u64 rd : roots)
            for (const u64 r : rq)
                combined.push_back(rd + modulus * mulmod((r + q - rd % q) % q, inv, q));
        roots = std::move(combined);
        modulus *= q;
        if (roots.empty()) return {};
    }
    if (m > 1) {
        PowerRoots pr = power_roots(f, m, m);
        if (pr.modulus.empty()) return {};
        const std::vector<u64>& rq = pr.roots.back();
        std::vector<u64> combined;
        combined.reserve(roots.size() * rq.size());
        const u64 inv = inv_mod(modulus % m, m);
        for (const u64 rd : roots)
            for (const u64 r : rq)
                combined.push_back(rd + modulus * mulmod((r + m - rd % m) % m, inv, m));
        roots = std::move(combined);
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

u64 square_values_count(const QuadraticPoly& f, u64 n) {
    u64 count = 0;
    for (u64 m = 1; m <= n; ++m) {
        const int128 v = f(static_cast<std::int64_t>(m));
        if (v >= 0 && is_perfect_square(static_cast<u128>(v))) ++count;
    }
    return count;
}

SumResult sum_naive(const QuadraticPoly& f, u64 n, const PrimeFactorTable& table) {
    const auto t0 = std::chrono::steady_clock::now();
    SumResult out;
    out.n = n;
    out.method = SumMethod::naive;
    for (u64 m = 1; m <= n; ++m) {
        const u64 v = checked_f_value(f, m);
        u64 t = 1;
        bool square = true;
        for (const auto& [p, e] : factorize(v, table)) {
            t *= static_cast<u64>(e) + 1;
            if (e % 2 != 0) square = false;
        }
        out.value += t;
        if (square) ++out.square_count;
    }
    out.elapsed = std::chrono::steady_clock::now() - t0;
    return out;
}

SumResult sum_sieve(const QuadraticPoly& f, u64 n, const PrimeFactorTable& table,
                    unsigned threads) {
    const auto t0 = std::chrono::steady_clock::now();
    if (n < 1) throw std::domain_error("sum_sieve: N must be >= 1");
    if (threads == 0) threads = 1;

    SumResult out;
    out.n = n;
    out.method = SumMethod::sieve;

    // f decreases up to its vertex -b; that prefix is summed naively.
    u64 start = 1;
    if (f.b() < 0) {
        const u64 vertex = static_cast<u64>(-f.b());
        start = std::min(n + 1, vertex);
    }
    for (u64 m = 1; m < start; ++m) {
        const u64 v = checked_f_value(f, m);
        u64 t = 1;
        bool square = true;
        for (const auto& [p, e] : factorize(v, table)) {
            t *= static_cast<u64>(e) + 1;
            if (e % 2 != 0) square = false;
        }
        out.value += t;
        if (square) ++out.square_count;
    }
    if (start > n) {
        out.elapsed = std::chrono::steady_clock::now() - t0;
        return out;
    }

    // increasing tail [start, N]
    (void)checked_f_value(f, start);
    const u64 f_n = checked_f_value(f, n);
    const u64 x = isqrt(f_n);
    if (x > table.limit())
        throw std::invalid_argument("sum_sieve: table limit " + std::to_string(table.limit()) +
                                    " < sqrt(f(N)) = " + std::to_string(x));

    SieveContext ctx{f, n, start, x, {}, {}, {}};
    ctx.primes.reserve(table.primes().size());
    for (const std::uint32_t p : table.primes()) {
        if (p > x) break;
        ctx.primes.push_back(p);
    }
    ctx.root_count.resize(ctx.primes.size());
    ctx.roots.resize(ctx.primes.size());
    for (std::size_t i = 0; i < ctx.primes.size(); ++i) {
        std::array<u64, 2> r{};
        const int cnt = prime_roots(f, ctx.primes[i], r);
        ctx.root_count[i] = static_cast<std::uint8_t>(cnt);
        ctx.roots[i] = {static_cast<std::uint32_t>(r[0]), static_cast<std::uint32_t>(r[1])};
    }

    u64 squares_in_tail = 0;
    for (u64 m = start; m <= n; ++m) {
        const int128 v = f(static_cast<std::int64_t>(m));
        if (is_perfect_square(static_cast<u128>(v))) ++squares_in_tail;
    }

    const u64 hits = sieve_hits(ctx, threads);
    out.value += 2 * hits - squares_in_tail;
    out.square_count += squares_in_tail;
    out.elapsed = std::chrono::steady_clock::now() - t0;
    return out;
}

}  // namespace taubound
