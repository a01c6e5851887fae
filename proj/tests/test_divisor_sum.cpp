#include <cstdint>
#include <vector>

#include "doctest.h"
#include "taubound/divisor_sum.hpp"

using namespace taubound;

namespace {

const std::vector<QuadraticPoly> kPolys{
    {0, 1}, {5, 27}, {2, 10}, {5, -10}, {10, 9}};

// exact sums computed independently (per-n factorization in a separate
// system) and frozen
struct Frozen {
    std::int64_t b, c;
    std::uint64_t s10, s100, s1000, s10000;
};
const std::vector<Frozen> kFrozen{
    {0, 1, 32, 536, 7508, 97122},     {5, 27, 54, 742, 10326, 133974},
    {2, 10, 52, 796, 11418, 149708},  {5, -10, 37, 570, 7832, 101256},
    {10, 9, 72, 1037, 14635, 192715},
};

}  // namespace

TEST_SUITE("divisor_sum") {

TEST_CASE("root_enumeration on reference cases") {
    const QuadraticPoly f(0, 1);
    CHECK(root_enumeration(5, f) == std::vector<std::uint64_t>{2, 3});
    CHECK(root_enumeration(1, f) == std::vector<std::uint64_t>{0});
    CHECK(root_enumeration(3, f) == std::vector<std::uint64_t>{});
    CHECK_THROWS_AS(root_enumeration(0, f), std::domain_error);
}

TEST_CASE("root_enumeration agrees with the O(d) oracle") {
    for (const auto& f : kPolys) {
        for (std::uint64_t d = 1; d <= 2000; ++d) {
            const auto roots = root_enumeration(d, f);
            CHECK(roots.size() == rho_bruteforce(d, f));
            std::uint64_t prev = 0;
            bool first = true;
            for (const std::uint64_t r : roots) {
                CHECK(r < d);
                if (!first) CHECK(r > prev);
                first = false;
                prev = r;
                const int128 v = f(static_cast<std::int64_t>(r));
                int128 rem = v % static_cast<int128>(d);
                if (rem < 0) rem += static_cast<int128>(d);
                CHECK(rem == 0);
            }
        }
    }
}

TEST_CASE("root counts bound the progression hits") {
    // #n <= N with d | f(n) can exceed rho(d) * floor(N/d) by at most rho(d)
    const QuadraticPoly f(0, 1);
    const std::uint64_t n_max = 5000;
    for (std::uint64_t d = 1; d <= 100; ++d) {
        std::uint64_t hits = 0;
        for (std::uint64_t n = 1; n <= n_max; ++n) {
            int128 rem = f(static_cast<std::int64_t>(n)) % static_cast<int128>(d);
            if (rem < 0) rem += static_cast<int128>(d);
            if (rem == 0) ++hits;
        }
        const std::uint64_t rho = rho_bruteforce(d, f);
        CHECK(hits <= rho * (n_max / d + 1));
    }
}

TEST_CASE("sum_naive: reference cases and frozen oracle values") {
    const PrimeFactorTable table(20'000);
    CHECK(sum_naive(QuadraticPoly(0, 1), 1, table).value == 2);
    CHECK(sum_naive(QuadraticPoly(0, 1), 3, table).value == 8);
    CHECK(sum_naive(QuadraticPoly(5, 27), 2, table).value == 8);
    for (const auto& fr : kFrozen) {
        const QuadraticPoly f(fr.b, fr.c);
        CHECK(sum_naive(f, 10, table).value == fr.s10);
        CHECK(sum_naive(f, 100, table).value == fr.s100);
        CHECK(sum_naive(f, 1000, table).value == fr.s1000);
        CHECK(sum_naive(f, 10'000, table).value == fr.s10000);
    }
}

TEST_CASE("sum_naive rejects non-positive values naming the offender") {
    const PrimeFactorTable table(100);
    const QuadraticPoly f(0, -2);  // delta = 2, f(1) = -1
    CHECK_THROWS_WITH_AS(sum_naive(f, 5, table).value,
                         doctest::Contains("f(1)"), std::domain_error);
}

TEST_CASE("sieve equals naive on dense small ranges") {
    const PrimeFactorTable table(20'000);
    for (const auto& f : kPolys) {
        std::uint64_t prev = 0;
        for (std::uint64_t n = 1; n <= 300; ++n) {
            const SumResult a = sum_naive(f, n, table);
            const SumResult b = sum_sieve(f, n, table);
            CHECK(a.value == b.value);
            CHECK(a.square_count == b.square_count);
            CHECK(a.method == SumMethod::naive);
            CHECK(b.method == SumMethod::sieve);
            CHECK(b.n == n);
            // S(N+1) >= S(N) + 1: every term contributes at least tau >= 1
            CHECK(b.value >= prev + 1);
            prev = b.value;
        }
        CHECK(sum_naive(f, 1000, table).value == sum_sieve(f, 1000, table).value);
    }
}

TEST_CASE("sieve equals the frozen oracle at N = 1e4") {
    const PrimeFactorTable table(20'000);
    for (const auto& fr : kFrozen)
        CHECK(sum_sieve(QuadraticPoly(fr.b, fr.c), 10'000, table).value == fr.s10000);
}

TEST_CASE("sieve handles a decreasing prefix (negative b)") {
    // b = -50: vertex at n = 50, f decreasing before it
    const QuadraticPoly f(-50, 2502);  // delta = -2
    const PrimeFactorTable table(2000);
    for (const std::uint64_t n : {1ULL, 10ULL, 49ULL, 50ULL, 51ULL, 200ULL, 1000ULL})
        CHECK(sum_sieve(f, n, table).value == sum_naive(f, n, table).value);
}

TEST_CASE("sieve equals naive on randomized admissible polynomials") {
    const PrimeFactorTable table(40'000);
    std::uint64_t state = 0x9e3779b97f4a7c15ULL;
    const auto next = [&state] {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return state >> 33;
    };
    int tried = 0;
    while (tried < 60) {
        const auto b = static_cast<std::int64_t>(next() % 41) - 20;
        const auto c = static_cast<std::int64_t>(next() % 201) - 100;
        try {
            const QuadraticPoly f(b, c);
            // keep f positive on the whole test range
            bool positive = true;
            for (std::int64_t n = 1; n <= 400; ++n) positive = positive && f(n) >= 1;
            if (!positive) continue;
            ++tried;
            const std::uint64_t n = 1 + next() % 400;
            const SumResult a = sum_naive(f, n, table);
            const SumResult s = sum_sieve(f, n, table, 1 + next() % 3);
            CHECK(a.value == s.value);
            CHECK(a.square_count == s.square_count);
        } catch (const InvalidPoly&) {
            continue;  // inadmissible discriminant; draw again
        }
    }
}

TEST_CASE("thread count does not change results") {
    const PrimeFactorTable table(20'000);
    const QuadraticPoly f(10, 9);
    const std::uint64_t reference = sum_sieve(f, 10'000, table, 1).value;
    for (const unsigned threads : {2u, 3u, 7u})
        CHECK(sum_sieve(f, 10'000, table, threads).value == reference);
}

TEST_CASE("square value counting") {
    CHECK(square_values_count(QuadraticPoly(0, 1), 10'000) == 0);
    // (n+5)^2 - 35 is a square exactly at n = 1 and n = 13
    CHECK(square_values_count(QuadraticPoly(5, -10), 1) == 1);
    CHECK(square_values_count(QuadraticPoly(5, -10), 1000) == 2);
    CHECK(square_values_count(QuadraticPoly(10, 9), 10'000) == 1);  // n = 36
    CHECK(square_values_count(QuadraticPoly(5, 27), 10'000) == 0);

    const PrimeFactorTable table(2000);
    const SumResult s = sum_sieve(QuadraticPoly(5, -10), 1000, table);
    CHECK(s.square_count == 2);
    CHECK(sum_naive(QuadraticPoly(5, -10), 1000, table).square_count == 2);
}

TEST_CASE("sieve refuses an undersized factor table") {
    const PrimeFactorTable tiny(10);
    CHECK_THROWS_AS(sum_sieve(QuadraticPoly(0, 1), 1000, tiny), std::invalid_argument);
}

}  // TEST_SUITE
