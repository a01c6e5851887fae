#include "doctest.h"
#include "taubound/poly.hpp"

using namespace taubound;

TEST_SUITE("poly") {

TEST_CASE("reference polynomials construct with the right discriminants") {
    CHECK(QuadraticPoly(0, 1).delta() == -1);
    CHECK(QuadraticPoly(5, 27).delta() == -2);
    CHECK(QuadraticPoly(2, 10).delta() == -6);
    CHECK(QuadraticPoly(5, -10).delta() == 35);
    CHECK(QuadraticPoly(10, 9).delta() == 91);
}

TEST_CASE("construction rejects bad discriminants with typed defects") {
    // delta = 0: n^2 + 2n + 1
    CHECK_THROWS_AS(QuadraticPoly(1, 1), InvalidPoly);
    try {
        QuadraticPoly(1, 1);
    } catch (const InvalidPoly& e) {
        CHECK(e.defect() == PolyDefect::zero_discriminant);
    }
    // delta = 5 = 1 mod 4
    try {
        QuadraticPoly(3, 4);
        FAIL("expected InvalidPoly");
    } catch (const InvalidPoly& e) {
        CHECK(e.defect() == PolyDefect::discriminant_one_mod_four);
    }
    // delta = -3 = 1 mod 4 (representative in {0,1,2,3})
    try {
        QuadraticPoly(0, 3);
        FAIL("expected InvalidPoly");
    } catch (const InvalidPoly& e) {
        CHECK(e.defect() == PolyDefect::discriminant_one_mod_four);
    }
    // delta = 4: not squarefree
    try {
        QuadraticPoly(0, -4);
        FAIL("expected InvalidPoly");
    } catch (const InvalidPoly& e) {
        CHECK(e.defect() == PolyDefect::discriminant_not_squarefree);
    }
    // delta = -9: not squarefree
    CHECK_THROWS_AS(QuadraticPoly(0, 9), InvalidPoly);
    // coefficient range guard
    CHECK_THROWS_AS(QuadraticPoly(2'000'000'000'000LL, 2), InvalidPoly);
}

TEST_CASE("negative deltas that are 2 or 3 mod 4 are accepted") {
    CHECK(QuadraticPoly(0, 2).delta() == -2);   // -2 = 2 mod 4
    CHECK(QuadraticPoly(0, 1).delta() == -1);   // -1 = 3 mod 4
    CHECK(QuadraticPoly(0, -2).delta() == 2);
    CHECK(QuadraticPoly(0, -3).delta() == 3);
}

TEST_CASE("evaluation agrees with the expanded form") {
    const QuadraticPoly f(5, -10);
    for (std::int64_t n = -20; n <= 20; ++n)
        CHECK(f(n) == static_cast<int128>(n) * n + 2 * 5 * n - 10);
    CHECK(static_cast<std::int64_t>(f(1)) == 1);
    const QuadraticPoly g(0, 1);
    CHECK(static_cast<std::int64_t>(g(1'000'000)) == 1'000'000'000'001LL);
}

TEST_CASE("name renders the polynomial") {
    CHECK(QuadraticPoly(0, 1).name() == "n^2+1");
    CHECK(QuadraticPoly(5, 27).name() == "n^2+10n+27");
    CHECK(QuadraticPoly(5, -10).name() == "n^2+10n-10");
    CHECK(QuadraticPoly(0, -2).name() == "n^2-2");
}

}  // TEST_SUITE
