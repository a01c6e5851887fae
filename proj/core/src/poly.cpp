#include "taubound/poly.hpp"

#include <cstdlib>

#include "taubound/arith.hpp"

namespace taubound {

namespace {

// Keeps b^2, c and f(n) for sieve-scale n well inside 128 bits, and |delta|
// small enough for is_squarefree's trial division to be conclusive.
constexpr std::int64_t kMaxCoefficient = 1'000'000'000'000LL;  // 1e12

std::string defect_message(PolyDefect defect, std::int64_t b, std::int64_t c,
                           std::int64_t delta) {
    std::string head = "n^2 + 2*" + std::to_string(b) + "*n + " + std::to_string(c);
    switch (defect) {
        case PolyDefect::zero_discriminant:
            return head + ": discriminant b^2 - c is zero";
        case PolyDefect::discriminant_not_squarefree:
            return head + ": discriminant " + std::to_string(delta) + " is not squarefree";
        case PolyDefect::discriminant_one_mod_four:
            return head + ": discriminant " + std::to_string(delta) + " is 1 mod 4";
        case PolyDefect::coefficients_out_of_range:
            return head + ": coefficients or discriminant exceed the supported range (1e12)";
    }
    return head;
}

}  // namespace

QuadraticPoly::QuadraticPoly(std::int64_t b, std::int64_t c) : b_(b), c_(c) {
    if (std::llabs(b) > kMaxCoefficient || std::llabs(c) > kMaxCoefficient)
        throw InvalidPoly(PolyDefect::coefficients_out_of_range,
                          defect_message(PolyDefect::coefficients_out_of_range, b, c, 0));

    const int128 d = static_cast<int128>(b) * b - c;
    // |delta| <= 1e12 keeps the squarefree test conclusive (trial division
    // reaches the cube root) and delta itself in 64 bits.
    if (d > kMaxCoefficient || d < -kMaxCoefficient)
        throw InvalidPoly(PolyDefect::coefficients_out_of_range,
                          defect_message(PolyDefect::coefficients_out_of_range, b, c, 0));
    delta_ = static_cast<std::int64_t>(d);

    if (d == 0)
        throw InvalidPoly(PolyDefect::zero_discriminant,
                          defect_message(PolyDefect::zero_discriminant, b, c, 0));

    // Representative of delta mod 4 in {0,1,2,3}.
    const int rem = static_cast<int>(((d % 4) + 4) % 4);
    if (rem == 1)
        throw InvalidPoly(PolyDefect::discriminant_one_mod_four,
                          defect_message(PolyDefect::discriminant_one_mod_four, b, c,
                                         static_cast<std::int64_t>(d)));

    const unsigned __int128 abs_d =
        d < 0 ? static_cast<unsigned __int128>(-d) : static_cast<unsigned __int128>(d);
    if (!is_squarefree(static_cast<std::uint64_t>(abs_d)))
        throw InvalidPoly(PolyDefect::discriminant_not_squarefree,
                          defect_message(PolyDefect::discriminant_not_squarefree, b, c,
                                         static_cast<std::int64_t>(d)));
}

std::string QuadraticPoly::name() const {
    std::string s = "n^2";
    if (b_ != 0) {
        const std::int64_t lin = 2 * b_;
        s += (lin > 0 ? "+" : "-") + std::to_string(std::llabs(lin)) + "n";
    }
    if (c_ != 0) s += (c_ > 0 ? "+" : "-") + std::to_string(std::llabs(c_));
    return s;
}

}  // namespace taubound
