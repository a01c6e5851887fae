#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace taubound {

using int128 = __int128;

enum class PolyDefect {
    zero_discriminant,
    discriminant_not_squarefree,
    discriminant_one_mod_four,
    coefficients_out_of_range,
};

class InvalidPoly : public std::invalid_argument {
public:
    InvalidPoly(PolyDefect defect, const std::string& what)
        : std::invalid_argument(what), defect_(defect) {}
    PolyDefect defect() const noexcept { return defect_; }

private:
    PolyDefect defect_;
};

/// Monic quadratic f(n) = n^2 + 2bn + c with validated discriminant
/// delta = b^2 - c: nonzero, squarefree and not 1 mod 4, so that 4*delta
/// is a fundamental discriminant. Construction throws InvalidPoly otherwise.
class QuadraticPoly {
public:
    QuadraticPoly(std::int64_t b, std::int64_t c);

    std::int64_t b() const noexcept { return b_; }
    std::int64_t c() const noexcept { return c_; }
    std::int64_t delta() const noexcept { return delta_; }

    /// f(n) = (n + b)^2 - delta, evaluated in 128 bits so no argument in
    /// the supported range can overflow.
    int128 operator()(std::int64_t n) const noexcept {
        const int128 s = static_cast<int128>(n) + b_;
        return s * s - delta_;
    }

    /// Human-readable "n^2 + 2bn + c".
    std::string name() const;

    bool operator==(const QuadraticPoly&) const = default;

private:
    std::int64_t b_, c_, delta_;
};

}  // namespace taubound
