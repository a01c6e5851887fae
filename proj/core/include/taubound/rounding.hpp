#pragma once

#include <cmath>
#include <limits>
#include <numbers>

// Directed floating-point helpers. Every bound this library reports must
// hold regardless of rounding, so upper-bound formulas are evaluated with
// *_up steps and denominators / subtracted quantities with *_down steps.
// One ulp covers IEEE-correct operations (+,-,*,/,sqrt); log gets two ulps
// since libm only promises faithful rounding.

namespace taubound::rnd {

inline double up(double x) noexcept {
    return std::nextafter(x, std::numeric_limits<double>::infinity());
}
inline double down(double x) noexcept {
    return std::nextafter(x, -std::numeric_limits<double>::infinity());
}

inline double add_up(double a, double b) noexcept { return up(a + b); }
inline double add_down(double a, double b) noexcept { return down(a + b); }
inline double sub_up(double a, double b) noexcept { return up(a - b); }
inline double sub_down(double a, double b) noexcept { return down(a - b); }
inline double mul_up(double a, double b) noexcept { return up(a * b); }
inline double mul_down(double a, double b) noexcept { return down(a * b); }
inline double div_up(double a, double b) noexcept { return up(a / b); }
inline double div_down(double a, double b) noexcept { return down(a / b); }
inline double sqrt_up(double a) noexcept { return up(std::sqrt(a)); }
inline double sqrt_down(double a) noexcept { return down(std::sqrt(a)); }
inline double log_up(double a) noexcept { return up(up(std::log(a))); }
inline double log_down(double a) noexcept { return down(down(std::log(a))); }

// Bracketed constants. std::numbers rounds to nearest, so one ulp each way
// encloses the real value.
inline double pi_up() noexcept { return up(std::numbers::pi); }
inline double pi_down() noexcept { return down(std::numbers::pi); }

inline double zeta2_up() noexcept {       // zeta(2) = pi^2 / 6
    return div_up(mul_up(pi_up(), pi_up()), 6.0);
}
inline double zeta2_down() noexcept {
    return div_down(mul_down(pi_down(), pi_down()), 6.0);
}

inline double sqrt3_up() noexcept { return sqrt_up(3.0); }
inline double sqrt3_down() noexcept { return sqrt_down(3.0); }

// Upper bracket of 1 - 1/zeta(2).
inline double one_minus_inv_zeta2_up() noexcept {
    return sub_up(1.0, div_down(1.0, zeta2_up()));
}
inline double one_minus_inv_zeta2_down() noexcept {
    return sub_down(1.0, div_up(1.0, zeta2_down()));
}

}  // namespace taubound::rnd
