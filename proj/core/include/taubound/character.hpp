#pragma once

#include <cstdint>
#include <vector>

#include "taubound/poly.hpp"
#include "taubound/rounding.hpp"

namespace taubound {

/// A real value together with a rigorous error radius: the exact quantity
/// is guaranteed to lie in [value - error_radius, value + error_radius].
struct CertifiedValue {
    double value = 0.0;
    double error_radius = 0.0;

    double upper() const noexcept { return rnd::up(value + error_radius); }
    double lower() const noexcept { return rnd::down(value - error_radius); }
    bool contains(double x) const noexcept { return lower() <= x && x <= upper(); }
    bool overlaps(const CertifiedValue& o) const noexcept {
        return lower() <= o.upper() && o.lower() <= upper();
    }

    bool operator==(const CertifiedValue&) const = default;
};

enum class Parity { even, odd };

/// The real primitive character chi(n) = (4*delta | n) of conductor
/// 4|delta|. One period is tabulated at construction, which also checks
/// that the period sums to zero and that chi(-1) matches the parity.
class QuadraticCharacter {
public:
    explicit QuadraticCharacter(std::int64_t delta);
    explicit QuadraticCharacter(const QuadraticPoly& f)
        : QuadraticCharacter(f.delta()) {}

    std::int64_t delta() const noexcept { return delta_; }
    std::int64_t modulus() const noexcept { return modulus_; }
    Parity parity() const noexcept { return parity_; }

    /// chi(n) for n >= 1.
    int operator()(std::uint64_t n) const noexcept {
        return period_[n % static_cast<std::uint64_t>(modulus_)];
    }

    /// Exact sum_{n=low}^{high} chi(n), 1 <= low <= high. O(1) via the
    /// period prefix table (full periods cancel).
    std::int64_t partial_sum(std::uint64_t low, std::uint64_t high) const;

    /// Exact max over 1 <= L <= P of |sum_{n=L}^{P} chi(n)|. One period
    /// suffices; equals (max - min) of the prefix sums including X(0)=0.
    std::int64_t max_partial_sum() const noexcept;

private:
    std::int64_t prefix(std::uint64_t n) const;  // sum_{m<=n} chi(m)

    std::int64_t delta_;
    std::int64_t modulus_;
    Parity parity_;
    std::vector<std::int8_t> period_;    // chi(n mod q), index 0 = chi(q)=0
    std::vector<std::int32_t> prefix_;   // prefix_[k] = sum_{n<=k} chi(n), k<=q
};

/// Explicit Polya-Vinogradov constant for a primitive character mod q > 1:
///   even: (2/pi^2) sqrt(q) log q + 0.9467 sqrt(q) + 1.668
///   odd:  (1/2pi)  sqrt(q) log q + 0.8204 sqrt(q) + 1.0285
/// Evaluated with upward rounding so the bound direction is preserved.
double polya_vinogradov_bound(std::int64_t q, Parity parity);

/// The same bound parameterized by a valid delta (q = 4|delta|):
///   delta > 0: (4/pi^2) sqrt(delta) log(4 delta) + 1.8934 sqrt(delta) + 1.668
///   delta < 0: (1/pi) sqrt|delta| log(4|delta|) + 1.6408 sqrt|delta| + 1.0285
double m_delta(std::int64_t delta);

/// Certified L(1,chi) from the truncated Dirichlet series: the tail after N
/// terms is bounded by 2*m_delta/N, so N = ceil(2*m_delta/epsilon) gives
/// truncation error <= epsilon. The returned radius also covers summation
/// rounding.
CertifiedValue l_one(const QuadraticCharacter& chi, double epsilon = 1e-6);

}  // namespace taubound
