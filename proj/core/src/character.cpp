#include "taubound/character.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "taubound/arith.hpp"

namespace taubound {

QuadraticCharacter::QuadraticCharacter(std::int64_t delta) : delta_(delta) {
    // Same admissibility rules as QuadraticPoly; b = 0, c = -delta realizes
    // this delta, so reuse its validation.
    (void)QuadraticPoly(0, -delta);

    modulus_ = 4 * (delta_ < 0 ? -delta_ : delta_);
    if (modulus_ > 10'000'000)
        throw std::domain_error("QuadraticCharacter: modulus " + std::to_string(modulus_) +
                                " too large to tabulate a period");
    parity_ = delta_ > 0 ? Parity::even : Parity::odd;

    const std::int64_t four_delta = 4 * delta_;
    period_.resize(static_cast<std::size_t>(modulus_));
    prefix_.assign(static_cast<std::size_t>(modulus_) + 1, 0);
    std::int32_t running = 0;
    for (std::int64_t n = 1; n <= modulus_; ++n) {
        const int v = kronecker(four_delta, n);
        period_[static_cast<std::size_t>(n % modulus_)] = static_cast<std::int8_t>(v);
        running += v;
        prefix_[static_cast<std::size_t>(n)] = running;
    }
    if (running != 0)
        throw std::logic_error("QuadraticCharacter: period does not sum to zero");
    const int at_minus_one = period_[static_cast<std::size_t>(modulus_ - 1)];
    if (at_minus_one != (parity_ == Parity::even ? 1 : -1))
        throw std::logic_error("QuadraticCharacter: chi(-1) disagrees with parity");
}

std::int64_t QuadraticCharacter::prefix(std::uint64_t n) const {
    // sum_{m<=n} chi(m); full periods cancel.
    return prefix_[n % static_cast<std::uint64_t>(modulus_)];
}

std::int64_t QuadraticCharacter::partial_sum(std::uint64_t low, std::uint64_t high) const {
    if (low < 1 || low > high)
        throw std::domain_error("partial_sum: need 1 <= low <= high");
    return prefix(high) - prefix(low - 1);
}

std::int64_t QuadraticCharacter::max_partial_sum() const noexcept {
    std::int32_t lo = 0, hi = 0;  // prefix_[0] = 0 participates
    for (const std::int32_t x : prefix_) {
        if (x < lo) lo = x;
        if (x > hi) hi = x;
    }
    return static_cast<std::int64_t>(hi) - lo;
}

double polya_vinogradov_bound(std::int64_t q, Parity parity) {
    if (q <= 1) throw std::domain_error("polya_vinogradov_bound: q must exceed 1");
    const auto qd = static_cast<double>(q);
    const double sq = rnd::sqrt_up(qd);
    const double lg = rnd::log_up(qd);
    if (parity == Parity::even) {
        const double lead = rnd::mul_up(rnd::div_up(2.0, rnd::mul_down(rnd::pi_down(), rnd::pi_down())),
                                        rnd::mul_up(sq, lg));
        return rnd::add_up(rnd::add_up(lead, rnd::mul_up(0.9467, sq)), 1.668);
    }
    const double lead = rnd::mul_up(rnd::div_up(1.0, rnd::mul_down(2.0, rnd::pi_down())),
                                    rnd::mul_up(sq, lg));
    return rnd::add_up(rnd::add_up(lead, rnd::mul_up(0.8204, sq)), 1.0285);
}

double m_delta(std::int64_t delta) {
    (void)QuadraticPoly(0, -delta);  // validate
    if (delta > 0) {
        const auto d = static_cast<double>(delta);
        const double sq = rnd::sqrt_up(d);
        const double lead = rnd::mul_up(rnd::div_up(4.0, rnd::mul_down(rnd::pi_down(), rnd::pi_down())),
                                        rnd::mul_up(sq, rnd::log_up(4.0 * d)));
        return rnd::add_up(rnd::add_up(lead, rnd::mul_up(1.8934, sq)), 1.668);
    }
    const auto d = static_cast<double>(-delta);
    const double sq = rnd::sqrt_up(d);
    const double lead = rnd::mul_up(rnd::div_up(1.0, rnd::pi_down()),
                                    rnd::mul_up(sq, rnd::log_up(4.0 * d)));
    return rnd::add_up(rnd::add_up(lead, rnd::mul_up(1.6408, sq)), 1.0285);
}

CertifiedValue l_one(const QuadraticCharacter& chi, double epsilon) {
    if (!(epsilon > 0)) throw std::domain_error("l_one: epsilon must be positive");
    const double m = m_delta(chi.delta());
    const double want = std::ceil(2.0 * m / epsilon);
    if (want > 2e9)
        throw std::domain_error("l_one: epsilon " + std::to_string(epsilon) +
                                " needs " + std::to_string(want) + " terms; refusing");
    const auto terms = static_cast<std::uint64_t>(want);

    // Compensated sum of chi(n)/n. Kahan keeps the actual error near one
    // ulp; the certified radius uses the worst-case bound
    // 4 eps_machine * sum |chi(n)/n| <= 4 eps_machine * (log N + 1),
    // which covers compensation (2 eps), per-term division (1 eps) and
    // second-order terms.
    double sum = 0.0, comp = 0.0;
    for (std::uint64_t n = 1; n <= terms; ++n) {
        const int v = chi(n);
        if (v == 0) continue;
        const double term = static_cast<double>(v) / static_cast<double>(n);
        const double y = term - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }

    const double tail = rnd::div_up(rnd::mul_up(2.0, m), static_cast<double>(terms));
    const double rounding_slack =
        rnd::mul_up(4.0 * std::numeric_limits<double>::epsilon(),
                    rnd::add_up(rnd::log_up(static_cast<double>(terms)), 1.0));
    return CertifiedValue{sum, rnd::add_up(tail, rounding_slack)};
}

}  // namespace taubound
