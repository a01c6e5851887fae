#include "taubound/bounds.hpp"

#include <stdexcept>
#include <string>

#include "taubound/arith.hpp"
#include "taubound/rounding.hpp"

namespace taubound {

namespace {

using rnd::add_up;
using rnd::div_up;
using rnd::mul_up;

// f is convex with integer vertex at n = -b, so its minimum over the
// integers of [1, N] is attained at the clamped vertex.
int128 min_f_on_range(const QuadraticPoly& f, std::uint64_t n) {
    std::int64_t vertex = -f.b();
    if (vertex < 1) vertex = 1;
    if (vertex > static_cast<std::int64_t>(n)) vertex = static_cast<std::int64_t>(n);
    return f(vertex);
}

}  // namespace

BoundBreakdown theorem2_bound(const QuadraticPoly& f, std::uint64_t n,
                              const CertifiedValue& l_value) {
    if (n < 1) throw std::domain_error("theorem2_bound: N must be >= 1");
    if (min_f_on_range(f, n) < 0)
        throw std::domain_error("theorem2_bound: f takes a negative value on [1, N]");
    const int128 f_n = f(static_cast<std::int64_t>(n));
    if (f_n < f(1))
        throw std::domain_error("theorem2_bound: f(N) < f(1)");

    // X = sqrt(f(N)) bracketed to one ulp; each term picks the end of the
    // bracket that keeps it an upper bound.
    const auto f_n_real = static_cast<double>(f_n);  // f_n >= 0; <= 2^63 at desk scale
    const double x_up = rnd::sqrt_up(rnd::up(f_n_real));
    const double x_down = rnd::sqrt_down(rnd::down(f_n_real));

    const double l_up = l_value.upper();
    const double m = m_delta(f.delta());
    const double z2_down = rnd::zeta2_down();
    const auto n_real = static_cast<double>(n);

    BoundBreakdown out;
    out.n = n;
    out.x = x_up;
    out.main_term =
        mul_up(mul_up(div_up(2.0, z2_down), l_up), mul_up(n_real, rnd::log_up(x_up)));
    out.linear_term = mul_up(
        add_up(mul_up(2.332, l_up), div_up(mul_up(4.0, m), z2_down)), n_real);
    out.x_term = mul_up(div_up(mul_up(2.0, m), z2_down), x_up);
    const double tail_coeff =
        mul_up(rnd::sqrt3_up(), mul_up(rnd::one_minus_inv_zeta2_up(), m));
    out.n_over_sqrtx_term =
        mul_up(4.0, div_up(mul_up(tail_coeff, n_real), rnd::sqrt_down(x_down)));
    out.sqrtx_term = mul_up(2.0, mul_up(tail_coeff, rnd::sqrt_up(x_up)));
    out.total = add_up(
        add_up(add_up(out.main_term, out.linear_term), add_up(out.x_term, out.n_over_sqrtx_term)),
        out.sqrtx_term);
    return out;
}

double corollary1_bound(std::uint64_t n) {
    if (n < 1) throw std::domain_error("corollary1_bound: N must be >= 1");
    const auto nd = static_cast<double>(n);
    const double main = mul_up(div_up(3.0, rnd::pi_down()), mul_up(nd, rnd::log_up(nd)));
    return add_up(add_up(main, mul_up(3.0475, nd)), mul_up(1.3586, rnd::sqrt_up(nd)));
}

CertifiedValue asymptotic_constant(const CertifiedValue& l_value) {
    const double scale = 2.0 / ((rnd::zeta2_up() + rnd::zeta2_down()) / 2.0);
    const double value = scale * l_value.value;
    // linear propagation plus a couple of ulps for the scale itself
    const double radius =
        add_up(mul_up(scale, l_value.error_radius),
               mul_up(4.0 * std::numeric_limits<double>::epsilon(),
                      std::abs(value) + l_value.error_radius));
    return CertifiedValue{value, radius};
}

double ramare_bound(double x) {
    if (!(x >= 1)) throw std::domain_error("ramare_bound: x must be >= 1");
    return add_up(div_up(rnd::log_up(x), rnd::zeta2_down()), 1.166);
}

double moser_macleod_radius(std::uint64_t n) {
    if (n < 1) throw std::domain_error("moser_macleod_radius: N must be >= 1");
    return mul_up(0.6793, rnd::sqrt_up(static_cast<double>(n)));
}

}  // namespace taubound
