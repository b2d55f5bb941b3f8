#include "lambda3/steady_state.hpp"

#include <cmath>
#include <string>

#include "lambda3/errors.hpp"
#include "lambda3/format.hpp"

namespace lambda3 {

SteadyState steady_state(const SystemParams& p) {
    p.validate();
    if (p.omega == 0.0)
        return SteadyState{DensityVector{1.0, 0.0, 0.0, 0.0}};

    const double om = p.omega;
    const double denom = om * om * (1.0 + p.k21 / (2.0 * p.k02)) +
                         1.0 / (p.t1 * p.t2) + p.k21 / p.t2;
    const double rho11 = (om * om / 2.0) / denom;
    const double rho22 = (p.k21 / p.k02) * rho11;
    const double rhoB = (p.k01() + p.k21) * rho11 / om;
    const double rho00 = rho11 + (2.0 / (om * p.t2)) * rhoB;
    return SteadyState{DensityVector{rho00, rhoB, rho11, rho22}};
}

double saturation_limit(const SystemParams& p) {
    p.validate();
    return 1.0 / (2.0 + p.k21 / p.k02);
}

std::optional<double> crossover_omega(const SystemParams& p) {
    p.validate();
    if (p.k21 <= p.k02) return std::nullopt;
    return std::sqrt(2.0 * (p.k01() + p.k21) /
                     (p.t2 * (p.k21 / p.k02 - 1.0)));
}

std::optional<double> crossover_omega_bisect(const SystemParams& p,
                                             double omega_lo, double omega_hi,
                                             double tol) {
    p.validate();
    if (p.k21 <= p.k02) return std::nullopt;
    if (!(omega_lo > 0.0 && omega_lo < omega_hi))
        throw InvalidParameterError("need 0 < omega_lo < omega_hi");
    if (!(tol > 0.0)) throw InvalidParameterError("tol must be > 0");

    // rho22(inf) - rho00(inf) grows monotonically with the drive here.
    auto gap = [&p](double om) {
        const DensityVector r = steady_state(p.with_omega(om)).rho;
        return r.rho22 - r.rho00;
    };

    double lo = omega_lo, hi = omega_hi;
    const double g_lo = gap(lo), g_hi = gap(hi);
    if (!(g_lo < 0.0 && g_hi > 0.0))
        throw BracketError(
            "bracket [" + format_short(lo) + ", " + format_short(hi) +
            "] does not straddle the population crossing: gap is " +
            format_short(g_lo) + " at the left edge and " +
            format_short(g_hi) + " at the right");

    while (hi - lo > tol) {
        const double mid = lo + (hi - lo) / 2.0;
        if (mid <= lo || mid >= hi) break;
        (gap(mid) < 0.0 ? lo : hi) = mid;
    }
    return lo + (hi - lo) / 2.0;
}

}  // namespace lambda3
