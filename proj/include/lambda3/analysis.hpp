#pragma once

#include <vector>

#include "lambda3/integrator.hpp"
#include "lambda3/steady_state.hpp"

namespace lambda3 {

// Which reduced-state component an analysis refers to.
enum class Component { rho00, rhoB, rho11, rho22 };

const char* component_name(Component c);
double component_value(const DensityVector& v, Component c);

// Exponential time constant extracted from two samples of the approach to a
// target value: tau = (t2 - t1) / ln(|r(t1)| / |r(t2)|) with r = x - target.
struct DecayFit {
    Component component;
    double t_first;
    double t_second;
    double residual_first;   // x(t_first) - target
    double residual_second;  // x(t_second) - target
    double tau;
};

// Fit the late-time decay constant of one component toward its steady value.
// t_first/t_second must be sample times of traj (defaults 11 and 14, late
// enough that only the slowest mode survives at the bundled parameters).
// Throws InsufficientSignalError if either residual's magnitude is below
// floor (nothing left to fit), if the residuals differ in sign (not a
// one-sided exponential approach), or if the residual fails to shrink.
DecayFit fit_decay_constant(const Trajectory& traj, const SteadyState& target,
                            Component component, double t_first = 11.0,
                            double t_second = 14.0, double floor = 1e-12);

// Early-time decay constant of the upper level when it starts fully
// populated: 1 / (1/t1 + k21), before the drive repopulates it.
double effective_initial_decay(const SystemParams& params);

// Steady state, spectrum, and slow-mode lifetime across drive strengths.
struct SweepRow {
    double omega;
    SteadyState steady;
    Spectrum spectrum;
    double tau3;  // -1 / Re(gamma3), the slow relaxation time
};

// Evaluate the closed-form quantities at each drive strength (ascending
// omegas required). No integration involved.
std::vector<SweepRow> sweep(const SystemParams& params,
                            const std::vector<double>& omegas);

// Least-squares slope of log(tau3) against log(omega) over the given omegas;
// used to characterise the intermediate-drive power-law decrease of the slow
// lifetime. Requires at least two distinct positive omegas.
double tau3_loglog_slope(const SystemParams& params,
                         const std::vector<double>& omegas);

}  // namespace lambda3
