#include "lambda3/analysis.hpp"

#include <cmath>
#include <string>

#include "lambda3/errors.hpp"
#include "lambda3/format.hpp"

namespace lambda3 {

const char* component_name(Component c) {
    switch (c) {
        case Component::rho00: return "rho00";
        case Component::rhoB: return "rhoB";
        case Component::rho11: return "rho11";
        case Component::rho22: return "rho22";
    }
    return "?";
}

double component_value(const DensityVector& v, Component c) {
    switch (c) {
        case Component::rho00: return v.rho00;
        case Component::rhoB: return v.rhoB;
        case Component::rho11: return v.rho11;
        case Component::rho22: return v.rho22;
    }
    return 0.0;
}

DecayFit fit_decay_constant(const Trajectory& traj, const SteadyState& target,
                            Component component, double t_first,
                            double t_second, double floor) {
    if (!(t_first < t_second))
        throw InvalidParameterError("need t_first < t_second");
    if (!(floor > 0.0)) throw InvalidParameterError("floor must be > 0");

    const double goal = component_value(target.rho, component);
    const double r1 = component_value(traj.at_time(t_first), component) - goal;
    const double r2 = component_value(traj.at_time(t_second), component) - goal;
    const char* name = component_name(component);

    if (std::abs(r1) < floor || std::abs(r2) < floor)
        throw InsufficientSignalError(
            std::string(name) +
            " has already relaxed below the significance floor between t = " +
            format_short(t_first) + " and " + format_short(t_second));
    if ((r1 > 0.0) != (r2 > 0.0))
        throw InsufficientSignalError(
            std::string(name) +
            " residual changes sign across the fit window; not a one-sided "
            "exponential approach");
    if (!(std::abs(r2) < std::abs(r1)))
        throw InsufficientSignalError(
            std::string(name) +
            " residual does not shrink across the fit window; no decay to fit");

    DecayFit fit;
    fit.component = component;
    fit.t_first = t_first;
    fit.t_second = t_second;
    fit.residual_first = r1;
    fit.residual_second = r2;
    fit.tau = (t_second - t_first) / std::log(std::abs(r1) / std::abs(r2));
    return fit;
}

double effective_initial_decay(const SystemParams& params) {
    params.validate();
    return 1.0 / (params.k01() + params.k21);
}

std::vector<SweepRow> sweep(const SystemParams& params,
                            const std::vector<double>& omegas) {
    params.validate();
    if (omegas.empty())
        throw InvalidParameterError("sweep needs at least one omega");
    for (std::size_t i = 1; i < omegas.size(); ++i)
        if (!(omegas[i] > omegas[i - 1]))
            throw InvalidParameterError("sweep omegas must be ascending");

    std::vector<SweepRow> rows;
    rows.reserve(omegas.size());
    for (const double om : omegas) {
        const SystemParams p = params.with_omega(om);
        SweepRow row;
        row.omega = om;
        row.steady = steady_state(p);
        row.spectrum = eigenvalues(p);
        row.tau3 = row.spectrum.taus[2];
        rows.push_back(row);
    }
    return rows;
}

double tau3_loglog_slope(const SystemParams& params,
                         const std::vector<double>& omegas) {
    if (omegas.size() < 2)
        throw InvalidParameterError("slope needs at least two omegas");

    // Least squares of log(tau3) on log(omega).
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (const double om : omegas) {
        if (!(om > 0.0))
            throw InvalidParameterError("slope omegas must be > 0");
        const double x = std::log(om);
        const double y = std::log(eigenvalues(params.with_omega(om)).taus[2]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double n = static_cast<double>(omegas.size());
    const double denom = n * sxx - sx * sx;
    if (!(std::abs(denom) > 0.0))
        throw InvalidParameterError("slope omegas must not all coincide");
    return (n * sxy - sx * sy) / denom;
}

}  // namespace lambda3
