#include "lambda3/integrator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "lambda3/errors.hpp"
#include "lambda3/format.hpp"
#include "lambda3/rk4.hpp"

namespace lambda3 {

void InitialCondition::validate() const {
    const double pops[3] = {state.rho00, state.rho11, state.rho22};
    const char* names[3] = {"rho00", "rho11", "rho22"};
    for (int i = 0; i < 3; ++i) {
        if (!(std::isfinite(pops[i]) && pops[i] >= -1e-12 &&
              pops[i] <= 1.0 + 1e-12))
            throw InvalidStateError(std::string("initial ") + names[i] +
                                    " must lie in [0, 1]");
    }
    if (!(std::isfinite(state.rhoB) && std::abs(state.rhoB) <= 0.5))
        throw InvalidStateError("initial rhoB must lie in [-0.5, 0.5]");
    if (!(std::abs(state.population_sum() - 1.0) <= 1e-9))
        throw InvalidStateError("initial populations must sum to 1, got " +
                                format_short(state.population_sum()));
}

const DensityVector& Trajectory::at_time(double t) const {
    // times is increasing, so binary-search the insertion point.
    const auto it = std::lower_bound(times.begin(), times.end(), t - 1e-9);
    const auto idx = static_cast<std::size_t>(it - times.begin());
    if (idx < times.size() && std::abs(times[idx] - t) <= 1e-9)
        return states[idx];
    throw InvalidParameterError("t = " + format_short(t) +
                                " is not a sample time of this trajectory");
}

namespace {

void check_grid(double t_end, double dt, int stride) {
    if (!(std::isfinite(t_end) && t_end > 0.0))
        throw InvalidParameterError("t_end must be > 0");
    if (!(std::isfinite(dt) && dt > 0.0))
        throw InvalidParameterError("dt must be > 0");
    if (stride < 1) throw InvalidParameterError("stride must be >= 1");
}

}  // namespace

Trajectory evolve(const SystemParams& params, const InitialCondition& init,
                  double t_end, double dt, int stride) {
    init.validate();
    check_grid(t_end, dt, stride);
    const GeneratorMatrix gen = build_generator(params);
    const Eigen::Matrix4d& L = gen.entries;

    // Integer number of steps spanning [0, t_end] exactly.
    const long long n = std::max(1LL, std::llround(t_end / dt));
    const double h = t_end / static_cast<double>(n);

    auto deriv = [&L](const Eigen::Vector4d& x) -> Eigen::Vector4d {
        return L * x;
    };

    Trajectory traj;
    traj.params = params;
    traj.times.reserve(static_cast<std::size_t>(n / stride) + 2);
    traj.states.reserve(static_cast<std::size_t>(n / stride) + 2);

    Eigen::Vector4d x = init.state.to_vector();
    traj.times.push_back(0.0);
    traj.states.push_back(init.state);

    for (long long i = 1; i <= n; ++i) {
        x = rk4_step(x, h, deriv);
        // The population sum is conserved by the scheme itself, so any
        // drift beyond roundoff means the step is unstable. The negated
        // comparison also trips on NaN.
        const double drift = std::abs(x[0] + x[2] + x[3] - 1.0);
        if (!(drift <= 1e-5))
            throw StepSizeError(
                "population conservation lost at t = " +
                format_short(static_cast<double>(i) * t_end /
                               static_cast<double>(n)) +
                " (|sum - 1| = " + format_short(drift) +
                "); reduce dt below " + format_short(h));
        if (i % stride == 0 || i == n) {
            traj.times.push_back(static_cast<double>(i) * t_end /
                                 static_cast<double>(n));
            traj.states.push_back(DensityVector::from_vector(x));
        }
    }
    return traj;
}

double conservation_residual(const Trajectory& traj) {
    double worst = 0.0;
    for (const auto& s : traj.states)
        worst = std::max(worst, std::abs(s.population_sum() - 1.0));
    return worst;
}

double coherence_bound_violation(const Trajectory& traj) {
    double worst = -std::numeric_limits<double>::infinity();
    for (const auto& s : traj.states) {
        const double bound =
            2.0 * std::sqrt(std::max(0.0, s.rho00) * std::max(0.0, s.rho11)) +
            1e-6;
        worst = std::max(worst, std::abs(s.rhoB) - bound);
    }
    return worst;
}

ModeExpansion decompose(const SystemParams& params,
                        const InitialCondition& init, double cond_limit) {
    init.validate();
    const GeneratorMatrix gen = build_generator(params);
    const Spectrum spec = eigenvalues(gen);
    const Eigen::Matrix4cd Lc = gen.entries.cast<std::complex<double>>();

    // Eigenvector per eigenvalue: the right singular vector of (L - gamma I)
    // belonging to its smallest singular value.
    Eigen::Matrix4cd V;
    for (int k = 0; k < 4; ++k) {
        const Eigen::Matrix4cd shifted =
            Lc - spec.gammas[k] * Eigen::Matrix4cd::Identity();
        Eigen::JacobiSVD<Eigen::Matrix4cd> svd(shifted, Eigen::ComputeFullV);
        V.col(k) = svd.matrixV().col(3);
    }

    Eigen::JacobiSVD<Eigen::Matrix4cd> vsvd(V);
    const double cond =
        vsvd.singularValues()(0) / vsvd.singularValues()(3);
    if (!(cond <= cond_limit))
        throw IllConditionedError(
            "eigenvector matrix is ill conditioned (cond = " +
            format_short(cond) + ") at omega = " +
            format_short(params.omega) +
            "; the mode expansion is unreliable near degenerate eigenvalues");

    const Eigen::Vector4cd weights =
        V.fullPivLu().solve(init.state.to_vector().cast<std::complex<double>>());

    ModeExpansion mx;
    mx.gammas = spec.gammas;
    mx.coeffs = V * weights.asDiagonal();
    return mx;
}

Trajectory exact_solution(const SystemParams& params,
                          const InitialCondition& init,
                          const std::vector<double>& times,
                          double cond_limit) {
    const ModeExpansion mx = decompose(params, init, cond_limit);

    Trajectory traj;
    traj.params = params;
    traj.times = times;
    traj.states.reserve(times.size());

    for (const double t : times) {
        if (!(std::isfinite(t) && t >= 0.0))
            throw InvalidParameterError("sample times must be >= 0");
        if (t == 0.0) {
            traj.states.push_back(init.state);
            continue;
        }
        Eigen::Vector4cd phases;
        for (int k = 0; k < 4; ++k)
            phases[k] = std::exp(mx.gammas[k] * t);
        const Eigen::Vector4cd xc = mx.coeffs * phases;
        const double worst_imag = xc.imag().cwiseAbs().maxCoeff();
        if (!(worst_imag <= 1e-10))
            throw NumericalError(
                "mode expansion left a residual imaginary part of " +
                format_short(worst_imag) + " at t = " + format_short(t));
        traj.states.push_back(DensityVector::from_vector(xc.real()));
    }
    return traj;
}

}  // namespace lambda3
