#include "lambda3/fullsystem.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lambda3/errors.hpp"
#include "lambda3/format.hpp"
#include "lambda3/rk4.hpp"

namespace lambda3 {

FullState FullState::excited() {
    FullState s;
    s.rho = Eigen::Matrix3cd::Zero();
    s.rho(1, 1) = 1.0;
    return s;
}

void FullState::validate() const {
    const double herm = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
    if (!(herm <= 1e-10))
        throw InvalidStateError(
            "density matrix is not hermitian (deviation " +
            format_short(herm) + ")");
    for (int i = 0; i < 3; ++i) {
        const std::complex<double> d = rho(i, i);
        if (!(std::abs(d.imag()) <= 1e-10))
            throw InvalidStateError("population " + std::to_string(i) +
                                    " has an imaginary part");
        if (!(d.real() >= -1e-8 && d.real() <= 1.0 + 1e-8))
            throw InvalidStateError("population " + std::to_string(i) +
                                    " must lie in [0, 1], got " +
                                    format_short(d.real()));
    }
    const double tr = rho.trace().real();
    if (!(std::abs(tr - 1.0) <= 1e-5))
        throw InvalidStateError("trace must be 1, got " + format_short(tr));
}

Eigen::Matrix3cd drive_coupling_over_hbar(double omega) {
    Eigen::Matrix3cd v = Eigen::Matrix3cd::Zero();
    v(0, 1) = omega / 2.0;
    v(1, 0) = omega / 2.0;
    return v;
}

FullState embed(const DensityVector& v) {
    FullState s;
    s.rho = Eigen::Matrix3cd::Zero();
    s.rho(0, 0) = v.rho00;
    s.rho(1, 1) = v.rho11;
    s.rho(2, 2) = v.rho22;
    s.rho(0, 1) = std::complex<double>(0.0, v.rhoB);
    s.rho(1, 0) = std::complex<double>(0.0, -v.rhoB);
    return s;
}

const FullState& FullTrajectory::at_time(double t) const {
    const auto it = std::lower_bound(times.begin(), times.end(), t - 1e-9);
    const auto idx = static_cast<std::size_t>(it - times.begin());
    if (idx < times.size() && std::abs(times[idx] - t) <= 1e-9)
        return states[idx];
    throw InvalidParameterError("t = " + format_short(t) +
                                " is not a sample time of this trajectory");
}

namespace {

// d rho/dt = -i (omega/2) [X, rho] + relaxation, X = |0><1| + |1><0|.
Eigen::Matrix3cd master_rhs(const SystemParams& p,
                            const Eigen::Matrix3cd& rho) {
    const std::complex<double> mi(0.0, -1.0);
    const double g = p.omega / 2.0;

    // X rho swaps rows 0 and 1; rho X swaps columns 0 and 1.
    Eigen::Matrix3cd commutator = Eigen::Matrix3cd::Zero();
    commutator.row(0) = rho.row(1);
    commutator.row(1) = rho.row(0);
    commutator.col(0) -= rho.col(1);
    commutator.col(1) -= rho.col(0);

    Eigen::Matrix3cd out = (mi * g) * commutator;

    const double k01 = p.k01();
    const double g2 = 1.0 / p.t2;
    out(0, 0) += k01 * rho(1, 1) + p.k02 * rho(2, 2);
    out(1, 1) -= (k01 + p.k21) * rho(1, 1);
    out(2, 2) += p.k21 * rho(1, 1) - p.k02 * rho(2, 2);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (i != j) out(i, j) -= g2 * rho(i, j);
    return out;
}

}  // namespace

FullTrajectory evolve_full(const SystemParams& params, const FullState& init,
                           double t_end, double dt, int stride) {
    params.validate();
    init.validate();
    if (!(std::isfinite(t_end) && t_end > 0.0))
        throw InvalidParameterError("t_end must be > 0");
    if (!(std::isfinite(dt) && dt > 0.0))
        throw InvalidParameterError("dt must be > 0");
    if (stride < 1) throw InvalidParameterError("stride must be >= 1");

    const long long n = std::max(1LL, std::llround(t_end / dt));
    const double h = t_end / static_cast<double>(n);

    auto deriv = [&params](const Eigen::Matrix3cd& r) -> Eigen::Matrix3cd {
        return master_rhs(params, r);
    };

    FullTrajectory traj;
    traj.params = params;
    traj.times.push_back(0.0);
    traj.states.push_back(init);

    Eigen::Matrix3cd rho = init.rho;
    for (long long i = 1; i <= n; ++i) {
        rho = rk4_step(rho, h, deriv);
        const double drift = std::abs(rho.trace().real() - 1.0) +
                             std::abs(rho.trace().imag());
        if (!(drift <= 1e-5))
            throw StepSizeError(
                "trace conservation lost at t = " +
                format_short(static_cast<double>(i) * t_end /
                               static_cast<double>(n)) +
                " (|tr - 1| = " + format_short(drift) +
                "); reduce dt below " + format_short(h));
        if (i % stride == 0 || i == n) {
            traj.times.push_back(static_cast<double>(i) * t_end /
                                 static_cast<double>(n));
            traj.states.push_back(FullState{rho});
        }
    }
    return traj;
}

DensityVector reduce(const FullState& s) {
    return DensityVector{s.rho(0, 0).real(), s.rho(0, 1).imag(),
                         s.rho(1, 1).real(), s.rho(2, 2).real()};
}

double decoupling_residual(const FullTrajectory& traj) {
    double worst = 0.0;
    for (const auto& s : traj.states) {
        worst = std::max({worst, std::abs(s.rho(0, 2)), std::abs(s.rho(1, 2)),
                          std::abs(s.rho(2, 0)), std::abs(s.rho(2, 1)),
                          std::abs(s.rho(0, 1).real()),
                          std::abs(s.rho(1, 0).real())});
    }
    return worst;
}

double hermiticity_drift(const FullTrajectory& traj) {
    double worst = 0.0;
    for (const auto& s : traj.states)
        worst = std::max(
            worst,
            (s.rho - s.rho.adjoint()).cwiseAbs().maxCoeff());
    return worst;
}

double trace_drift(const FullTrajectory& traj) {
    double worst = 0.0;
    for (const auto& s : traj.states)
        worst = std::max(worst, std::abs(s.rho.trace() -
                                         std::complex<double>(1.0, 0.0)));
    return worst;
}

}  // namespace lambda3
