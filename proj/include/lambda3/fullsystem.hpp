#pragma once

#include <vector>

#include <Eigen/Dense>

#include "lambda3/model.hpp"

namespace lambda3 {

// Full 3x3 density matrix of the lambda system, in the rotating frame on
// resonance. Indices: 0 = ground, 1 = driven upper, 2 = second lower level.
struct FullState {
    Eigen::Matrix3cd rho;

    // All population in the driven upper level.
    static FullState excited();

    // Hermiticity within 1e-10, diagonal real and in [-1e-8, 1 + 1e-8],
    // trace within 1e-5 of 1; throws InvalidStateError otherwise.
    void validate() const;
};

// Drive coupling: the laser enters the Hamiltonian as V = (hbar omega / 2) X
// with X = |0><1| + |1><0|, i.e. the commutator term is
// -i (omega/2) [X, rho].
Eigen::Matrix3cd drive_coupling_over_hbar(double omega);

// Embed a reduced state as a full density matrix: populations on the
// diagonal, rho01 = i rhoB (so Im rho01 = rhoB), the dropped sector zero.
FullState embed(const DensityVector& v);

// Sampled solution of the full master equation
//   d rho/dt = -i (omega/2) [X, rho] + R(rho),
// where R relaxes populations (1->0 at 1/t1, 1->2 at k21, 2->0 at k02) and
// damps every off-diagonal element at 1/t2.
struct FullTrajectory {
    std::vector<double> times;
    std::vector<FullState> states;
    SystemParams params;

    const FullState& at_time(double t) const;
};

// Fixed-step RK4 on the full 3x3 system; same grid and stride conventions as
// evolve(). Trace drift beyond 1e-5 at any step throws StepSizeError.
FullTrajectory evolve_full(const SystemParams& params, const FullState& init,
                           double t_end, double dt = 1e-3, int stride = 1);

// Project the full state onto the reduced variables:
// (Re rho00, Im rho01, Re rho11, Re rho22). On resonance these close on
// themselves; everything else decays independently.
DensityVector reduce(const FullState& state);

// Largest magnitude over the trajectory of the components that the reduced
// model drops: rho02, rho12 (and conjugates) and Re rho01. Zero to roundoff
// whenever the run started with those components zero.
double decoupling_residual(const FullTrajectory& traj);

// Largest |rho - rho^dagger| entry over the trajectory.
double hermiticity_drift(const FullTrajectory& traj);

// Largest |tr(rho) - 1| over the trajectory.
double trace_drift(const FullTrajectory& traj);

}  // namespace lambda3
