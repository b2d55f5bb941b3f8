#pragma once

#include <array>
#include <complex>
#include <vector>

#include "lambda3/model.hpp"
#include "lambda3/spectrum.hpp"

namespace lambda3 {

// Starting state for a time evolution. Populations must be real, in
// [-1e-12, 1 + 1e-12], and sum to 1 within 1e-9; rhoB in [-0.5, 0.5].
struct InitialCondition {
    DensityVector state;

    // All population in the driven upper level, no coherence: (0, 0, 1, 0).
    // This is the reference preparation used by the bundled scenarios.
    static InitialCondition excited() {
        return InitialCondition{DensityVector{0.0, 0.0, 1.0, 0.0}};
    }

    void validate() const;  // throws InvalidStateError
};

// Sampled solution of the reduced dynamics.
struct Trajectory {
    std::vector<double> times;           // strictly increasing, starts at 0
    std::vector<DensityVector> states;   // same length as times
    SystemParams params;

    // State at time t, which must match a sample time within 1e-9;
    // throws InvalidParameterError otherwise.
    const DensityVector& at_time(double t) const;
};

// Fixed-step classical RK4 integration of dx/dt = L x from t = 0 to t_end.
//
// The step count is n = round(t_end / dt) (at least 1) and the actual step
// t_end / n, so the grid lands exactly on t_end; sample times are i*t_end/n.
// Every stride-th step is recorded (plus t = 0 and t = t_end).
//
// The population sum is a linear invariant of the generator and of the RK4
// update, so its drift measures only roundoff -- unless the step is unstable,
// where it explodes. Drift beyond 1e-5 at any step throws StepSizeError.
Trajectory evolve(const SystemParams& params, const InitialCondition& init,
                  double t_end, double dt = 1e-3, int stride = 1);

// Largest |population_sum - 1| over the trajectory's samples.
double conservation_residual(const Trajectory& traj);

// Largest violation of |rhoB| <= 2 sqrt(rho00 rho11) + 1e-6 over the samples
// (negative if the bound holds everywhere, as it must for states that remain
// reductions of a physical density matrix).
double coherence_bound_violation(const Trajectory& traj);

// Expansion of the solution over the generator's eigenmodes:
//   x_i(t) = sum_k coeffs(i, k) exp(gammas[k] t).
// gammas are sorted as in eigenvalues(); the k = 3 column (gamma = 0) is the
// steady-state contribution.
struct ModeExpansion {
    std::array<std::complex<double>, 4> gammas;
    Eigen::Matrix4cd coeffs;
};

// Build the mode expansion for the given start state. Eigenvectors come from
// the smallest singular vector of (L - gamma I) per eigenvalue; if the
// eigenvector matrix has condition number above cond_limit (near-degenerate
// eigenvalues, e.g. at the complex-onset drive strength) this throws
// IllConditionedError naming the drive strength.
ModeExpansion decompose(const SystemParams& params,
                        const InitialCondition& init,
                        double cond_limit = 1e8);

// Closed-form solution via the mode expansion, sampled at the given times
// (each must be >= 0; t = 0 reproduces the start state bitwise). Residual
// imaginary parts beyond 1e-10 throw NumericalError; below that they are
// discarded.
Trajectory exact_solution(const SystemParams& params,
                          const InitialCondition& init,
                          const std::vector<double>& times,
                          double cond_limit = 1e8);

}  // namespace lambda3
