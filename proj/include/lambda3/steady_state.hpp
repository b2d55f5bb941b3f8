#pragma once

#include <optional>

#include "lambda3/model.hpp"

namespace lambda3 {

// Long-time limit of the driven system. With the laser off this is the bare
// ground state (1, 0, 0, 0) exactly.
struct SteadyState {
    DensityVector rho;
};

// Closed-form steady state:
//   rho11 = (omega^2/2) / [omega^2 (1 + k21/(2 k02)) + 1/(t1 t2) + k21/t2]
//   rho22 = (k21/k02) rho11
//   rhoB  = (1/t1 + k21) rho11 / omega
//   rho00 = rho11 + (2/(omega t2)) rhoB
// The populations sum to 1 by construction (to roundoff).
SteadyState steady_state(const SystemParams& params);

// Upper-state population saturates toward 1 / (2 + k21/k02) as omega grows.
double saturation_limit(const SystemParams& params);

// Drive strength where the steady populations of level 2 and the ground
// state cross:
//   omega*^2 = 2 (1/t1 + k21) / (t2 (k21/k02 - 1)).
// params.omega is ignored. Returns std::nullopt when k21 <= k02 (level 2
// drains faster than it fills; its population stays below the ground state's
// at every drive strength).
std::optional<double> crossover_omega(const SystemParams& params);

// Independent check of crossover_omega: bisection on the sign change of
// rho22(inf) - rho00(inf) over [omega_lo, omega_hi]. Returns std::nullopt
// when k21 <= k02; otherwise throws BracketError unless the difference is
// negative at omega_lo and positive at omega_hi.
std::optional<double> crossover_omega_bisect(const SystemParams& params,
                                             double omega_lo, double omega_hi,
                                             double tol = 1e-10);

}  // namespace lambda3
