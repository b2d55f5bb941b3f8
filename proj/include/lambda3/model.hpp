#pragma once

#include <Eigen/Dense>

namespace lambda3 {

// Physical parameters of the driven three-level lambda system.
//
// Level 0 is the ground state, level 1 the laser-coupled upper state, level 2
// the second (metastable) lower state. The laser drives 0 <-> 1 at Rabi
// frequency omega; population relaxes 1 -> 0 at rate 1/t1, branches 1 -> 2 at
// rate k21, and returns 2 -> 0 at rate k02; the 0-1 coherence decays at 1/t2.
// All rates and times are in the reduced units used throughout (the 1 -> 0
// lifetime scale); omega shares those units.
struct SystemParams {
    double t1;           // upper-state lifetime against decay to ground
    double t2;           // coherence lifetime of the driven transition
    double k21;          // branching rate from level 1 into level 2
    double k02;          // return rate from level 2 to ground
    double omega = 0.0;  // Rabi frequency of the drive (0 = laser off)

    double k01() const { return 1.0 / t1; }

    // Copy with a different drive strength; the relaxation network is fixed.
    SystemParams with_omega(double new_omega) const {
        SystemParams p = *this;
        p.omega = new_omega;
        return p;
    }

    // Throws InvalidParameterError naming the offending field.
    // Requires t1 > 0, t2 > 0, k21 >= 0, k02 > 0, omega >= 0, all finite.
    void validate() const;
};

// The reference parameter set: t1 = 0.277/3, t2 = 0.132, k21 = 1, k02 = 0.1,
// omega = 0. t1 is stored at full precision (0.277/3), not rounded; derived
// constants such as 1/(1/t1 + k21) = 0.0845285... depend on that.
SystemParams default_params();

// Rabi frequency omega = e_field * dipole / hbar for a dipole-coupled drive.
// All three arguments must be positive and finite.
double rabi_frequency(double e_field, double dipole, double hbar);

// Reduced state of the system: the three populations plus the absorptive
// (imaginary) part of the drive coherence, which is the only coherence
// component the populations couple to on resonance.
struct DensityVector {
    double rho00 = 0.0;  // ground-state population
    double rhoB = 0.0;   // Im(rho01), absorptive coherence quadrature
    double rho11 = 0.0;  // upper-state population
    double rho22 = 0.0;  // second-lower-state population

    double population_sum() const { return rho00 + rho11 + rho22; }

    Eigen::Vector4d to_vector() const {
        return Eigen::Vector4d(rho00, rhoB, rho11, rho22);
    }
    static DensityVector from_vector(const Eigen::Vector4d& v) {
        return DensityVector{v[0], v[1], v[2], v[3]};
    }
};

// Generator of the reduced dynamics: dx/dt = entries * x for
// x = (rho00, rhoB, rho11, rho22). Linear in omega. The row vector
// (1, 0, 1, 1) annihilates it from the left (population conservation),
// so one eigenvalue is structurally zero.
struct GeneratorMatrix {
    Eigen::Matrix4d entries;

    double trace() const { return entries.trace(); }
};

// Assemble the generator for the given parameters (validates them first).
GeneratorMatrix build_generator(const SystemParams& params);

}  // namespace lambda3
