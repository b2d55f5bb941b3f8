#pragma once

#include <array>
#include <complex>

#include "lambda3/model.hpp"

namespace lambda3 {

// Eigenvalue set of the reduced generator, sorted by ascending real part
// (ties broken by ascending imaginary part). For admissible parameters the
// first three have strictly negative real parts and gammas[3] is exactly 0
// (the steady mode). taus[k] = -1 / Re(gammas[k]) are the mode lifetimes.
struct Spectrum {
    std::array<std::complex<double>, 4> gammas;
    std::array<double, 3> taus;
};

// Eigenvalues via the characteristic polynomial: the structural zero is
// deflated exactly (after checking it is present to within roundoff) and the
// remaining cubic is solved in closed form. Throws NumericalError if the
// determinant is not negligible against the cubic's constant term, i.e. the
// matrix lacks the conservation law this model guarantees.
Spectrum eigenvalues(const GeneratorMatrix& gen);

// Convenience: spectrum at the given parameters.
Spectrum eigenvalues(const SystemParams& params);

// Coefficients of the deflated cubic gamma^3 + c2 gamma^2 + c1 gamma + c0
// whose roots are the three decaying eigenvalues, written directly in terms
// of the rates (a = 1/t1, b = 1/t2, c = k21, d = k02):
//   c2 = a + b + c + d
//   c1 = (a + c)(b + d) + b d + omega^2
//   c0 = b d (a + c) + (omega^2 / 2)(c + 2 d)
std::array<double, 3> decay_cubic_coefficients(const SystemParams& params);

// Weak-field (omega -> 0) limits of the three decaying eigenvalues:
// -(1/t1 + k21), -1/t2, -k02 (sorted ascending like eigenvalues()).
struct WeakFieldLimits {
    double gamma1;
    double gamma2;
    double gamma3;

    std::array<double, 3> taus() const {
        return {-1.0 / gamma1, -1.0 / gamma2, -1.0 / gamma3};
    }
};
WeakFieldLimits weak_field_limits(const SystemParams& params);

// Drive strength at which the two fast eigenvalues collide and move off the
// real axis, located by bisecting the sign change of the cubic discriminant.
// params.omega is ignored. Requires omega_lo < omega_hi and tol > 0; throws
// BracketError unless the discriminant is positive at omega_lo and negative
// at omega_hi.
double complex_onset(const SystemParams& params, double omega_lo,
                     double omega_hi, double tol = 1e-9);

// |sum of eigenvalues - trace of the generator|; an exact identity, so this
// measures only floating-point error of the eigenvalue path.
double trace_residual(const GeneratorMatrix& gen, const Spectrum& spec);

}  // namespace lambda3
