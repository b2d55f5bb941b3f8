#pragma once

#include <array>
#include <complex>

namespace lambda3 {

// Roots of a monic cubic x^3 + p2 x^2 + p1 x + p0 with real coefficients,
// classified by the discriminant of the depressed form.
struct CubicRoots {
    std::array<std::complex<double>, 3> roots;  // sorted: real part, then imaginary part
    double discriminant = 0.0;  // -4p^3 - 27q^2 of the depressed cubic t^3 + pt + q
    bool all_real = false;      // discriminant >= 0
};

// Discriminant of the depressed form of x^3 + p2 x^2 + p1 x + p0.
// Positive: three distinct real roots. Negative: one real root and a complex
// conjugate pair. Zero: a repeated real root.
double cubic_discriminant(double p2, double p1, double p0);

// Closed-form solution of x^3 + p2 x^2 + p1 x + p0 = 0.
// Uses the trigonometric form when all roots are real and a
// cancellation-stable Cardano form otherwise; no iterative refinement.
CubicRoots solve_cubic(double p2, double p1, double p0);

}  // namespace lambda3
