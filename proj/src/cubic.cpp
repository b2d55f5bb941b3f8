#include "lambda3/cubic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace lambda3 {

namespace {

// Depressed form of x^3 + p2 x^2 + p1 x + p0 under x = t - p2/3:
// t^3 + p t + q.
void depress(double p2, double p1, double p0, double& p, double& q) {
    p = p1 - p2 * p2 / 3.0;
    q = p2 * (2.0 * p2 * p2 - 9.0 * p1) / 27.0 + p0;
}

bool complex_less(const std::complex<double>& a,
                  const std::complex<double>& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
}

}  // namespace

double cubic_discriminant(double p2, double p1, double p0) {
    double p, q;
    depress(p2, p1, p0, p, q);
    return -4.0 * p * p * p - 27.0 * q * q;
}

CubicRoots solve_cubic(double p2, double p1, double p0) {
    double p, q;
    depress(p2, p1, p0, p, q);
    const double disc = -4.0 * p * p * p - 27.0 * q * q;
    const double shift = p2 / 3.0;

    CubicRoots out;
    out.discriminant = disc;
    out.all_real = disc >= 0.0;

    if (disc > 0.0) {
        // Three distinct real roots (requires p < 0): trigonometric form.
        const double radius = 2.0 * std::sqrt(-p / 3.0);
        const double arg =
            std::clamp(3.0 * q / (p * radius), -1.0, 1.0);
        const double theta = std::acos(arg);
        for (int k = 0; k < 3; ++k) {
            const double t = radius * std::cos((theta - 2.0 * std::numbers::pi * k) / 3.0);
            out.roots[k] = std::complex<double>(t - shift, 0.0);
        }
    } else if (disc < 0.0) {
        // One real root and a conjugate pair: Cardano, with the cube root
        // taken on the large-magnitude branch to avoid cancellation.
        const double s = std::sqrt(q * q / 4.0 + p * p * p / 27.0);
        const double u = std::cbrt(-q / 2.0 - std::copysign(s, q));
        const double v = (u != 0.0) ? -p / (3.0 * u) : 0.0;
        const double t_real = u + v;
        const double imag =
            std::sqrt(std::max(0.0, 3.0 * t_real * t_real + 4.0 * p)) / 2.0;
        const double pair_real = -t_real / 2.0 - shift;
        out.roots[0] = std::complex<double>(t_real - shift, 0.0);
        out.roots[1] = std::complex<double>(pair_real, -imag);
        out.roots[2] = std::complex<double>(pair_real, imag);
    } else {
        // Repeated roots.
        if (p == 0.0) {
            for (auto& r : out.roots) r = std::complex<double>(-shift, 0.0);
        } else {
            const double twice = -3.0 * q / (2.0 * p) - shift;  // double root
            const double once = 3.0 * q / p - shift;            // simple root
            out.roots[0] = std::complex<double>(once, 0.0);
            out.roots[1] = std::complex<double>(twice, 0.0);
            out.roots[2] = std::complex<double>(twice, 0.0);
        }
    }

    std::sort(out.roots.begin(), out.roots.end(), complex_less);
    return out;
}

}  // namespace lambda3
