#include "lambda3/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lambda3/cubic.hpp"
#include "lambda3/errors.hpp"
#include "lambda3/format.hpp"

namespace lambda3 {

namespace {

// Sums of principal minors of order 1..4; the characteristic polynomial is
// det(gamma I - M) = gamma^4 - s1 gamma^3 + s2 gamma^2 - s3 gamma + s4.
struct MinorSums {
    double s1, s2, s3, s4;
};

double minor3(const Eigen::Matrix4d& m, int i, int j, int k) {
    return m(i, i) * (m(j, j) * m(k, k) - m(j, k) * m(k, j)) -
           m(i, j) * (m(j, i) * m(k, k) - m(j, k) * m(k, i)) +
           m(i, k) * (m(j, i) * m(k, j) - m(j, j) * m(k, i));
}

MinorSums principal_minor_sums(const Eigen::Matrix4d& m) {
    MinorSums s{};
    s.s1 = m.trace();
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            s.s2 += m(i, i) * m(j, j) - m(i, j) * m(j, i);
    s.s3 = minor3(m, 0, 1, 2) + minor3(m, 0, 1, 3) + minor3(m, 0, 2, 3) +
           minor3(m, 1, 2, 3);
    s.s4 = m.determinant();
    return s;
}

bool complex_less(const std::complex<double>& a,
                  const std::complex<double>& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
}

}  // namespace

Spectrum eigenvalues(const GeneratorMatrix& gen) {
    const MinorSums s = principal_minor_sums(gen.entries);

    // The conservation law forces det = 0; anything beyond roundoff means
    // the matrix is not a generator of this model.
    if (!(std::abs(s.s4) <= 1e-10 * std::max(1.0, std::abs(s.s3))))
        throw NumericalError(
            "generator lacks the zero eigenvalue: det = " +
            format_short(s.s4));

    // Deflate the exact zero; the rest is gamma^3 - s1 g^2 + s2 g - s3.
    const CubicRoots cubic = solve_cubic(-s.s1, s.s2, -s.s3);

    Spectrum spec;
    spec.gammas = {cubic.roots[0], cubic.roots[1], cubic.roots[2],
                   std::complex<double>(0.0, 0.0)};
    std::sort(spec.gammas.begin(), spec.gammas.end(), complex_less);
    for (int k = 0; k < 3; ++k)
        spec.taus[k] = -1.0 / spec.gammas[k].real();
    return spec;
}

Spectrum eigenvalues(const SystemParams& params) {
    return eigenvalues(build_generator(params));
}

std::array<double, 3> decay_cubic_coefficients(const SystemParams& params) {
    params.validate();
    const double a = params.k01();
    const double b = 1.0 / params.t2;
    const double c = params.k21;
    const double d = params.k02;
    const double om2 = params.omega * params.omega;
    return {
        a + b + c + d,                                // gamma^2 coefficient
        (a + c) * (b + d) + b * d + om2,              // gamma coefficient
        b * d * (a + c) + (om2 / 2.0) * (c + 2.0 * d)  // constant term
    };
}

WeakFieldLimits weak_field_limits(const SystemParams& params) {
    params.validate();
    std::array<double, 3> g = {-(params.k01() + params.k21), -1.0 / params.t2,
                               -params.k02};
    std::sort(g.begin(), g.end());
    return WeakFieldLimits{g[0], g[1], g[2]};
}

double complex_onset(const SystemParams& params, double omega_lo,
                     double omega_hi, double tol) {
    params.validate();
    if (!(omega_lo >= 0.0 && omega_lo < omega_hi))
        throw InvalidParameterError("need 0 <= omega_lo < omega_hi");
    if (!(tol > 0.0)) throw InvalidParameterError("tol must be > 0");

    auto disc_at = [&params](double om) {
        const auto c = decay_cubic_coefficients(params.with_omega(om));
        return cubic_discriminant(c[0], c[1], c[2]);
    };

    double lo = omega_lo, hi = omega_hi;
    double d_lo = disc_at(lo);
    const double d_hi = disc_at(hi);
    if (!(d_lo > 0.0 && d_hi < 0.0))
        throw BracketError(
            "bracket [" + format_short(lo) + ", " + format_short(hi) +
            "] does not straddle the onset: discriminant is " +
            format_short(d_lo) + " at the left edge and " +
            format_short(d_hi) + " at the right");

    while (hi - lo > tol) {
        const double mid = lo + (hi - lo) / 2.0;
        if (mid <= lo || mid >= hi) break;  // interval at roundoff limit
        const double d_mid = disc_at(mid);
        if (d_mid > 0.0) {
            lo = mid;
            d_lo = d_mid;
        } else {
            hi = mid;
        }
    }
    return lo + (hi - lo) / 2.0;
}

double trace_residual(const GeneratorMatrix& gen, const Spectrum& spec) {
    std::complex<double> sum(0.0, 0.0);
    for (const auto& g : spec.gammas) sum += g;
    return std::abs(sum - std::complex<double>(gen.trace(), 0.0));
}

}  // namespace lambda3
