#include "lambda3/model.hpp"

#include <cmath>
#include <string>

#include "lambda3/errors.hpp"
#include "lambda3/format.hpp"

namespace lambda3 {

namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) throw InvalidParameterError(msg);
}

std::string bad(const char* name, double value) {
    return std::string(name) + " = " + format_short(value) +
           " is outside the admissible domain";
}

}  // namespace

void SystemParams::validate() const {
    require(std::isfinite(t1) && t1 > 0.0, bad("t1", t1));
    require(std::isfinite(t2) && t2 > 0.0, bad("t2", t2));
    require(std::isfinite(k21) && k21 >= 0.0, bad("k21", k21));
    require(std::isfinite(k02) && k02 > 0.0, bad("k02", k02));
    require(std::isfinite(omega) && omega >= 0.0, bad("omega", omega));
}

SystemParams default_params() {
    SystemParams p;
    p.t1 = 0.277 / 3.0;  // keep full precision; 1/(1/t1 + k21) depends on it
    p.t2 = 0.132;
    p.k21 = 1.0;
    p.k02 = 0.1;
    p.omega = 0.0;
    return p;
}

double rabi_frequency(double e_field, double dipole, double hbar) {
    if (!(std::isfinite(e_field) && e_field > 0.0))
        throw InvalidParameterError(bad("e_field", e_field));
    if (!(std::isfinite(dipole) && dipole > 0.0))
        throw InvalidParameterError(bad("dipole", dipole));
    if (!(std::isfinite(hbar) && hbar > 0.0))
        throw InvalidParameterError(bad("hbar", hbar));
    return e_field * dipole / hbar;
}

GeneratorMatrix build_generator(const SystemParams& p) {
    p.validate();
    const double a = p.k01();      // 1 -> 0 relaxation rate
    const double b = 1.0 / p.t2;   // coherence decay rate
    const double om = p.omega;

    Eigen::Matrix4d m;
    // State order: (rho00, rhoB, rho11, rho22).
    m << 0.0,      -om,  a,            p.k02,
         om / 2.0, -b,   -om / 2.0,    0.0,
         0.0,      om,   -a - p.k21,   0.0,
         0.0,      0.0,  p.k21,        -p.k02;
    return GeneratorMatrix{m};
}

}  // namespace lambda3
