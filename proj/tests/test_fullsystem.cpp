#include <doctest.h>

#include <cmath>
#include <complex>
#include <string>

#include "lambda3/errors.hpp"
#include "lambda3/fullsystem.hpp"
#include "lambda3/integrator.hpp"
#include "lambda3/steady_state.hpp"

using namespace lambda3;

namespace {

using Complex = std::complex<double>;

double max_abs_diff(const DensityVector& a, const DensityVector& b) {
    return std::max({std::abs(a.rho00 - b.rho00), std::abs(a.rhoB - b.rhoB),
                     std::abs(a.rho11 - b.rho11), std::abs(a.rho22 - b.rho22)});
}

}  // namespace

TEST_CASE("the excited full state has unit upper-level population") {
    const FullState s = FullState::excited();
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(s.rho(i, j) == ((i == 1 && j == 1) ? Complex(1.0, 0.0)
                                                     : Complex(0.0, 0.0)));
    CHECK_NOTHROW(s.validate());
}

TEST_CASE("full-state validation enforces density-matrix structure") {
    SUBCASE("non-hermitian coherence") {
        FullState s = FullState::excited();
        s.rho(0, 2) = Complex(0.1, 0.0);
        s.rho(2, 0) = Complex(0.3, 0.0);  // should be the conjugate, 0.1
        try {
            s.validate();
            FAIL("expected InvalidStateError");
        } catch (const InvalidStateError& e) {
            CHECK(std::string(e.what()).find("hermitian") !=
                  std::string::npos);
        }
    }
    SUBCASE("negative population") {
        FullState s = FullState::excited();
        s.rho(0, 0) = Complex(-0.2, 0.0);
        s.rho(1, 1) = Complex(1.2, 0.0);
        CHECK_THROWS_AS(s.validate(), InvalidStateError);
    }
    SUBCASE("trace away from one") {
        FullState s = FullState::excited();
        s.rho(1, 1) = Complex(0.9, 0.0);
        try {
            s.validate();
            FAIL("expected InvalidStateError");
        } catch (const InvalidStateError& e) {
            CHECK(std::string(e.what()).find("trace") != std::string::npos);
        }
    }
    SUBCASE("imaginary population") {
        FullState s = FullState::excited();
        s.rho(1, 1) = Complex(1.0, 0.1);
        CHECK_THROWS_AS(s.validate(), InvalidStateError);
    }
}

TEST_CASE("drive coupling is the symmetric 0-1 exchange") {
    const Eigen::Matrix3cd v = drive_coupling_over_hbar(3.0);
    CHECK(v(0, 1) == Complex(1.5, 0.0));
    CHECK(v(1, 0) == Complex(1.5, 0.0));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (!((i == 0 && j == 1) || (i == 1 && j == 0)))
                CHECK(v(i, j) == Complex(0.0, 0.0));
}

TEST_CASE("embed and reduce are mutually inverse on the reduced sector") {
    const DensityVector v{0.2, 0.1, 0.3, 0.5};
    const FullState s = embed(v);
    CHECK(s.rho(0, 0) == Complex(0.2, 0.0));
    CHECK(s.rho(1, 1) == Complex(0.3, 0.0));
    CHECK(s.rho(2, 2) == Complex(0.5, 0.0));
    // The reduced coherence variable is the imaginary part of rho01.
    CHECK(s.rho(0, 1) == Complex(0.0, 0.1));
    CHECK(s.rho(1, 0) == Complex(0.0, -0.1));
    CHECK_NOTHROW(s.validate());

    const DensityVector back = reduce(s);
    CHECK(back.rho00 == v.rho00);
    CHECK(back.rhoB == v.rhoB);
    CHECK(back.rho11 == v.rho11);
    CHECK(back.rho22 == v.rho22);
}

TEST_CASE("full master equation reproduces the reduced dynamics") {
    const SystemParams p = default_params().with_omega(4.5);
    const FullTrajectory full =
        evolve_full(p, FullState::excited(), 14.0, 1e-3, 1000);
    const Trajectory reduced =
        evolve(p, InitialCondition::excited(), 14.0, 1e-3, 1000);
    REQUIRE(full.times.size() == reduced.times.size());
    for (std::size_t i = 0; i < full.times.size(); ++i) {
        CHECK(full.times[i] == reduced.times[i]);
        CHECK(max_abs_diff(reduce(full.states[i]), reduced.states[i]) <=
              1e-12);
    }
    // Starting inside the reduced sector, the dropped components never
    // acquire any value at all.
    CHECK(decoupling_residual(full) == 0.0);
    CHECK(hermiticity_drift(full) <= 1e-14);
    CHECK(trace_drift(full) <= 1e-13);
}

TEST_CASE("strong drive relaxes the full system onto the steady state") {
    const SystemParams p = default_params().with_omega(10.0);
    const DensityVector inf = steady_state(p).rho;

    const FullTrajectory mid =
        evolve_full(p, FullState::excited(), 14.0, 1e-3, 14000);
    CHECK(max_abs_diff(reduce(mid.states.back()), inf) <= 5e-3);

    const FullTrajectory late =
        evolve_full(p, FullState::excited(), 30.0, 1e-3, 30000);
    CHECK(max_abs_diff(reduce(late.states.back()), inf) <= 1e-4);
}

TEST_CASE("with the laser off the populations cascade down the levels") {
    const SystemParams p = default_params();  // omega = 0
    const FullTrajectory traj =
        evolve_full(p, FullState::excited(), 1.0, 1e-3, 1000);
    const DensityVector v = reduce(traj.states.back());
    // Sequential decay gives rho22(t) = k21/(a - k02) (e^{-k02 t} - e^{-a t})
    // with a = 1/t1 + k21 the total upper-level decay rate.
    const double a = p.k01() + p.k21;
    const double expected =
        p.k21 / (a - p.k02) * (std::exp(-p.k02) - std::exp(-a));
    CHECK(v.rho22 == doctest::Approx(0.07713598255792893).epsilon(1e-8));
    CHECK(std::abs(v.rho22 - expected) <= 1e-7);
    CHECK(v.rhoB == 0.0);
}

TEST_CASE("the dropped coherence sector rotates and decays on its own") {
    // Start with nonzero rho02 and rho12; they evolve among themselves as
    // rho02(t) = e^{-t/t2} (rho02 cos(omega t/2) - i rho12 sin(omega t/2))
    // and never leak into the populations.
    const SystemParams p = default_params().with_omega(1.0);
    const Complex r02_0(0.2, 0.1);
    const Complex r12_0(-0.05, 0.02);

    FullState init = embed(DensityVector{0.3, 0.0, 0.3, 0.4});
    init.rho(0, 2) = r02_0;
    init.rho(2, 0) = std::conj(r02_0);
    init.rho(1, 2) = r12_0;
    init.rho(2, 1) = std::conj(r12_0);
    init.validate();

    const double t = 2.0;
    const FullTrajectory traj = evolve_full(p, init, t, 1e-3, 2000);
    const Eigen::Matrix3cd& rho = traj.states.back().rho;

    const Complex damp = std::exp(Complex(-t / p.t2, 0.0));
    const double phase = p.omega * t / 2.0;
    const Complex i1(0.0, 1.0);
    const Complex want02 =
        damp * (r02_0 * std::cos(phase) - i1 * r12_0 * std::sin(phase));
    const Complex want12 =
        damp * (r12_0 * std::cos(phase) - i1 * r02_0 * std::sin(phase));
    CHECK(std::abs(rho(0, 2) - want02) <= 1e-10);
    CHECK(std::abs(rho(1, 2) - want12) <= 1e-10);

    // Populations match a run without the extra sector entirely.
    const FullTrajectory plain =
        evolve_full(p, embed(DensityVector{0.3, 0.0, 0.3, 0.4}), t, 1e-3,
                    2000);
    CHECK(max_abs_diff(reduce(traj.states.back()),
                       reduce(plain.states.back())) <= 1e-14);
}

TEST_CASE("the real part of the drive coherence decays independently") {
    const SystemParams p = default_params().with_omega(4.5);
    FullState init = FullState::excited();
    init.rho(0, 1) = Complex(0.1, 0.0);
    init.rho(1, 0) = Complex(0.1, 0.0);
    init.validate();

    const double t = 1.4;
    const FullTrajectory traj = evolve_full(p, init, t, 1e-3, 1400);
    const FullTrajectory plain =
        evolve_full(p, FullState::excited(), t, 1e-3, 1400);

    // Populations and the imaginary coherence are untouched.
    CHECK(max_abs_diff(reduce(traj.states.back()),
                       reduce(plain.states.back())) <= 1e-14);
    // The real part just damps at the coherence rate.
    const double want = 0.1 * std::exp(-t / p.t2);
    CHECK(traj.states.back().rho(0, 1).real() ==
          doctest::Approx(want).epsilon(1e-8));
    // This run deliberately populates a dropped component, and the residual
    // tracker must see it.
    CHECK(decoupling_residual(traj) >= 0.1);
}

TEST_CASE("full-system sampling mirrors the reduced grid rules") {
    const FullTrajectory traj = evolve_full(
        default_params().with_omega(4.5), FullState::excited(), 1.4, 1e-3,
        100);
    REQUIRE(traj.times.size() == 15);
    CHECK(traj.times.back() == 1.4);
    CHECK_NOTHROW(traj.at_time(1.4));
    CHECK_THROWS_AS(traj.at_time(0.33), InvalidParameterError);
}

TEST_CASE("full-system grid arguments are validated") {
    const FullState init = FullState::excited();
    const SystemParams p = default_params();
    CHECK_THROWS_AS(evolve_full(p, init, 0.0, 1e-3, 1),
                    InvalidParameterError);
    CHECK_THROWS_AS(evolve_full(p, init, 1.0, -1e-3, 1),
                    InvalidParameterError);
    CHECK_THROWS_AS(evolve_full(p, init, 1.0, 1e-3, -2),
                    InvalidParameterError);
}

TEST_CASE("an unstable full-system step is reported") {
    CHECK_THROWS_AS(evolve_full(default_params().with_omega(4.5),
                                FullState::excited(), 14.0, 0.5, 1),
                    StepSizeError);
}
