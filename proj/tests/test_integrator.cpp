#include <doctest.h>

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "lambda3/errors.hpp"
#include "lambda3/integrator.hpp"
#include "lambda3/rk4.hpp"
#include "lambda3/spectrum.hpp"
#include "lambda3/steady_state.hpp"

using namespace lambda3;

namespace {

// Endpoint states frozen from an independent matrix-exponential propagator
// (dense eigendecomposition in double precision), start state (0, 0, 1, 0).
struct Anchor {
    double omega, t_end;
    double rho00, rhoB, rho11, rho22;
};
const Anchor kAnchors[] = {
    {0.1, 14.0, 0.9785249467489369, 0.00645606178929429,
     5.456208291689544e-05, 0.02142049116814936},
    {4.5, 14.0, 0.49745357843752025, 0.13289328520393373,
     0.05059326880974727, 0.45195315275273545},
    {10.0, 14.0, 0.20522016038165794, 0.08696543113475823,
     0.07354348284119296, 0.7212363567771481},
    {0.1, 0.4, 0.9100012459026459, 0.0048720162948742264,
     0.008839802743536936, 0.08115895135381739},
    {4.5, 1.4, 0.7655820874700324, 0.2060155874260647, 0.07887575584215914,
     0.15554215668780996},
    {4.5, 2.0, 0.7331546558101468, 0.19717093470420563, 0.07545373789025256,
     0.19139160629960017},
};

double max_abs_diff(const DensityVector& a, const Anchor& ref) {
    return std::max({std::abs(a.rho00 - ref.rho00), std::abs(a.rhoB - ref.rhoB),
                     std::abs(a.rho11 - ref.rho11),
                     std::abs(a.rho22 - ref.rho22)});
}

double max_abs_diff(const DensityVector& a, const DensityVector& b) {
    return std::max({std::abs(a.rho00 - b.rho00), std::abs(a.rhoB - b.rhoB),
                     std::abs(a.rho11 - b.rho11), std::abs(a.rho22 - b.rho22)});
}

}  // namespace

TEST_CASE("the reference start state is the bare excited level") {
    const InitialCondition init = InitialCondition::excited();
    CHECK(init.state.rho00 == 0.0);
    CHECK(init.state.rhoB == 0.0);
    CHECK(init.state.rho11 == 1.0);
    CHECK(init.state.rho22 == 0.0);
    CHECK_NOTHROW(init.validate());
}

TEST_CASE("start-state validation rejects unphysical values") {
    SUBCASE("negative population") {
        const InitialCondition bad{DensityVector{-0.1, 0.0, 1.1, 0.0}};
        try {
            bad.validate();
            FAIL("expected InvalidStateError");
        } catch (const InvalidStateError& e) {
            CHECK(std::string(e.what()).find("rho00") != std::string::npos);
        }
    }
    SUBCASE("coherence out of range") {
        const InitialCondition bad{DensityVector{0.5, 0.7, 0.5, 0.0}};
        CHECK_THROWS_AS(bad.validate(), InvalidStateError);
    }
    SUBCASE("populations not normalized") {
        const InitialCondition bad{DensityVector{0.5, 0.0, 0.3, 0.0}};
        CHECK_THROWS_AS(bad.validate(), InvalidStateError);
    }
    SUBCASE("non-finite entry") {
        const InitialCondition bad{
            DensityVector{std::nan(""), 0.0, 1.0, 0.0}};
        CHECK_THROWS_AS(bad.validate(), InvalidStateError);
    }
    SUBCASE("a mixed start state is fine") {
        const InitialCondition ok{DensityVector{0.2, 0.1, 0.3, 0.5}};
        CHECK_NOTHROW(ok.validate());
    }
}

TEST_CASE("the time grid lands exactly on the endpoint") {
    const SystemParams p = default_params().with_omega(4.5);

    SUBCASE("dt dividing t_end") {
        const Trajectory traj =
            evolve(p, InitialCondition::excited(), 1.4, 1e-3, 100);
        REQUIRE(traj.times.size() == 15);
        CHECK(traj.times.front() == 0.0);
        CHECK(traj.times.back() == 1.4);
        // Sample 5 is step 500 of 1400.
        CHECK(traj.times[5] == 500.0 * 1.4 / 1400.0);
    }
    SUBCASE("dt not dividing t_end rounds to the nearest step count") {
        const Trajectory traj =
            evolve(p, InitialCondition::excited(), 1.0, 0.3, 1);
        // round(1.0 / 0.3) = 3 steps of 1/3 each.
        REQUIRE(traj.times.size() == 4);
        CHECK(traj.times.back() == 1.0);
        CHECK(traj.times[1] == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    }
    SUBCASE("stride not dividing the step count still records the endpoint") {
        const Trajectory traj =
            evolve(p, InitialCondition::excited(), 1.0, 0.1, 3);
        // Steps 0, 3, 6, 9, 10.
        REQUIRE(traj.times.size() == 5);
        CHECK(traj.times.back() == 1.0);
    }
}

TEST_CASE("at_time retrieves samples and rejects off-grid times") {
    const Trajectory traj = evolve(default_params().with_omega(4.5),
                                   InitialCondition::excited(), 14.0, 1e-3,
                                   1000);
    CHECK_NOTHROW(traj.at_time(0.0));
    CHECK_NOTHROW(traj.at_time(11.0));
    CHECK_NOTHROW(traj.at_time(14.0));
    CHECK_THROWS_AS(traj.at_time(0.33), InvalidParameterError);
    CHECK_THROWS_AS(traj.at_time(-1.0), InvalidParameterError);
    CHECK_THROWS_AS(traj.at_time(15.0), InvalidParameterError);
}

TEST_CASE("grid arguments are validated") {
    const SystemParams p = default_params();
    const InitialCondition init = InitialCondition::excited();
    CHECK_THROWS_AS(evolve(p, init, -1.0, 1e-3, 1), InvalidParameterError);
    CHECK_THROWS_AS(evolve(p, init, 0.0, 1e-3, 1), InvalidParameterError);
    CHECK_THROWS_AS(evolve(p, init, 1.0, 0.0, 1), InvalidParameterError);
    CHECK_THROWS_AS(evolve(p, init, 1.0, 1e-3, 0), InvalidParameterError);
}

TEST_CASE("integrated endpoints match the frozen propagator anchors") {
    for (const Anchor& a : kAnchors) {
        CAPTURE(a.omega);
        CAPTURE(a.t_end);
        const Trajectory traj =
            evolve(default_params().with_omega(a.omega),
                   InitialCondition::excited(), a.t_end, 1e-3, 1000);
        CHECK(max_abs_diff(traj.states.back(), a) <= 1e-8);
    }
}

TEST_CASE("closed-form propagation matches the frozen anchors tightly") {
    for (const Anchor& a : kAnchors) {
        CAPTURE(a.omega);
        CAPTURE(a.t_end);
        const Trajectory traj =
            exact_solution(default_params().with_omega(a.omega),
                           InitialCondition::excited(), {0.0, a.t_end});
        CHECK(max_abs_diff(traj.states.back(), a) <= 1e-12);
    }
}

TEST_CASE("population sum is conserved to roundoff by a stable step") {
    for (const double om : {0.1, 4.5, 10.0}) {
        const Trajectory traj =
            evolve(default_params().with_omega(om),
                   InitialCondition::excited(), 14.0, 1e-3, 100);
        CHECK(conservation_residual(traj) <= 1e-13);
    }
}

TEST_CASE("the coherence magnitude respects the physical bound") {
    for (const double om : {0.1, 4.5, 10.0}) {
        const Trajectory traj =
            evolve(default_params().with_omega(om),
                   InitialCondition::excited(), 14.0, 1e-3, 10);
        CHECK(coherence_bound_violation(traj) < 0.0);
    }
}

TEST_CASE("an unstable step is reported, not returned") {
    CHECK_THROWS_AS(evolve(default_params().with_omega(4.5),
                           InitialCondition::excited(), 14.0, 0.5, 1),
                    StepSizeError);
}

TEST_CASE("long runs settle onto the closed-form steady state") {
    struct Row {
        double omega, gate;
    };
    // Gates follow exp(gamma3 * 100) for each drive strength.
    const Row rows[] = {{0.1, 1e-5}, {4.5, 1e-8}, {10.0, 1e-12}};
    for (const Row& row : rows) {
        CAPTURE(row.omega);
        const SystemParams p = default_params().with_omega(row.omega);
        const Trajectory traj =
            evolve(p, InitialCondition::excited(), 100.0, 1e-3, 100000);
        CHECK(max_abs_diff(traj.states.back(), steady_state(p).rho) <=
              row.gate);
    }
}

TEST_CASE("mode expansion reproduces the spectrum and the start state") {
    const SystemParams p = default_params().with_omega(4.5);
    const InitialCondition init = InitialCondition::excited();
    const ModeExpansion modes = decompose(p, init);
    const Spectrum s = eigenvalues(p);
    for (int k = 0; k < 4; ++k)
        CHECK(std::abs(modes.gammas[k] - s.gammas[k]) <= 1e-14);
    // At t = 0 every exponential is 1, so row sums give back the start.
    const Eigen::Vector4d x0 = init.state.to_vector();
    for (int i = 0; i < 4; ++i) {
        std::complex<double> sum = 0.0;
        for (int k = 0; k < 4; ++k) sum += modes.coeffs(i, k);
        CHECK(std::abs(sum.real() - x0[i]) <= 1e-12);
        CHECK(std::abs(sum.imag()) <= 1e-12);
    }
    // The zero-mode column is the steady state.
    const DensityVector inf = steady_state(p).rho;
    for (int i = 0; i < 4; ++i)
        CHECK(std::abs(modes.coeffs(i, 3) - inf.to_vector()[i]) <= 1e-10);
}

TEST_CASE("near-degenerate eigenvectors trip the condition limit") {
    const SystemParams p = default_params().with_omega(2.2);
    try {
        decompose(p, InitialCondition::excited(), 10.0);
        FAIL("expected IllConditionedError");
    } catch (const IllConditionedError& e) {
        // The message names the drive strength so sweeps can report it.
        CHECK(std::string(e.what()).find("omega = 2.2") != std::string::npos);
    }
}

TEST_CASE("at the onset the propagator refuses or stays correct") {
    // Exactly at the eigenvalue collision the eigenvector basis is nearly
    // degenerate. The contract allows two outcomes only: a loud refusal
    // (condition or residual guard), or output that still matches the
    // integrator. Silent garbage is the one forbidden behavior.
    const SystemParams p = default_params().with_omega(2.1849656143672664);
    const InitialCondition init = InitialCondition::excited();
    const Trajectory rk = evolve(p, init, 2.0, 1e-4, 5000);
    try {
        const Trajectory cf = exact_solution(p, init, rk.times);
        for (std::size_t i = 0; i < rk.times.size(); ++i)
            CHECK(max_abs_diff(rk.states[i], cf.states[i]) <= 1e-8);
    } catch (const Error&) {
        CHECK(true);  // refusing is the other permitted outcome
    }
}

TEST_CASE("closed-form propagation reproduces the start state bitwise at t = 0") {
    const InitialCondition init{DensityVector{0.2, 0.1, 0.3, 0.5}};
    const Trajectory traj = exact_solution(
        default_params().with_omega(4.5), init, {0.0, 1.0});
    CHECK(traj.states[0].rho00 == 0.2);
    CHECK(traj.states[0].rhoB == 0.1);
    CHECK(traj.states[0].rho11 == 0.3);
    CHECK(traj.states[0].rho22 == 0.5);
}

TEST_CASE("closed-form propagation rejects negative sample times") {
    CHECK_THROWS_AS(exact_solution(default_params().with_omega(1.0),
                                   InitialCondition::excited(), {0.0, -2.0}),
                    InvalidParameterError);
}

TEST_CASE("integration and closed form agree along whole trajectories") {
    for (const double om : {0.1, 4.5}) {
        CAPTURE(om);
        const SystemParams p = default_params().with_omega(om);
        const Trajectory rk =
            evolve(p, InitialCondition::excited(), 14.0, 1e-3, 2000);
        const Trajectory cf =
            exact_solution(p, InitialCondition::excited(), rk.times);
        REQUIRE(rk.times.size() == cf.times.size());
        for (std::size_t i = 0; i < rk.times.size(); ++i)
            CHECK(max_abs_diff(rk.states[i], cf.states[i]) <= 1e-10);
    }
}

TEST_CASE("the step kernel implements the classical fourth-order tableau") {
    // For dx/dt = x one step must multiply by the quartic Taylor polynomial
    // of exp at h -- the defining algebraic fingerprint of the tableau.
    const double h = 0.1;
    const Eigen::Vector4d x(1.0, -2.0, 0.5, 3.0);
    const Eigen::Vector4d y =
        rk4_step(x, h, [](const Eigen::Vector4d& v) -> Eigen::Vector4d {
            return v;
        });
    const double factor =
        1.0 + h + h * h / 2.0 + h * h * h / 6.0 + h * h * h * h / 24.0;
    for (int i = 0; i < 4; ++i)
        CHECK(y[i] == doctest::Approx(factor * x[i]).epsilon(1e-14));
}
