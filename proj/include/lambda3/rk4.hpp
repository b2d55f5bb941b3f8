#pragma once

namespace lambda3 {

// One classical fourth-order Runge-Kutta step for an autonomous system.
// State needs +, scalar *, and copy; f must return State by value.
// The update is a fixed linear combination of stage derivatives, so any
// linear functional w with w(f(x)) = 0 for all x is conserved exactly in
// exact arithmetic.
template <class State, class Deriv>
State rk4_step(const State& x, double dt, Deriv&& f) {
    const State k1 = f(x);
    const State k2 = f(x + (dt / 2.0) * k1);
    const State k3 = f(x + (dt / 2.0) * k2);
    const State k4 = f(x + dt * k3);
    return x + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

}  // namespace lambda3
