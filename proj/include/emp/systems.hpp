#ifndef EMP_SYSTEMS_HPP
#define EMP_SYSTEMS_HPP

#include "emp/system_model.hpp"

namespace emp {

/// Planar pendulum, angle measured from the upright vertical.
struct PendulumParams {
    double mass = 1.0;     ///< kg
    double length = 1.0;   ///< m
    double gravity = 9.81; ///< m/s^2
};

/// Two-link pendulum actuated by a torque at the middle joint. theta1 is
/// the absolute angle of the first link from upright, theta2 the angle of
/// the second link relative to the first.
struct DoublePendulumParams {
    double m1 = 1.0, m2 = 1.0;          ///< link masses, kg
    double l1 = 1.0, l2 = 1.0;          ///< link lengths, m
    double lc1 = 0.5, lc2 = 0.5;        ///< lengths to center of mass, m
    double inertia1 = 1.0 / 12.0;       ///< moment of inertia about COM, kg m^2
    double inertia2 = 1.0 / 12.0;
    double gravity = 9.81;
};

/// Pole on a driven cart; force acts on the cart only, the pole angle is
/// measured from upright.
struct CartPoleParams {
    double cart_mass = 1.0;   ///< kg
    double pole_mass = 0.1;   ///< kg
    double pole_length = 1.0; ///< m
    double gravity = 9.81;
};

/// State (theta, theta_dot), action = torque.
SystemModel pendulum_model(const PendulumParams& p);

/// State (theta1, theta2, theta1_dot, theta2_dot), action = joint torque.
/// Accelerations come from the exact 2x2 mass-matrix solve; the Jacobian is
/// forward-mode differentiation of that same solve.
SystemModel double_pendulum_model(const DoublePendulumParams& p);

/// State (x, theta, x_dot, theta_dot), action = force on the cart.
SystemModel cartpole_model(const CartPoleParams& p);

/// Scalar dx = alpha*x dt + da. Every downstream quantity has a closed
/// form, which makes this the analytic oracle for sensitivity and
/// capacity tests.
SystemModel linear_test_model(double alpha);

}  // namespace emp

#endif  // EMP_SYSTEMS_HPP
