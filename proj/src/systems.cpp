#include "emp/systems.hpp"

#include <cmath>
#include <stdexcept>

#include "emp/dual.hpp"
#include "emp/errors.hpp"

namespace emp {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
}

inline double value_of(double x) { return x; }
template <int N>
inline double value_of(const fwd::Dual<N>& x) {
    return x.v;
}

// Acrobot-style accelerations: solve M(theta2) * qdd = rhs for the two
// joint accelerations. Templated so the same kernel yields both the drift
// and (via Dual<4>) its exact Jacobian.
template <typename S>
void double_pendulum_accel(const DoublePendulumParams& p, const S& theta1, const S& theta2,
                           const S& w1, const S& w2, const S& torque, S& qdd1, S& qdd2) {
    const double i2c = p.m2 * p.lc2 * p.lc2 + p.inertia2;
    const S c2 = cos(theta2);
    const S s2 = sin(theta2);

    const S d1 = p.m1 * p.lc1 * p.lc1 +
                 p.m2 * (p.l1 * p.l1 + p.lc2 * p.lc2 + 2.0 * p.l1 * p.lc2 * c2) + p.inertia1 +
                 p.inertia2;
    const S d2 = p.m2 * (p.lc2 * p.lc2 + p.l1 * p.lc2 * c2) + p.inertia2;

    if (value_of(d1) < 1e-12 || i2c - value_of(d2) * value_of(d2) / value_of(d1) < 1e-12) {
        throw SingularMassMatrix("double pendulum mass matrix lost rank");
    }

    const S grav2 = -p.m2 * p.lc2 * p.gravity * sin(theta1 + theta2);
    const S coriolis1 = -p.m2 * p.l1 * p.lc2 * s2 * (w2 * w2 + 2.0 * w1 * w2);
    const S phi1 =
        coriolis1 - (p.m1 * p.lc1 + p.m2 * p.l1) * p.gravity * sin(theta1) + grav2;
    const S coriolis2 = p.m2 * p.l1 * p.lc2 * (w1 * w1) * s2;

    // M = [[d1, d2], [d2, i2c]], rhs = [-phi1, torque - coriolis2 - grav2]
    const S r1 = -phi1;
    const S r2 = torque - coriolis2 - grav2;
    const S det = d1 * i2c - d2 * d2;
    qdd1 = (r1 * i2c - d2 * r2) / det;
    qdd2 = (d1 * r2 - d2 * r1) / det;
}

template <typename S>
void cartpole_accel(const CartPoleParams& p, const S& theta, const S& xdot, const S& w,
                    const S& force, S& xdd, S& tdd) {
    (void)xdot;
    const S s = sin(theta);
    const S c = cos(theta);
    const S denom = p.cart_mass + p.pole_mass * s * s;
    xdd = (p.pole_mass * s * (p.gravity * c - p.pole_length * (w * w)) + force) / denom;
    tdd = (force * c - p.pole_mass * p.pole_length * (w * w) * c * s +
           (p.cart_mass + p.pole_mass) * p.gravity * s) /
          (p.pole_length * denom);
}

}  // namespace

SystemModel pendulum_model(const PendulumParams& p) {
    require(p.mass > 0 && p.length > 0 && p.gravity > 0, "pendulum params must be positive");
    SystemModel m;
    m.d_x = 2;
    m.d_a = 1;
    m.state_names = {"theta", "theta_dot"};
    m.drift = [p](const StateVector& x) {
        StateVector f(2);
        f << x[1], p.gravity / p.length * std::sin(x[0]);
        return f;
    };
    m.gain = [p](const StateVector&) {
        Matrix g(2, 1);
        g << 0.0, 1.0 / (p.mass * p.length * p.length);
        return g;
    };
    m.drift_jacobian = [p](const StateVector& x) {
        Matrix j(2, 2);
        j << 0.0, 1.0, p.gravity / p.length * std::cos(x[0]), 0.0;
        return j;
    };
    return m;
}

SystemModel double_pendulum_model(const DoublePendulumParams& p) {
    require(p.m1 > 0 && p.m2 > 0 && p.l1 > 0 && p.l2 > 0 && p.lc1 > 0 && p.lc2 > 0 &&
                p.inertia1 > 0 && p.inertia2 > 0 && p.gravity > 0,
            "double pendulum params must be positive");
    require(p.lc1 <= p.l1 && p.lc2 <= p.l2, "center of mass must lie on the link");
    SystemModel m;
    m.d_x = 4;
    m.d_a = 1;
    m.state_names = {"theta1", "theta2", "theta1_dot", "theta2_dot"};
    m.drift = [p](const StateVector& x) {
        double qdd1 = 0.0, qdd2 = 0.0;
        double zero = 0.0;
        double_pendulum_accel<double>(p, x[0], x[1], x[2], x[3], zero, qdd1, qdd2);
        StateVector f(4);
        f << x[2], x[3], qdd1, qdd2;
        return f;
    };
    m.gain = [p](const StateVector& x) {
        // Torque enters the accelerations through the mass-matrix inverse:
        // columns of M^-1 * e2.
        const double c2 = std::cos(x[1]);
        const double i2c = p.m2 * p.lc2 * p.lc2 + p.inertia2;
        const double d1 = p.m1 * p.lc1 * p.lc1 +
                          p.m2 * (p.l1 * p.l1 + p.lc2 * p.lc2 + 2.0 * p.l1 * p.lc2 * c2) +
                          p.inertia1 + p.inertia2;
        const double d2 = p.m2 * (p.lc2 * p.lc2 + p.l1 * p.lc2 * c2) + p.inertia2;
        const double det = d1 * i2c - d2 * d2;
        Matrix g = Matrix::Zero(4, 1);
        g(2, 0) = -d2 / det;
        g(3, 0) = d1 / det;
        return g;
    };
    m.drift_jacobian = [p](const StateVector& x) {
        using D = fwd::Dual<4>;
        const D t1 = D::seed(x[0], 0);
        const D t2 = D::seed(x[1], 1);
        const D w1 = D::seed(x[2], 2);
        const D w2 = D::seed(x[3], 3);
        D qdd1, qdd2;
        double_pendulum_accel<D>(p, t1, t2, w1, w2, D(0.0), qdd1, qdd2);
        Matrix j = Matrix::Zero(4, 4);
        j(0, 2) = 1.0;
        j(1, 3) = 1.0;
        j.row(2) = qdd1.d.transpose();
        j.row(3) = qdd2.d.transpose();
        return j;
    };
    return m;
}

SystemModel cartpole_model(const CartPoleParams& p) {
    require(p.cart_mass > 0 && p.pole_mass > 0 && p.pole_length > 0 && p.gravity > 0,
            "cart-pole params must be positive");
    SystemModel m;
    m.d_x = 4;
    m.d_a = 1;
    m.state_names = {"x", "theta", "x_dot", "theta_dot"};
    m.drift = [p](const StateVector& x) {
        double xdd = 0.0, tdd = 0.0;
        double zero = 0.0;
        cartpole_accel<double>(p, x[1], x[2], x[3], zero, xdd, tdd);
        StateVector f(4);
        f << x[2], x[3], xdd, tdd;
        return f;
    };
    m.gain = [p](const StateVector& x) {
        const double s = std::sin(x[1]);
        const double c = std::cos(x[1]);
        const double denom = p.cart_mass + p.pole_mass * s * s;
        Matrix g = Matrix::Zero(4, 1);
        g(2, 0) = 1.0 / denom;
        g(3, 0) = c / (p.pole_length * denom);
        return g;
    };
    m.drift_jacobian = [p](const StateVector& x) {
        using D = fwd::Dual<4>;
        const D theta = D::seed(x[1], 1);
        const D xdot = D::seed(x[2], 2);
        const D w = D::seed(x[3], 3);
        D xdd, tdd;
        cartpole_accel<D>(p, theta, xdot, w, D(0.0), xdd, tdd);
        Matrix j = Matrix::Zero(4, 4);
        j(0, 2) = 1.0;
        j(1, 3) = 1.0;
        j.row(2) = xdd.d.transpose();
        j.row(3) = tdd.d.transpose();
        return j;
    };
    return m;
}

SystemModel linear_test_model(double alpha) {
    SystemModel m;
    m.d_x = 1;
    m.d_a = 1;
    m.state_names = {"x"};
    m.drift = [alpha](const StateVector& x) {
        StateVector f(1);
        f << alpha * x[0];
        return f;
    };
    m.gain = [](const StateVector&) {
        Matrix g(1, 1);
        g << 1.0;
        return g;
    };
    m.drift_jacobian = [alpha](const StateVector&) {
        Matrix j(1, 1);
        j << alpha;
        return j;
    };
    return m;
}

}  // namespace emp
