#ifndef EMP_TYPES_HPP
#define EMP_TYPES_HPP

#include <Eigen/Dense>
#include <cmath>

namespace emp {

/// System state, length d_x. Components are plain SI quantities
/// (rad, rad/s, m, m/s) named by the owning SystemModel.
using StateVector = Eigen::VectorXd;

/// Agent action, length d_a (torque in N*m or force in N).
using ActionVector = Eigen::VectorXd;

using Matrix = Eigen::MatrixXd;

/// Wrap an angle to (-pi, pi]. States stay unwrapped; wrapping is for
/// landscape indexing and success bands only.
inline double wrap_angle(double theta) {
    const double two_pi = 2.0 * M_PI;
    double w = std::fmod(theta, two_pi);
    if (w <= -M_PI) w += two_pi;
    if (w > M_PI) w -= two_pi;
    return w;
}

}  // namespace emp

#endif  // EMP_TYPES_HPP
