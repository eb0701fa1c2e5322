#ifndef EMP_DUAL_HPP
#define EMP_DUAL_HPP

#include <Eigen/Dense>
#include <cmath>

namespace emp::fwd {

/// Forward-mode scalar with N partial derivatives. Physics kernels are
/// templated on the scalar type; running them on Dual<N> yields drift
/// Jacobians that are exact for the implemented closed-form solve.
template <int N>
struct Dual {
    using Grad = Eigen::Matrix<double, N, 1>;

    double v = 0.0;
    Grad d = Grad::Zero();

    Dual() = default;
    Dual(double value) : v(value) {}  // NOLINT: implicit from constants
    Dual(double value, const Grad& grad) : v(value), d(grad) {}

    /// Independent variable number i.
    static Dual seed(double value, int i) {
        Dual out(value);
        out.d[i] = 1.0;
        return out;
    }

    Dual operator-() const { return {-v, -d}; }

    friend Dual operator+(const Dual& a, const Dual& b) { return {a.v + b.v, a.d + b.d}; }
    friend Dual operator-(const Dual& a, const Dual& b) { return {a.v - b.v, a.d - b.d}; }
    friend Dual operator*(const Dual& a, const Dual& b) {
        return {a.v * b.v, a.v * b.d + b.v * a.d};
    }
    friend Dual operator/(const Dual& a, const Dual& b) {
        const double inv = 1.0 / b.v;
        return {a.v * inv, (a.d - (a.v * inv) * b.d) * inv};
    }

    friend Dual sin(const Dual& a) { return {std::sin(a.v), std::cos(a.v) * a.d}; }
    friend Dual cos(const Dual& a) { return {std::cos(a.v), -std::sin(a.v) * a.d}; }
};

}  // namespace emp::fwd

#endif  // EMP_DUAL_HPP
