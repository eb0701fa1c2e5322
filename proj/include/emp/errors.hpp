#ifndef EMP_ERRORS_HPP
#define EMP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace emp {

/// A state or matrix entry became NaN/Inf. Usually means the time step is
/// too coarse for a stiff region of the dynamics.
struct NonFiniteState : std::runtime_error {
    explicit NonFiniteState(const std::string& what) : std::runtime_error(what) {}
};

/// Mass-matrix solve lost rank. Cannot happen for physically valid
/// parameters; guards against programming errors.
struct SingularMassMatrix : std::runtime_error {
    explicit SingularMassMatrix(const std::string& what) : std::runtime_error(what) {}
};

struct IndexOutOfRange : std::out_of_range {
    explicit IndexOutOfRange(const std::string& what) : std::out_of_range(what) {}
};

/// A matrix decomposition failed to converge.
struct NumericalFailure : std::runtime_error {
    explicit NumericalFailure(const std::string& what) : std::runtime_error(what) {}
};

/// Candidate-action grid would exceed the enumeration budget.
struct GridTooLarge : std::runtime_error {
    explicit GridTooLarge(const std::string& what) : std::runtime_error(what) {}
};

/// Configuration text is malformed or violates a cross-field constraint.
/// Carries the line number (1-based, 0 when the key was never given) and
/// the offending key.
struct ParseError : std::runtime_error {
    ParseError(int line_, std::string key_, const std::string& reason)
        : std::runtime_error("config line " + std::to_string(line_) + ", key '" + key_ +
                             "': " + reason),
          line(line_),
          key(std::move(key_)) {}
    int line;
    std::string key;
};

struct IOError : std::runtime_error {
    explicit IOError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace emp

#endif  // EMP_ERRORS_HPP
