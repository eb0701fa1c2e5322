#ifndef EMP_LANDSCAPE_HPP
#define EMP_LANDSCAPE_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "emp/capacity.hpp"
#include "emp/controller.hpp"
#include "emp/system_model.hpp"

namespace emp {

/// Two-axis slice of state space: a uniform grid over two components with
/// the remaining components pinned.
struct GridSpec {
    std::array<int, 2> axis_indices = {0, 1};
    std::array<std::array<double, 2>, 2> axis_ranges = {{{-M_PI, M_PI}, {-2 * M_PI, 2 * M_PI}}};
    std::array<int, 2> resolution = {101, 101};
    std::vector<double> fixed_values;  ///< non-axis components, ascending index order

    void validate(int d_x) const;
    double axis_value(int axis, int k) const;
    StateVector state_at(int i, int j, int d_x) const;

    bool operator==(const GridSpec&) const = default;
};

/// Empowerment values over a grid. Cells whose rollout blew up are flagged
/// rather than given a made-up value.
struct LandscapeGrid {
    GridSpec grid;
    Variant variant = Variant::Classic;
    HorizonSpec horizon;
    Matrix values;                      ///< resolution[0] x resolution[1], nats
    std::vector<std::uint8_t> failed;   ///< row-major flags, same shape
};

/// Evaluate the variant's empowerment at every grid point. Cells are
/// independent pure computations; results are identical for any worker
/// count (workers = 0 uses the OpenMP default).
LandscapeGrid evaluate_landscape(const SystemModel& model, const GridSpec& grid,
                                 Variant variant, const HorizonSpec& horizon,
                                 const ChannelSpec& channel, int workers = 0);

/// Single-threaded reference implementation, kept for testing the parallel
/// kernel against.
LandscapeGrid evaluate_landscape_serial(const SystemModel& model, const GridSpec& grid,
                                        Variant variant, const HorizonSpec& horizon,
                                        const ChannelSpec& channel);

struct ConvergencePoint {
    double dt = 0.0;
    double value_nats = 0.0;
};

/// Empowerment of x0 at a fixed physical horizon t_e for each time step in
/// dt_list (descending; each must divide t_e to an integer step count).
std::vector<ConvergencePoint> convergence_study(const SystemModel& model, const StateVector& x0,
                                                Variant variant, double t_e_seconds,
                                                const std::vector<double>& dt_list,
                                                const ChannelSpec& channel);

}  // namespace emp

#endif  // EMP_LANDSCAPE_HPP
