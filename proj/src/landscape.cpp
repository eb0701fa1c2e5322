#include "emp/landscape.hpp"

#include <cmath>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "emp/errors.hpp"

namespace emp {

void GridSpec::validate(int d_x) const {
    if (axis_indices[0] == axis_indices[1]) {
        throw std::invalid_argument("grid: axis indices must differ");
    }
    for (int a = 0; a < 2; ++a) {
        if (axis_indices[a] < 0 || axis_indices[a] >= d_x) {
            throw std::invalid_argument("grid: axis index out of range for the model");
        }
        if (!(axis_ranges[a][0] < axis_ranges[a][1])) {
            throw std::invalid_argument("grid: axis range must have min < max");
        }
        if (resolution[a] < 2) throw std::invalid_argument("grid: resolution must be >= 2");
    }
    if (static_cast<int>(fixed_values.size()) != d_x - 2) {
        throw std::invalid_argument("grid: fixed_values must cover exactly the non-axis components");
    }
}

double GridSpec::axis_value(int axis, int k) const {
    const double lo = axis_ranges[axis][0];
    const double hi = axis_ranges[axis][1];
    return lo + (hi - lo) * (static_cast<double>(k) / (resolution[axis] - 1));
}

StateVector GridSpec::state_at(int i, int j, int d_x) const {
    StateVector x(d_x);
    std::size_t next_fixed = 0;
    for (int c = 0; c < d_x; ++c) {
        if (c == axis_indices[0]) {
            x[c] = axis_value(0, i);
        } else if (c == axis_indices[1]) {
            x[c] = axis_value(1, j);
        } else {
            x[c] = fixed_values[next_fixed++];
        }
    }
    return x;
}

namespace {

LandscapeGrid make_empty(const SystemModel& model, const GridSpec& grid, Variant variant,
                         const HorizonSpec& horizon) {
    grid.validate(model.d_x);
    horizon.validate();
    LandscapeGrid out;
    out.grid = grid;
    out.variant = variant;
    out.horizon = horizon;
    out.values = Matrix::Zero(grid.resolution[0], grid.resolution[1]);
    out.failed.assign(static_cast<std::size_t>(grid.resolution[0]) * grid.resolution[1], 0);
    return out;
}

// One grid cell; failures are flagged, never fatal.
void eval_cell(const SystemModel& model, const GridSpec& grid, const HorizonSpec& horizon,
               const ChannelSpec& channel, LandscapeGrid& out, int i, int j) {
    try {
        const StateVector x0 = grid.state_at(i, j, model.d_x);
        out.values(i, j) = generalized_empowerment(model, x0, horizon, channel).value_nats;
    } catch (const NonFiniteState&) {
        out.values(i, j) = 0.0;
        out.failed[static_cast<std::size_t>(i) * grid.resolution[1] + j] = 1;
    }
}

}  // namespace

LandscapeGrid evaluate_landscape(const SystemModel& model, const GridSpec& grid, Variant variant,
                                 const HorizonSpec& horizon, const ChannelSpec& channel,
                                 int workers) {
    LandscapeGrid out = make_empty(model, grid, variant, horizon);
    const int rows = grid.resolution[0];
    const int cols = grid.resolution[1];
    const int n_cells = rows * cols;
#ifdef _OPENMP
    const int n_threads = workers > 0 ? workers : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 8) num_threads(n_threads)
#endif
    for (int cell = 0; cell < n_cells; ++cell) {
        eval_cell(model, grid, horizon, channel, out, cell / cols, cell % cols);
    }
    return out;
}

LandscapeGrid evaluate_landscape_serial(const SystemModel& model, const GridSpec& grid,
                                        Variant variant, const HorizonSpec& horizon,
                                        const ChannelSpec& channel) {
    LandscapeGrid out = make_empty(model, grid, variant, horizon);
    for (int i = 0; i < grid.resolution[0]; ++i) {
        for (int j = 0; j < grid.resolution[1]; ++j) {
            eval_cell(model, grid, horizon, channel, out, i, j);
        }
    }
    return out;
}

std::vector<ConvergencePoint> convergence_study(const SystemModel& model, const StateVector& x0,
                                                Variant variant, double t_e_seconds,
                                                const std::vector<double>& dt_list,
                                                const ChannelSpec& channel) {
    if (t_e_seconds <= 0.0) throw std::invalid_argument("convergence: t_e must be > 0");
    if (dt_list.empty()) throw std::invalid_argument("convergence: dt_list must not be empty");
    for (std::size_t i = 0; i < dt_list.size(); ++i) {
        if (dt_list[i] <= 0.0) throw std::invalid_argument("convergence: dt must be > 0");
        if (i > 0 && dt_list[i] >= dt_list[i - 1]) {
            throw std::invalid_argument("convergence: dt_list must be strictly descending");
        }
        const double steps = t_e_seconds / dt_list[i];
        if (std::abs(steps - std::round(steps)) > 1e-9 * steps) {
            throw std::invalid_argument("convergence: every dt must divide t_e_seconds");
        }
    }

    std::vector<ConvergencePoint> out;
    out.reserve(dt_list.size());
    for (const double dt : dt_list) {
        const int steps = static_cast<int>(std::llround(t_e_seconds / dt));
        const HorizonSpec horizon = variant_horizon(variant, dt, steps);
        out.push_back({dt, generalized_empowerment(model, x0, horizon, channel).value_nats});
    }
    return out;
}

}  // namespace emp
