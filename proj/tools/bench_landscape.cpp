// Times the parallel landscape kernel against the serial reference on a
// moderate pendulum grid and reports the speedup per worker count.

#include <chrono>
#include <cstdio>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "emp/landscape.hpp"
#include "emp/systems.hpp"

using Clock = std::chrono::steady_clock;

static double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

int main(int argc, char** argv) {
    const int res = argc > 1 ? std::atoi(argv[1]) : 61;
    const int horizon = argc > 2 ? std::atoi(argv[2]) : 500;

    const emp::SystemModel model = emp::pendulum_model({});
    emp::GridSpec grid;
    grid.resolution = {res, res};
    const emp::HorizonSpec spec = emp::HorizonSpec::classic(1e-3, horizon);
    const emp::ChannelSpec channel;

    std::printf("landscape %dx%d, horizon %d steps\n", res, res, horizon);

    auto t0 = Clock::now();
    const emp::LandscapeGrid reference =
        emp::evaluate_landscape_serial(model, grid, emp::Variant::Classic, spec, channel);
    const double serial_s = seconds_since(t0);
    std::printf("%8s  %8.3f s  (reference)\n", "serial", serial_s);

    int max_workers = 8;
#ifdef _OPENMP
    max_workers = omp_get_max_threads();
#endif
    for (int workers = 1; workers <= max_workers; workers *= 2) {
        t0 = Clock::now();
        const emp::LandscapeGrid parallel = emp::evaluate_landscape(
            model, grid, emp::Variant::Classic, spec, channel, workers);
        const double par_s = seconds_since(t0);
        const bool identical = (parallel.values.array() == reference.values.array()).all() &&
                               parallel.failed == reference.failed;
        std::printf("%5d wk  %8.3f s  speedup %5.2fx  %s\n", workers, par_s, serial_s / par_s,
                    identical ? "bit-identical" : "MISMATCH");
        if (!identical) return 1;
    }
    return 0;
}
