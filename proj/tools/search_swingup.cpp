// Sweeps controller knobs for the double-pendulum and cart-pole swing-up
// tasks and reports which combinations reach the upright band. Used to
// select the committed configs under configs/; see README.

#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include "emp/bands.hpp"
#include "emp/controller.hpp"
#include "emp/systems.hpp"

namespace {

struct Candidate {
    emp::Variant variant;
    int horizon_steps;
    double power;
    double noise_std;
    double decision_dt;
    std::uint64_t seed;
};

const char* variant_tag(emp::Variant v) {
    switch (v) {
        case emp::Variant::Classic: return "classic";
        case emp::Variant::KickedCef: return "kicked_cef";
        case emp::Variant::ControlledLyapunov: return "controlled_lyapunov";
    }
    return "?";
}

}  // namespace

int main(int argc, char** argv) {
    const std::string task = argc > 1 ? argv[1] : "double_pendulum";
    const double duration = argc > 2 ? std::atof(argv[2]) : 30.0;

    emp::SystemModel model;
    emp::StateVector x0;
    emp::StatePredicate band;
    if (task == "double_pendulum") {
        model = emp::double_pendulum_model({});
        x0.resize(4);
        x0 << M_PI, 0.0, 0.0, 0.0;
        band = [](const emp::StateVector& x) { return emp::double_pendulum_upright(x); };
    } else if (task == "cartpole") {
        model = emp::cartpole_model({});
        x0.resize(4);
        x0 << 0.0, M_PI, 0.0, 0.0;
        band = [](const emp::StateVector& x) { return emp::cartpole_pole_upright(x); };
    } else {
        std::fprintf(stderr, "usage: search_swingup [double_pendulum|cartpole] [duration_s]\n");
        return 2;
    }

    std::vector<Candidate> sweep;
    for (const auto variant : {emp::Variant::Classic, emp::Variant::KickedCef}) {
        for (const int horizon : {250, 500, 1000}) {
            for (const double power : {0.1, 1.0, 10.0}) {
                for (const double noise : {0.1, 1.0}) {
                    for (const double decision_dt : {0.02, 0.05}) {
                        sweep.push_back({variant, horizon, power, noise, decision_dt, 0});
                    }
                }
            }
        }
    }

    std::printf("task=%s duration=%.1fs candidates=%zu\n", task.c_str(), duration, sweep.size());
    for (const Candidate& c : sweep) {
        emp::ControlPolicySpec spec;
        spec.variant = c.variant;
        spec.horizon = emp::variant_horizon(c.variant, 1e-3, c.horizon_steps);
        spec.channel.power = c.power;
        spec.channel.noise_std = c.noise_std;
        spec.decision_dt = c.decision_dt;
        spec.sim_dt = 1e-3;

        emp::NoiseSpec noise{0.01, c.noise_std};
        const emp::Rollout rollout =
            emp::run_rollout(model, x0, duration, spec, noise, c.seed);

        const double entered = emp::first_time_in_band(rollout, band);
        const bool final_hold =
            emp::band_held(rollout, band, duration - 2.0, duration) && !rollout.failed;
        std::printf(
            "%-12s horizon=%4d power=%-5g noise=%-4g ddt=%.2f seed=%llu  enter=%7.2fs "
            "final2s=%s%s\n",
            variant_tag(c.variant), c.horizon_steps, c.power, c.noise_std, c.decision_dt,
            static_cast<unsigned long long>(c.seed), entered, final_hold ? "yes" : "no",
            rollout.failed ? " FAILED" : "");
        std::fflush(stdout);
    }
    return 0;
}
