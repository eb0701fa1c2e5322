#include "emp/controller.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "emp/errors.hpp"

namespace emp {

namespace {

std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

bool lexicographically_less(const ActionVector& a, const ActionVector& b) {
    return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(),
                                        b.data() + b.size());
}

}  // namespace

HorizonSpec variant_horizon(Variant variant, double dt, int horizon_steps) {
    switch (variant) {
        case Variant::Classic:
            return HorizonSpec::classic(dt, horizon_steps);
        case Variant::KickedCef:
            return HorizonSpec::kicked(dt, horizon_steps);
        case Variant::ControlledLyapunov:
            return HorizonSpec::single_kick_final(dt, horizon_steps);
    }
    throw std::invalid_argument("unknown variant");
}

void ControlPolicySpec::validate() const {
    horizon.validate();
    if (action_bound <= 0.0) throw std::invalid_argument("policy: action_bound must be > 0");
    if (action_grid_size < 3 || action_grid_size % 2 == 0) {
        throw std::invalid_argument("policy: action_grid_size must be odd and >= 3");
    }
    if (sim_dt <= 0.0) throw std::invalid_argument("policy: sim_dt must be > 0");
    if (decision_dt < sim_dt) {
        throw std::invalid_argument("policy: decision_dt must be >= sim_dt");
    }
    const double ratio = decision_dt / sim_dt;
    if (std::abs(ratio - std::round(ratio)) > 1e-9 * ratio) {
        throw std::invalid_argument("policy: decision_dt must be a multiple of sim_dt");
    }
    if (expectation_samples < 1) {
        throw std::invalid_argument("policy: expectation_samples must be >= 1");
    }
}

std::vector<ActionVector> candidate_actions(const ControlPolicySpec& spec, int d_a) {
    spec.validate();
    if (d_a < 1) throw std::invalid_argument("candidate_actions: d_a must be >= 1");

    const double total = std::pow(static_cast<double>(spec.action_grid_size), d_a);
    if (total > 1e5) {
        throw GridTooLarge("candidate grid has " + std::to_string(total) +
                           " points (limit 1e5)");
    }

    const int half = (spec.action_grid_size - 1) / 2;
    std::vector<double> levels;
    levels.reserve(spec.action_grid_size);
    for (int k = -half; k <= half; ++k) {
        levels.push_back(spec.action_bound * static_cast<double>(k) /
                         static_cast<double>(half));
    }

    std::vector<ActionVector> candidates;
    candidates.reserve(static_cast<std::size_t>(total));
    std::vector<int> idx(d_a, 0);
    while (true) {
        ActionVector a(d_a);
        for (int i = 0; i < d_a; ++i) a[i] = levels[idx[i]];
        candidates.push_back(a);
        int pos = d_a - 1;
        while (pos >= 0 && ++idx[pos] == spec.action_grid_size) {
            idx[pos] = 0;
            --pos;
        }
        if (pos < 0) break;
    }
    return candidates;
}

GreedyChoice greedy_action(const SystemModel& model, const StateVector& x,
                           const ControlPolicySpec& spec, const NoiseSpec* noise,
                           std::uint64_t noise_seed) {
    if (!x.allFinite()) throw NonFiniteState("greedy_action: state not finite");
    const std::vector<ActionVector> candidates = candidate_actions(spec, model.d_a);
    const int n = static_cast<int>(candidates.size());
    std::vector<double> values(n, -std::numeric_limits<double>::infinity());
    const bool sample_successors = spec.expectation_samples > 1 && noise != nullptr;

#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < n; ++i) {
        try {
            if (!sample_successors) {
                const StateVector next =
                    step_deterministic(model, x, candidates[i], spec.decision_dt);
                values[i] =
                    generalized_empowerment(model, next, spec.horizon, spec.channel).value_nats;
            } else {
                double sum = 0.0;
                for (int k = 0; k < spec.expectation_samples; ++k) {
                    RngStream rng(splitmix64(noise_seed ^ splitmix64(
                                                 static_cast<std::uint64_t>(i) * 65537u + k)));
                    const StateVector next = step_stochastic(model, x, candidates[i],
                                                             spec.decision_dt, *noise, rng);
                    sum += generalized_empowerment(model, next, spec.horizon, spec.channel)
                               .value_nats;
                }
                values[i] = sum / spec.expectation_samples;
            }
        } catch (const NonFiniteState&) {
            // Successor blew up; leave the candidate at -inf.
        }
    }

    int best = -1;
    for (int i = 0; i < n; ++i) {
        if (!std::isfinite(values[i])) continue;
        if (best < 0) {
            best = i;
            continue;
        }
        if (values[i] > values[best]) {
            best = i;
        } else if (values[i] == values[best]) {
            const double ni = candidates[i].norm();
            const double nb = candidates[best].norm();
            if (ni < nb || (ni == nb && lexicographically_less(candidates[i], candidates[best]))) {
                best = i;
            }
        }
    }
    if (best < 0) {
        throw NonFiniteState("greedy_action: every candidate successor blew up");
    }
    return {candidates[best], values[best]};
}

Rollout run_rollout(const SystemModel& model, const StateVector& x0, double duration_s,
                    const ControlPolicySpec& spec, const NoiseSpec& noise, std::uint64_t seed) {
    spec.validate();
    if (duration_s <= 0.0) throw std::invalid_argument("run_rollout: duration must be > 0");
    const double n_decisions_real = duration_s / spec.decision_dt;
    if (std::abs(n_decisions_real - std::round(n_decisions_real)) > 1e-9 * n_decisions_real) {
        throw std::invalid_argument("run_rollout: duration must be a multiple of decision_dt");
    }
    const int n_decisions = static_cast<int>(std::llround(n_decisions_real));
    const int steps_per_decision =
        static_cast<int>(std::llround(spec.decision_dt / spec.sim_dt));

    Rollout out;
    out.times.reserve(n_decisions + 1);
    out.states.reserve(n_decisions + 1);
    out.actions.reserve(n_decisions);
    out.empowerment_trace.reserve(n_decisions);

    RngStream rng(seed);
    StateVector x = x0;
    out.times.push_back(0.0);
    out.states.push_back(x);

    for (int i = 0; i < n_decisions; ++i) {
        try {
            const std::uint64_t decision_seed =
                splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(i) + 1));
            const GreedyChoice choice = greedy_action(model, x, spec, &noise, decision_seed);
            for (int k = 0; k < steps_per_decision; ++k) {
                x = step_stochastic(model, x, choice.action, spec.sim_dt, noise, rng);
            }
            out.actions.push_back(choice.action);
            out.empowerment_trace.push_back(choice.value_nats);
            out.times.push_back((i + 1) * spec.decision_dt);
            out.states.push_back(x);
        } catch (const NonFiniteState&) {
            out.failed = true;
            break;
        }
    }
    return out;
}

}  // namespace emp
