#include "emp/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "emp/errors.hpp"

namespace emp {

namespace {

struct Entry {
    std::string value;
    int line = 0;
    bool used = false;
};

// Section -> key -> entry. Keys are unique per section (duplicates are
// parse errors).
using Entries = std::map<std::string, std::map<std::string, Entry>>;

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

Entries tokenize(const std::string& text) {
    static const std::set<std::string> known_sections = {
        "system",      "empowerment", "noise",  "controller",
        "run",         "grid",        "convergence", "lyapunov", "output"};
    Entries entries;
    std::istringstream stream(text);
    std::string raw;
    std::string section;
    int line_no = 0;
    while (std::getline(stream, raw)) {
        ++line_no;
        const auto comment = raw.find('#');
        if (comment != std::string::npos) raw.erase(comment);
        const std::string line = trim(raw);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') throw ParseError(line_no, line, "unterminated section header");
            section = trim(line.substr(1, line.size() - 2));
            if (!known_sections.count(section)) {
                throw ParseError(line_no, section, "unknown section");
            }
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw ParseError(line_no, line, "expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) throw ParseError(line_no, line, "empty key");
        if (section.empty()) throw ParseError(line_no, key, "key outside of any [section]");
        auto [it, inserted] = entries[section].emplace(key, Entry{value, line_no, false});
        if (!inserted) {
            throw ParseError(line_no, key,
                             "duplicate key (first given on line " + std::to_string(it->second.line) + ")");
        }
    }
    return entries;
}

class Reader {
  public:
    explicit Reader(Entries entries) : entries_(std::move(entries)) {}

    bool has(const std::string& section, const std::string& key) const {
        const auto sec = entries_.find(section);
        return sec != entries_.end() && sec->second.count(key) > 0;
    }

    int line_of(const std::string& section, const std::string& key) const {
        const auto sec = entries_.find(section);
        if (sec == entries_.end()) return 0;
        const auto it = sec->second.find(key);
        return it == sec->second.end() ? 0 : it->second.line;
    }

    double number(const std::string& section, const std::string& key, double fallback) {
        const Entry* e = fetch(section, key);
        if (!e) return fallback;
        return parse_number(e->value, e->line, key);
    }

    std::int64_t integer(const std::string& section, const std::string& key,
                         std::int64_t fallback) {
        const Entry* e = fetch(section, key);
        if (!e) return fallback;
        const double v = parse_number(e->value, e->line, key);
        if (std::abs(v - std::round(v)) > 0.0) {
            throw ParseError(e->line, key, "expected an integer");
        }
        return static_cast<std::int64_t>(std::llround(v));
    }

    std::string text(const std::string& section, const std::string& key,
                     const std::string& fallback) {
        const Entry* e = fetch(section, key);
        return e ? e->value : fallback;
    }

    std::vector<double> number_list(const std::string& section, const std::string& key,
                                    const std::vector<double>& fallback) {
        const Entry* e = fetch(section, key);
        if (!e) return fallback;
        std::vector<double> out;
        std::string item;
        std::istringstream ss(e->value);
        while (std::getline(ss, item, ',')) {
            item = trim(item);
            if (item.empty()) throw ParseError(e->line, key, "empty list element");
            out.push_back(parse_number(item, e->line, key));
        }
        return out;
    }

    /// Every key must have been consumed; the first leftover is an error.
    void reject_unknown() const {
        for (const auto& [section, keys] : entries_) {
            for (const auto& [key, entry] : keys) {
                if (!entry.used) {
                    throw ParseError(entry.line, key, "unknown key in [" + section + "]");
                }
            }
        }
    }

  private:
    const Entry* fetch(const std::string& section, const std::string& key) {
        auto sec = entries_.find(section);
        if (sec == entries_.end()) return nullptr;
        auto it = sec->second.find(key);
        if (it == sec->second.end()) return nullptr;
        it->second.used = true;
        return &it->second;
    }

    static double parse_number(const std::string& s, int line, const std::string& key) {
        double value = 0.0;
        const char* begin = s.data();
        const char* end = s.data() + s.size();
        const auto [ptr, ec] = std::from_chars(begin, end, value);
        if (ec != std::errc() || ptr != end) {
            throw ParseError(line, key, "not a number: '" + s + "'");
        }
        return value;
    }

    Entries entries_;
};

StateVector default_start_state(SystemKind kind) {
    switch (kind) {
        case SystemKind::Pendulum: {
            StateVector x(2);
            x << M_PI, 0.0;
            return x;
        }
        case SystemKind::DoublePendulum: {
            StateVector x(4);
            x << M_PI, 0.0, 0.0, 0.0;
            return x;
        }
        case SystemKind::CartPole: {
            StateVector x(4);
            x << 0.0, M_PI, 0.0, 0.0;
            return x;
        }
        case SystemKind::Linear: {
            StateVector x(1);
            x << 1.0;
            return x;
        }
    }
    throw std::invalid_argument("unknown system kind");
}

GridSpec default_grid(SystemKind kind) {
    GridSpec g;
    switch (kind) {
        case SystemKind::Pendulum:
            g.axis_indices = {0, 1};
            g.axis_ranges = {{{-M_PI, M_PI}, {-2 * M_PI, 2 * M_PI}}};
            g.resolution = {101, 101};
            g.fixed_values = {};
            break;
        case SystemKind::DoublePendulum:
            g.axis_indices = {0, 1};
            g.axis_ranges = {{{-M_PI, M_PI}, {-M_PI, M_PI}}};
            g.resolution = {51, 51};
            g.fixed_values = {0.0, 0.0};
            break;
        case SystemKind::CartPole:
            g.axis_indices = {1, 3};
            g.axis_ranges = {{{-M_PI, M_PI}, {-2 * M_PI, 2 * M_PI}}};
            g.resolution = {51, 51};
            g.fixed_values = {0.0, 0.0};
            break;
        case SystemKind::Linear:
            // No two-axis slice exists for a scalar system; landscape runs
            // reject this at validation.
            g.fixed_values = {};
            break;
    }
    return g;
}

int state_dim(SystemKind kind) {
    switch (kind) {
        case SystemKind::Pendulum: return 2;
        case SystemKind::DoublePendulum: return 4;
        case SystemKind::CartPole: return 4;
        case SystemKind::Linear: return 1;
    }
    return 0;
}

}  // namespace

const char* to_string(SystemKind k) {
    switch (k) {
        case SystemKind::Pendulum: return "pendulum";
        case SystemKind::DoublePendulum: return "double_pendulum";
        case SystemKind::CartPole: return "cartpole";
        case SystemKind::Linear: return "linear";
    }
    return "?";
}

const char* to_string(Variant v) {
    switch (v) {
        case Variant::Classic: return "classic";
        case Variant::KickedCef: return "kicked_cef";
        case Variant::ControlledLyapunov: return "controlled_lyapunov";
    }
    return "?";
}

const char* to_string(CapacityConvention c) {
    return c == CapacityConvention::Linear ? "linear" : "squared";
}

SystemModel RunConfig::make_model() const {
    SystemModel model;
    switch (system) {
        case SystemKind::Pendulum: model = pendulum_model(pendulum); break;
        case SystemKind::DoublePendulum: model = double_pendulum_model(double_pendulum); break;
        case SystemKind::CartPole: model = cartpole_model(cartpole); break;
        case SystemKind::Linear: model = linear_test_model(linear_alpha); break;
    }
    if (gain_scale != 1.0) {
        const auto base_gain = model.gain;
        const double scale = gain_scale;
        model.gain = [base_gain, scale](const StateVector& x) { return base_gain(x) * scale; };
    }
    return model;
}

ControlPolicySpec RunConfig::make_policy() const {
    ControlPolicySpec policy;
    policy.variant = variant;
    policy.horizon = horizon;
    policy.channel = channel;
    policy.action_bound = action_bound;
    policy.action_grid_size = action_grid_size;
    policy.decision_dt = decision_dt;
    policy.sim_dt = sim_dt;
    policy.expectation_samples = expectation_samples;
    return policy;
}

RunConfig parse_config(const std::string& text) {
    Reader reader(tokenize(text));
    RunConfig cfg;

    // [system]
    const std::string sys = reader.text("system", "type", "pendulum");
    if (sys == "pendulum") {
        cfg.system = SystemKind::Pendulum;
        cfg.pendulum.mass = reader.number("system", "mass", cfg.pendulum.mass);
        cfg.pendulum.length = reader.number("system", "length", cfg.pendulum.length);
        cfg.pendulum.gravity = reader.number("system", "gravity", cfg.pendulum.gravity);
    } else if (sys == "double_pendulum") {
        cfg.system = SystemKind::DoublePendulum;
        auto& p = cfg.double_pendulum;
        p.m1 = reader.number("system", "m1", p.m1);
        p.m2 = reader.number("system", "m2", p.m2);
        p.l1 = reader.number("system", "l1", p.l1);
        p.l2 = reader.number("system", "l2", p.l2);
        p.lc1 = reader.number("system", "lc1", p.lc1);
        p.lc2 = reader.number("system", "lc2", p.lc2);
        p.inertia1 = reader.number("system", "inertia1", p.inertia1);
        p.inertia2 = reader.number("system", "inertia2", p.inertia2);
        p.gravity = reader.number("system", "gravity", p.gravity);
    } else if (sys == "cartpole") {
        cfg.system = SystemKind::CartPole;
        auto& p = cfg.cartpole;
        p.cart_mass = reader.number("system", "cart_mass", p.cart_mass);
        p.pole_mass = reader.number("system", "pole_mass", p.pole_mass);
        p.pole_length = reader.number("system", "pole_length", p.pole_length);
        p.gravity = reader.number("system", "gravity", p.gravity);
    } else if (sys == "linear") {
        cfg.system = SystemKind::Linear;
        cfg.linear_alpha = reader.number("system", "alpha", cfg.linear_alpha);
    } else {
        throw ParseError(reader.line_of("system", "type"), "type",
                         "expected pendulum | double_pendulum | cartpole | linear");
    }
    cfg.gain_scale = reader.number("system", "gain_scale", 1.0);
    if (cfg.gain_scale < 0.0) {
        throw ParseError(reader.line_of("system", "gain_scale"), "gain_scale",
                         "must be >= 0");
    }

    // [empowerment]
    const std::string variant = reader.text("empowerment", "variant", "classic");
    if (variant == "classic") {
        cfg.variant = Variant::Classic;
    } else if (variant == "kicked_cef") {
        cfg.variant = Variant::KickedCef;
    } else if (variant == "controlled_lyapunov") {
        cfg.variant = Variant::ControlledLyapunov;
    } else {
        throw ParseError(reader.line_of("empowerment", "variant"), "variant",
                         "expected classic | kicked_cef | controlled_lyapunov");
    }

    const double dt = reader.number("empowerment", "dt", 1e-3);
    const auto horizon_steps = reader.integer("empowerment", "horizon_steps", 500);
    if (dt <= 0.0) {
        throw ParseError(reader.line_of("empowerment", "dt"), "dt", "must be > 0");
    }
    if (horizon_steps < 1) {
        throw ParseError(reader.line_of("empowerment", "horizon_steps"), "horizon_steps",
                         "must be >= 1");
    }
    const HorizonSpec shaped = variant_horizon(cfg.variant, dt, static_cast<int>(horizon_steps));
    const auto action_steps =
        reader.integer("empowerment", "action_steps", shaped.action_steps);
    const auto gap_steps = reader.integer("empowerment", "gap_steps", shaped.gap_steps);
    cfg.horizon = HorizonSpec{dt, static_cast<int>(horizon_steps),
                              static_cast<int>(action_steps), static_cast<int>(gap_steps)};
    try {
        cfg.horizon.validate();
    } catch (const std::invalid_argument& err) {
        int line = reader.line_of("empowerment", "gap_steps");
        if (line == 0) line = reader.line_of("empowerment", "action_steps");
        if (line == 0) line = reader.line_of("empowerment", "horizon_steps");
        throw ParseError(line, "gap_steps", err.what());
    }

    cfg.channel.power = reader.number("empowerment", "power", 1.0);
    cfg.channel.noise_std = reader.number("empowerment", "noise_std", 1.0);
    if (cfg.channel.power < 0.0) {
        throw ParseError(reader.line_of("empowerment", "power"), "power", "must be >= 0");
    }
    if (cfg.channel.noise_std <= 0.0) {
        throw ParseError(reader.line_of("empowerment", "noise_std"), "noise_std",
                         "must be > 0");
    }
    const std::string convention =
        reader.text("empowerment", "capacity_convention", "linear");
    if (convention == "linear") {
        cfg.channel.convention = CapacityConvention::Linear;
    } else if (convention == "squared") {
        cfg.channel.convention = CapacityConvention::Squared;
    } else {
        throw ParseError(reader.line_of("empowerment", "capacity_convention"),
                         "capacity_convention", "expected linear | squared");
    }

    // [noise]
    cfg.process_std = reader.number("noise", "process_std", 0.01);
    if (cfg.process_std < 0.0) {
        throw ParseError(reader.line_of("noise", "process_std"), "process_std",
                         "must be >= 0");
    }

    // [controller]
    cfg.action_bound = reader.number("controller", "action_bound", 1.0);
    cfg.action_grid_size =
        static_cast<int>(reader.integer("controller", "action_grid_size", 21));
    cfg.decision_dt = reader.number("controller", "decision_dt", 0.02);
    cfg.sim_dt = reader.number("controller", "sim_dt", 1e-3);
    cfg.expectation_samples =
        static_cast<int>(reader.integer("controller", "expectation_samples", 1));
    try {
        cfg.make_policy().validate();
    } catch (const std::invalid_argument& err) {
        throw ParseError(reader.line_of("controller", "action_bound"), "controller",
                         err.what());
    }

    // [run]
    cfg.duration_s = reader.number("run", "duration_s", 30.0);
    if (cfg.duration_s <= 0.0) {
        throw ParseError(reader.line_of("run", "duration_s"), "duration_s", "must be > 0");
    }
    {
        const double ratio = cfg.duration_s / cfg.decision_dt;
        if (std::abs(ratio - std::round(ratio)) > 1e-9 * ratio) {
            throw ParseError(reader.line_of("run", "duration_s"), "duration_s",
                             "must be a multiple of decision_dt");
        }
    }
    const auto seed = reader.integer("run", "seed", 0);
    if (seed < 0) throw ParseError(reader.line_of("run", "seed"), "seed", "must be >= 0");
    cfg.seed = static_cast<std::uint64_t>(seed);

    const int d_x = state_dim(cfg.system);
    std::vector<double> start_default(default_start_state(cfg.system).data(),
                                      default_start_state(cfg.system).data() + d_x);
    const std::vector<double> start = reader.number_list("run", "start_state", start_default);
    if (static_cast<int>(start.size()) != d_x) {
        throw ParseError(reader.line_of("run", "start_state"), "start_state",
                         "expected " + std::to_string(d_x) + " components");
    }
    cfg.start_state = Eigen::Map<const StateVector>(start.data(), d_x);

    // [grid]
    cfg.grid = default_grid(cfg.system);
    {
        const std::vector<double> axes =
            reader.number_list("grid", "axis_indices",
                               {static_cast<double>(cfg.grid.axis_indices[0]),
                                static_cast<double>(cfg.grid.axis_indices[1])});
        if (axes.size() != 2) {
            throw ParseError(reader.line_of("grid", "axis_indices"), "axis_indices",
                             "expected two component indices");
        }
        cfg.grid.axis_indices = {static_cast<int>(axes[0]), static_cast<int>(axes[1])};
        for (int a = 0; a < 2; ++a) {
            const std::string key = a == 0 ? "axis1_range" : "axis2_range";
            const std::vector<double> range = reader.number_list(
                "grid", key, {cfg.grid.axis_ranges[a][0], cfg.grid.axis_ranges[a][1]});
            if (range.size() != 2) {
                throw ParseError(reader.line_of("grid", key), key, "expected 'min, max'");
            }
            cfg.grid.axis_ranges[a] = {range[0], range[1]};
        }
        const std::vector<double> res =
            reader.number_list("grid", "resolution",
                               {static_cast<double>(cfg.grid.resolution[0]),
                                static_cast<double>(cfg.grid.resolution[1])});
        if (res.size() != 2) {
            throw ParseError(reader.line_of("grid", "resolution"), "resolution",
                             "expected two point counts");
        }
        cfg.grid.resolution = {static_cast<int>(res[0]), static_cast<int>(res[1])};
        cfg.grid.fixed_values =
            reader.number_list("grid", "fixed_values", cfg.grid.fixed_values);
        if (d_x >= 2) {
            try {
                cfg.grid.validate(d_x);
            } catch (const std::invalid_argument& err) {
                throw ParseError(reader.line_of("grid", "axis_indices"), "grid", err.what());
            }
        }
    }

    // [convergence]
    cfg.convergence_t_e_s = reader.number("convergence", "t_e_s", 0.5);
    cfg.convergence_dt_list =
        reader.number_list("convergence", "dt_list", cfg.convergence_dt_list);
    if (cfg.convergence_t_e_s <= 0.0) {
        throw ParseError(reader.line_of("convergence", "t_e_s"), "t_e_s", "must be > 0");
    }
    for (std::size_t i = 0; i < cfg.convergence_dt_list.size(); ++i) {
        const double v = cfg.convergence_dt_list[i];
        const bool bad = v <= 0.0 || (i > 0 && v >= cfg.convergence_dt_list[i - 1]);
        const double steps = cfg.convergence_t_e_s / v;
        if (bad || std::abs(steps - std::round(steps)) > 1e-9 * steps) {
            throw ParseError(reader.line_of("convergence", "dt_list"), "dt_list",
                             "must be strictly descending, positive, and divide t_e_s");
        }
    }

    // [lyapunov]
    cfg.lyapunov_horizon_steps =
        static_cast<int>(reader.integer("lyapunov", "horizon_steps", 30000));
    cfg.lyapunov_dt = reader.number("lyapunov", "dt", 1e-3);
    if (cfg.lyapunov_horizon_steps < 1) {
        throw ParseError(reader.line_of("lyapunov", "horizon_steps"), "horizon_steps",
                         "must be >= 1");
    }
    if (cfg.lyapunov_dt <= 0.0) {
        throw ParseError(reader.line_of("lyapunov", "dt"), "dt", "must be > 0");
    }

    // [output]
    cfg.output_basename = reader.text("output", "basename", "");

    reader.reject_unknown();
    return cfg;
}

RunConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IOError("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

}  // namespace emp
