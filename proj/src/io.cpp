#include "emp/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include <nlohmann/json.hpp>

#include "emp/errors.hpp"

namespace emp {

using nlohmann::json;

std::string fmt_double(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IOError("cannot open for writing: " + path);
    return out;
}

json state_to_json(const StateVector& x) {
    json arr = json::array();
    for (Eigen::Index i = 0; i < x.size(); ++i) arr.push_back(x[i]);
    return arr;
}

StateVector state_from_json(const json& arr) {
    StateVector x(arr.size());
    for (std::size_t i = 0; i < arr.size(); ++i) x[static_cast<Eigen::Index>(i)] = arr[i];
    return x;
}

json finite_or_null(double v) {
    if (std::isfinite(v)) return v;
    return nullptr;
}

double null_to_neg_inf(const json& j) {
    return j.is_null() ? -std::numeric_limits<double>::infinity() : j.get<double>();
}

Variant variant_from_string(const std::string& s) {
    if (s == "classic") return Variant::Classic;
    if (s == "kicked_cef") return Variant::KickedCef;
    if (s == "controlled_lyapunov") return Variant::ControlledLyapunov;
    throw IOError("unknown variant in artifact: " + s);
}

const char* variant_name(Variant v) {
    switch (v) {
        case Variant::Classic: return "classic";
        case Variant::KickedCef: return "kicked_cef";
        case Variant::ControlledLyapunov: return "controlled_lyapunov";
    }
    return "?";
}

}  // namespace

void write_text_file(const std::string& path, const std::string& content) {
    open_out(path) << content;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IOError("cannot open for reading: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_landscape_csv(const std::string& path, const LandscapeGrid& grid) {
    std::ostringstream out;
    out << "axis1,axis2,value_nats,failed\n";
    for (int i = 0; i < grid.grid.resolution[0]; ++i) {
        for (int j = 0; j < grid.grid.resolution[1]; ++j) {
            const bool failed =
                grid.failed[static_cast<std::size_t>(i) * grid.grid.resolution[1] + j] != 0;
            out << fmt_double(grid.grid.axis_value(0, i)) << ','
                << fmt_double(grid.grid.axis_value(1, j)) << ',' << fmt_double(grid.values(i, j))
                << ',' << (failed ? '1' : '0') << '\n';
        }
    }
    write_text_file(path, out.str());
}

void write_rollout_csv(const std::string& path, const Rollout& rollout,
                       const std::vector<std::string>& state_names) {
    std::ostringstream out;
    out << "t_s";
    for (const auto& name : state_names) out << ',' << name;
    const std::size_t d_a = rollout.actions.empty() ? 1 : rollout.actions.front().size();
    for (std::size_t k = 0; k < d_a; ++k) out << ",a" << k;
    out << ",empowerment_nats\n";
    for (std::size_t i = 0; i < rollout.actions.size(); ++i) {
        out << fmt_double(rollout.times[i]);
        for (Eigen::Index c = 0; c < rollout.states[i].size(); ++c) {
            out << ',' << fmt_double(rollout.states[i][c]);
        }
        for (Eigen::Index c = 0; c < rollout.actions[i].size(); ++c) {
            out << ',' << fmt_double(rollout.actions[i][c]);
        }
        out << ',' << fmt_double(rollout.empowerment_trace[i]) << '\n';
    }
    write_text_file(path, out.str());
}

void write_convergence_csv(const std::string& path,
                           const std::vector<ConvergencePoint>& points) {
    std::ostringstream out;
    out << "dt_s,value_nats,delta_prev\n";
    for (std::size_t i = 0; i < points.size(); ++i) {
        out << fmt_double(points[i].dt) << ',' << fmt_double(points[i].value_nats) << ',';
        if (i > 0) out << fmt_double(points[i].value_nats - points[i - 1].value_nats);
        out << '\n';
    }
    write_text_file(path, out.str());
}

void write_lyapunov_csv(const std::string& path, const LyapunovResult& result) {
    std::ostringstream out;
    out << "index,exponent_per_s\n";
    for (std::size_t i = 0; i < result.log_spectrum.size(); ++i) {
        out << i << ',';
        if (std::isfinite(result.log_spectrum[i])) out << fmt_double(result.log_spectrum[i]);
        else out << "degenerate";
        out << '\n';
    }
    write_text_file(path, out.str());
}

// --- JSON ---

void to_json(json& j, const HorizonSpec& spec) {
    j = json{{"dt", spec.dt},
             {"horizon_steps", spec.horizon_steps},
             {"action_steps", spec.action_steps},
             {"gap_steps", spec.gap_steps}};
}

void from_json(const json& j, HorizonSpec& spec) {
    spec.dt = j.at("dt");
    spec.horizon_steps = j.at("horizon_steps");
    spec.action_steps = j.at("action_steps");
    spec.gap_steps = j.at("gap_steps");
}

void to_json(json& j, const GridSpec& grid) {
    j = json{{"axis_indices", grid.axis_indices},
             {"axis_ranges", grid.axis_ranges},
             {"resolution", grid.resolution},
             {"fixed_values", grid.fixed_values}};
}

void from_json(const json& j, GridSpec& grid) {
    grid.axis_indices = j.at("axis_indices");
    grid.axis_ranges = j.at("axis_ranges");
    grid.resolution = j.at("resolution");
    grid.fixed_values = j.at("fixed_values").get<std::vector<double>>();
}

void to_json(json& j, const PowerAllocation& alloc) {
    j = json{{"channel_powers", alloc.channel_powers},
             {"water_level", alloc.water_level},
             {"active_count", alloc.active_count}};
}

void from_json(const json& j, PowerAllocation& alloc) {
    alloc.channel_powers = j.at("channel_powers").get<std::vector<double>>();
    alloc.water_level = j.at("water_level");
    alloc.active_count = j.at("active_count");
}

void to_json(json& j, const EmpowermentResult& result) {
    j = json{{"value_nats", result.value_nats},
             {"singular_values", result.singular_values},
             {"allocation", result.allocation},
             {"horizon", result.spec},
             {"state", state_to_json(result.state)}};
}

void from_json(const json& j, EmpowermentResult& result) {
    result.value_nats = j.at("value_nats");
    result.singular_values = j.at("singular_values").get<std::vector<double>>();
    result.allocation = j.at("allocation");
    result.spec = j.at("horizon");
    result.state = state_from_json(j.at("state"));
}

void to_json(json& j, const LandscapeGrid& grid) {
    json rows = json::array();
    for (int i = 0; i < grid.values.rows(); ++i) {
        json row = json::array();
        for (int c = 0; c < grid.values.cols(); ++c) row.push_back(grid.values(i, c));
        rows.push_back(std::move(row));
    }
    j = json{{"type", "landscape"},
             {"grid", grid.grid},
             {"variant", variant_name(grid.variant)},
             {"horizon", grid.horizon},
             {"values", std::move(rows)},
             {"failed", grid.failed}};
}

void from_json(const json& j, LandscapeGrid& grid) {
    grid.grid = j.at("grid");
    grid.variant = variant_from_string(j.at("variant"));
    grid.horizon = j.at("horizon");
    const auto& rows = j.at("values");
    grid.values.resize(grid.grid.resolution[0], grid.grid.resolution[1]);
    for (int i = 0; i < grid.values.rows(); ++i) {
        for (int c = 0; c < grid.values.cols(); ++c) {
            grid.values(i, c) = rows.at(i).at(c);
        }
    }
    grid.failed = j.at("failed").get<std::vector<std::uint8_t>>();
}

void to_json(json& j, const Rollout& rollout) {
    json states = json::array();
    for (const auto& x : rollout.states) states.push_back(state_to_json(x));
    json actions = json::array();
    for (const auto& a : rollout.actions) actions.push_back(state_to_json(a));
    j = json{{"type", "rollout"},
             {"times", rollout.times},
             {"states", std::move(states)},
             {"actions", std::move(actions)},
             {"empowerment", rollout.empowerment_trace},
             {"failed", rollout.failed}};
}

void from_json(const json& j, Rollout& rollout) {
    rollout.times = j.at("times").get<std::vector<double>>();
    rollout.states.clear();
    for (const auto& x : j.at("states")) rollout.states.push_back(state_from_json(x));
    rollout.actions.clear();
    for (const auto& a : j.at("actions")) rollout.actions.push_back(state_from_json(a));
    rollout.empowerment_trace = j.at("empowerment").get<std::vector<double>>();
    rollout.failed = j.at("failed");
}

void to_json(json& j, const ConvergencePoint& point) {
    j = json{{"dt", point.dt}, {"value_nats", point.value_nats}};
}

void from_json(const json& j, ConvergencePoint& point) {
    point.dt = j.at("dt");
    point.value_nats = j.at("value_nats");
}

void to_json(json& j, const LyapunovResult& result) {
    json spectrum = json::array();
    for (const double e : result.log_spectrum) spectrum.push_back(finite_or_null(e));
    j = json{{"type", "lyapunov"},
             {"empowerment", result.empowerment},
             {"log_spectrum", std::move(spectrum)},
             {"spectrum_unreliable", result.spectrum_unreliable}};
}

void from_json(const json& j, LyapunovResult& result) {
    result.empowerment = j.at("empowerment");
    result.log_spectrum.clear();
    for (const auto& e : j.at("log_spectrum")) result.log_spectrum.push_back(null_to_neg_inf(e));
    result.spectrum_unreliable = j.at("spectrum_unreliable");
}

// --- equality (for round-trip checks) ---

namespace {
bool same_matrix(const Matrix& a, const Matrix& b) {
    return a.rows() == b.rows() && a.cols() == b.cols() && (a.array() == b.array()).all();
}
bool same_vector(const StateVector& a, const StateVector& b) {
    return a.size() == b.size() && (a.array() == b.array()).all();
}
}  // namespace

bool operator==(const PowerAllocation& a, const PowerAllocation& b) {
    return a.channel_powers == b.channel_powers && a.water_level == b.water_level &&
           a.active_count == b.active_count;
}

bool operator==(const EmpowermentResult& a, const EmpowermentResult& b) {
    return a.value_nats == b.value_nats && a.singular_values == b.singular_values &&
           a.allocation == b.allocation && a.spec == b.spec && same_vector(a.state, b.state);
}

bool operator==(const LandscapeGrid& a, const LandscapeGrid& b) {
    return a.grid == b.grid && a.variant == b.variant && a.horizon == b.horizon &&
           same_matrix(a.values, b.values) && a.failed == b.failed;
}

bool operator==(const Rollout& a, const Rollout& b) {
    if (a.times != b.times || a.empowerment_trace != b.empowerment_trace ||
        a.failed != b.failed || a.states.size() != b.states.size() ||
        a.actions.size() != b.actions.size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.states.size(); ++i) {
        if (!same_vector(a.states[i], b.states[i])) return false;
    }
    for (std::size_t i = 0; i < a.actions.size(); ++i) {
        if (!same_vector(a.actions[i], b.actions[i])) return false;
    }
    return true;
}

bool operator==(const ConvergencePoint& a, const ConvergencePoint& b) {
    return a.dt == b.dt && a.value_nats == b.value_nats;
}

bool operator==(const LyapunovResult& a, const LyapunovResult& b) {
    return a.empowerment == b.empowerment && a.log_spectrum == b.log_spectrum &&
           a.spectrum_unreliable == b.spectrum_unreliable;
}

// --- SVG ---

namespace {

struct Rgb {
    double r, g, b;
};

// Five-stop dark-blue -> teal -> yellow ramp, linearly interpolated.
Rgb colormap(double t) {
    static const Rgb stops[] = {{0.267, 0.005, 0.329},
                                {0.229, 0.322, 0.545},
                                {0.127, 0.566, 0.551},
                                {0.369, 0.789, 0.383},
                                {0.993, 0.906, 0.144}};
    t = std::clamp(t, 0.0, 1.0) * 4.0;
    const int k = std::min(3, static_cast<int>(t));
    const double f = t - k;
    return {stops[k].r + f * (stops[k + 1].r - stops[k].r),
            stops[k].g + f * (stops[k + 1].g - stops[k].g),
            stops[k].b + f * (stops[k + 1].b - stops[k].b)};
}

std::string rgb_attr(const Rgb& c) {
    std::ostringstream out;
    out << "rgb(" << static_cast<int>(255 * c.r) << ',' << static_cast<int>(255 * c.g) << ','
        << static_cast<int>(255 * c.b) << ')';
    return out.str();
}

}  // namespace

std::string render_landscape_svg(const LandscapeGrid& grid,
                                 const std::vector<std::array<double, 2>>& trajectory) {
    const int rows = grid.grid.resolution[0];
    const int cols = grid.grid.resolution[1];
    const double plot_w = 560.0, plot_h = 460.0, margin = 60.0;
    const double width = plot_w + 2 * margin + 60.0, height = plot_h + 2 * margin;
    const double cw = plot_w / rows, ch = plot_h / cols;

    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) {
            if (grid.failed[static_cast<std::size_t>(i) * cols + j]) continue;
            lo = std::min(lo, grid.values(i, j));
            hi = std::max(hi, grid.values(i, j));
        }
    }
    if (!std::isfinite(lo) || hi <= lo) {
        lo = 0.0;
        hi = 1.0;
    }

    const auto x_of = [&](double axis1) {
        const auto& r = grid.grid.axis_ranges[0];
        return margin + (axis1 - r[0]) / (r[1] - r[0]) * plot_w;
    };
    const auto y_of = [&](double axis2) {
        const auto& r = grid.grid.axis_ranges[1];
        return margin + plot_h - (axis2 - r[0]) / (r[1] - r[0]) * plot_h;
    };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) {
            const bool failed = grid.failed[static_cast<std::size_t>(i) * cols + j] != 0;
            const std::string fill =
                failed ? std::string("rgb(200,200,200)")
                       : rgb_attr(colormap((grid.values(i, j) - lo) / (hi - lo)));
            svg << "<rect x=\"" << margin + i * cw << "\" y=\"" << margin + (cols - 1 - j) * ch
                << "\" width=\"" << cw + 0.5 << "\" height=\"" << ch + 0.5 << "\" fill=\"" << fill
                << "\"/>\n";
        }
    }

    if (!trajectory.empty()) {
        svg << "<polyline fill=\"none\" stroke=\"white\" stroke-width=\"1.5\" points=\"";
        for (const auto& p : trajectory) svg << x_of(p[0]) << ',' << y_of(p[1]) << ' ';
        svg << "\"/>\n";
        svg << "<circle cx=\"" << x_of(trajectory.front()[0]) << "\" cy=\""
            << y_of(trajectory.front()[1]) << "\" r=\"4\" fill=\"red\"/>\n";
        svg << "<circle cx=\"" << x_of(trajectory.back()[0]) << "\" cy=\""
            << y_of(trajectory.back()[1]) << "\" r=\"4\" fill=\"black\"/>\n";
    }

    // frame, axis extents, color bar
    svg << "<rect x=\"" << margin << "\" y=\"" << margin << "\" width=\"" << plot_w
        << "\" height=\"" << plot_h << "\" fill=\"none\" stroke=\"black\"/>\n";
    svg << "<text x=\"" << margin << "\" y=\"" << margin + plot_h + 20 << "\" font-size=\"12\">"
        << fmt_double(grid.grid.axis_ranges[0][0]) << "</text>\n";
    svg << "<text x=\"" << margin + plot_w - 30 << "\" y=\"" << margin + plot_h + 20
        << "\" font-size=\"12\">" << fmt_double(grid.grid.axis_ranges[0][1]) << "</text>\n";
    svg << "<text x=\"8\" y=\"" << margin + plot_h << "\" font-size=\"12\">"
        << fmt_double(grid.grid.axis_ranges[1][0]) << "</text>\n";
    svg << "<text x=\"8\" y=\"" << margin + 10 << "\" font-size=\"12\">"
        << fmt_double(grid.grid.axis_ranges[1][1]) << "</text>\n";
    const double bar_x = margin + plot_w + 20;
    for (int k = 0; k < 100; ++k) {
        svg << "<rect x=\"" << bar_x << "\" y=\"" << margin + plot_h * (99 - k) / 100.0
            << "\" width=\"16\" height=\"" << plot_h / 100.0 + 0.5 << "\" fill=\""
            << rgb_attr(colormap(k / 99.0)) << "\"/>\n";
    }
    svg << "<text x=\"" << bar_x + 20 << "\" y=\"" << margin + plot_h
        << "\" font-size=\"11\">" << fmt_double(lo) << "</text>\n";
    svg << "<text x=\"" << bar_x + 20 << "\" y=\"" << margin + 10 << "\" font-size=\"11\">"
        << fmt_double(hi) << " nats</text>\n";
    svg << "</svg>\n";
    return svg.str();
}

std::string render_rollout_svg(const Rollout& rollout,
                               const std::vector<std::string>& state_names) {
    const double plot_w = 640.0, plot_h = 400.0, margin = 50.0;
    const double width = plot_w + 2 * margin + 160.0, height = plot_h + 2 * margin;
    static const char* palette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                                    "#9467bd", "#8c564b", "#e377c2", "#7f7f7f"};

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg << "<rect x=\"" << margin << "\" y=\"" << margin << "\" width=\"" << plot_w
        << "\" height=\"" << plot_h << "\" fill=\"none\" stroke=\"black\"/>\n";

    const std::size_t n = rollout.actions.size();
    if (n == 0) {
        svg << "</svg>\n";
        return svg.str();
    }
    const double t_max = rollout.times[n];

    int color = 0;
    double legend_y = margin + 12;
    const auto draw_series = [&](const std::string& name, const std::vector<double>& ys) {
        double lo = *std::min_element(ys.begin(), ys.end());
        double hi = *std::max_element(ys.begin(), ys.end());
        if (hi <= lo) hi = lo + 1.0;
        const char* stroke = palette[color % 8];
        svg << "<polyline fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\"1.2\" points=\"";
        for (std::size_t i = 0; i < ys.size(); ++i) {
            const double x = margin + rollout.times[i] / t_max * plot_w;
            const double y = margin + plot_h - (ys[i] - lo) / (hi - lo) * plot_h;
            svg << x << ',' << y << ' ';
        }
        svg << "\"/>\n";
        svg << "<text x=\"" << margin + plot_w + 10 << "\" y=\"" << legend_y
            << "\" font-size=\"11\" fill=\"" << stroke << "\">" << name << " ["
            << fmt_double(lo) << ", " << fmt_double(hi) << "]</text>\n";
        legend_y += 16;
        ++color;
    };

    const Eigen::Index d_x = rollout.states.front().size();
    for (Eigen::Index c = 0; c < d_x; ++c) {
        std::vector<double> ys(n);
        for (std::size_t i = 0; i < n; ++i) ys[i] = rollout.states[i][c];
        draw_series(c < static_cast<Eigen::Index>(state_names.size())
                        ? state_names[c]
                        : "x" + std::to_string(c),
                    ys);
    }
    const Eigen::Index d_a = rollout.actions.front().size();
    for (Eigen::Index c = 0; c < d_a; ++c) {
        std::vector<double> ys(n);
        for (std::size_t i = 0; i < n; ++i) ys[i] = rollout.actions[i][c];
        draw_series("a" + std::to_string(c), ys);
    }
    draw_series("empowerment", rollout.empowerment_trace);

    svg << "<text x=\"" << margin + plot_w / 2 - 20 << "\" y=\"" << margin + plot_h + 24
        << "\" font-size=\"12\">t [0, " << fmt_double(t_max) << "] s</text>\n";
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace emp
