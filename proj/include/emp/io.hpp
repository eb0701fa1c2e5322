#ifndef EMP_IO_HPP
#define EMP_IO_HPP

#include <array>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "emp/capacity.hpp"
#include "emp/controller.hpp"
#include "emp/landscape.hpp"

namespace emp {

/// Shortest decimal representation that parses back to the same double.
std::string fmt_double(double v);

// CSV artifacts. Schemas are fixed:
//   landscape.csv   axis1,axis2,value_nats,failed
//   rollout.csv     t_s,<state components by name>,<action components>,empowerment_nats
//   convergence.csv dt_s,value_nats,delta_prev   (delta_prev empty on the first row)
//   lyapunov.csv    index,exponent_per_s
void write_landscape_csv(const std::string& path, const LandscapeGrid& grid);
void write_rollout_csv(const std::string& path, const Rollout& rollout,
                       const std::vector<std::string>& state_names);
void write_convergence_csv(const std::string& path, const std::vector<ConvergencePoint>& points);
void write_lyapunov_csv(const std::string& path, const LyapunovResult& result);

// JSON artifacts round-trip exactly: parsing an emitted document yields a
// value equal to the in-memory original.
void to_json(nlohmann::json& j, const HorizonSpec& spec);
void from_json(const nlohmann::json& j, HorizonSpec& spec);
void to_json(nlohmann::json& j, const GridSpec& grid);
void from_json(const nlohmann::json& j, GridSpec& grid);
void to_json(nlohmann::json& j, const PowerAllocation& alloc);
void from_json(const nlohmann::json& j, PowerAllocation& alloc);
void to_json(nlohmann::json& j, const EmpowermentResult& result);
void from_json(const nlohmann::json& j, EmpowermentResult& result);
void to_json(nlohmann::json& j, const LandscapeGrid& grid);
void from_json(const nlohmann::json& j, LandscapeGrid& grid);
void to_json(nlohmann::json& j, const Rollout& rollout);
void from_json(const nlohmann::json& j, Rollout& rollout);
void to_json(nlohmann::json& j, const ConvergencePoint& point);
void from_json(const nlohmann::json& j, ConvergencePoint& point);
void to_json(nlohmann::json& j, const LyapunovResult& result);
void from_json(const nlohmann::json& j, LyapunovResult& result);

bool operator==(const PowerAllocation& a, const PowerAllocation& b);
bool operator==(const EmpowermentResult& a, const EmpowermentResult& b);
bool operator==(const LandscapeGrid& a, const LandscapeGrid& b);
bool operator==(const Rollout& a, const Rollout& b);
bool operator==(const ConvergencePoint& a, const ConvergencePoint& b);
bool operator==(const LyapunovResult& a, const LyapunovResult& b);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

/// Heatmap with a linear color scale; an optional trajectory (points in
/// axis coordinates) is overlaid as a white polyline with a red start dot
/// and a black end dot.
std::string render_landscape_svg(const LandscapeGrid& grid,
                                 const std::vector<std::array<double, 2>>& trajectory = {});

/// Time series of every state component, the actions, and the empowerment
/// trace, each normalized to its own range.
std::string render_rollout_svg(const Rollout& rollout,
                               const std::vector<std::string>& state_names);

}  // namespace emp

#endif  // EMP_IO_HPP
