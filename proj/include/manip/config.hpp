#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "manip/control_law.hpp"
#include "manip/sim.hpp"

namespace manip {

/// Raised for unreadable, malformed or invalid experiment files. The
/// message names the offending key where there is one.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct NamedController {
    std::string name;
    ControllerConfig config;
};

/// One comparison experiment: plant, protocol, controllers and output
/// location. The step reference is initial.q + step_amplitude on every joint.
struct ExperimentConfig {
    SimConfig sim;
    double step_amplitude = 1.0;
    std::vector<NamedController> controllers;
    std::filesystem::path output_dir = "out";

    /// Recomputes sim.reference from initial.q and step_amplitude.
    void apply_step();
    /// Throws ConfigError.
    void validate() const;
};

/// Parses the INI-style experiment format:
///
///     [params]             m1 m2 m3 L1 L2 L3 J1 J2 J3 g       (optional)
///     [sim]                dt t_end step_amplitude initial_q initial_qdot
///     [output]             dir
///     [controller.<name>]  type = pid | pd | flc
///                          pid: kp ki kd        pd: kp kd
///                          flc: ke kde ku, optional mf.N mf.Z mf.P,
///                               level.NB … level.PB, rule.<e><ė>
///
/// Per-joint keys take three comma-separated numbers; comments start with
/// ';'. Omitted [params]/[sim] keys keep their defaults.
ExperimentConfig parse_config(std::istream& in);
ExperimentConfig load_config(const std::filesystem::path& path);

}  // namespace manip
