#pragma once

#include <array>

#include "manip/joint.hpp"

namespace manip {

/// Gains of one joint loop. ki = 0 encodes a pure PD loop.
struct PidGains {
    double kp = 0.0;  // [N·m/rad]
    double ki = 0.0;  // [N·m/(rad·s)]
    double kd = 0.0;  // [N·m·s/rad]
};

using LinkGains = std::array<PidGains, kJoints>;

/// Throws std::invalid_argument if any gain is negative or non-finite.
void validate(const LinkGains& gains);

/// Tracking error against the set-point: e = θ_r − θ, ė = θ̇_r − θ̇.
struct ErrorSignal {
    JointVector e;
    JointVector edot;
};

/// Accumulated ∫e dt per joint [rad·s]; zero at the start of a run.
struct ControllerState {
    JointVector integral;
};

struct PidOutput {
    JointVector torque;
    ControllerState state;
};

/// u = kp·e + kd·ė per joint. The ki fields are ignored.
JointVector pd_control(const LinkGains& gains, const ErrorSignal& err);

/// One controller tick: integral' = integral + e·dt, then
/// u = kp·e + ki·integral' + kd·ė. The caller owns the state.
PidOutput pid_control(const LinkGains& gains, const ControllerState& state,
                      const ErrorSignal& err, double dt);

}  // namespace manip
