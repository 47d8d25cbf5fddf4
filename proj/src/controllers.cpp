#include "manip/controllers.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace manip {

void validate(const LinkGains& gains) {
    for (std::size_t i = 0; i < kJoints; ++i) {
        const auto& k = gains[i];
        for (double x : {k.kp, k.ki, k.kd})
            if (!std::isfinite(x) || x < 0.0)
                throw std::invalid_argument("gain of link " + std::to_string(i + 1) +
                                            " must be finite and >= 0");
    }
}

JointVector pd_control(const LinkGains& gains, const ErrorSignal& err) {
    JointVector u;
    for (std::size_t i = 0; i < kJoints; ++i)
        u[i] = gains[i].kp * err.e[i] + gains[i].kd * err.edot[i];
    return u;
}

PidOutput pid_control(const LinkGains& gains, const ControllerState& state,
                      const ErrorSignal& err, double dt) {
    if (!(dt > 0.0)) throw std::invalid_argument("pid_control: dt must be > 0");
    PidOutput out{{}, {state.integral + dt * err.e}};
    for (std::size_t i = 0; i < kJoints; ++i)
        out.torque[i] = gains[i].kp * err.e[i] + gains[i].ki * out.state.integral[i] +
                        gains[i].kd * err.edot[i];
    return out;
}

}  // namespace manip
