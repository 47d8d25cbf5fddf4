#pragma once

#include <string_view>
#include <variant>

#include "manip/controllers.hpp"
#include "manip/fuzzy.hpp"

namespace manip {

struct PdConfig {
    LinkGains gains;
};

struct PidConfig {
    LinkGains gains;
};

/// Controller selection: PD, PID or the fuzzy controller, each with
/// per-joint settings.
using ControllerConfig = std::variant<PdConfig, PidConfig, fuzzy::FlcConfig>;

std::string_view kind(const ControllerConfig& cfg);

/// Throws std::invalid_argument on invalid gains or fuzzy settings.
void validate(const ControllerConfig& cfg);

/// Drives one configured control law tick by tick, owning the PID integral.
class Controller {
public:
    explicit Controller(ControllerConfig cfg) : cfg_(std::move(cfg)) {}

    JointVector update(const ErrorSignal& err, double dt);
    void reset() { state_ = {}; }

    const ControllerState& state() const { return state_; }
    const ControllerConfig& config() const { return cfg_; }

private:
    ControllerConfig cfg_;
    ControllerState state_{};
};

}  // namespace manip
