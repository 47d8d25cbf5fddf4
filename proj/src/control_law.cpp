#include "manip/control_law.hpp"

namespace manip {

namespace {

template <class... Fs>
struct overloaded : Fs... {
    using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

}  // namespace

std::string_view kind(const ControllerConfig& cfg) {
    return std::visit(overloaded{[](const PdConfig&) { return std::string_view("pd"); },
                                 [](const PidConfig&) { return std::string_view("pid"); },
                                 [](const fuzzy::FlcConfig&) { return std::string_view("flc"); }},
                      cfg);
}

void validate(const ControllerConfig& cfg) {
    std::visit(overloaded{[](const PdConfig& c) { validate(c.gains); },
                          [](const PidConfig& c) { validate(c.gains); },
                          [](const fuzzy::FlcConfig& c) { c.validate(); }},
               cfg);
}

JointVector Controller::update(const ErrorSignal& err, double dt) {
    return std::visit(overloaded{[&](const PdConfig& c) { return pd_control(c.gains, err); },
                                 [&](const PidConfig& c) {
                                     auto out = pid_control(c.gains, state_, err, dt);
                                     state_ = out.state;
                                     return out.torque;
                                 },
                                 [&](const fuzzy::FlcConfig& c) { return fuzzy::flc_control(c, err); }},
                      cfg_);
}

}  // namespace manip
