#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <vector>

#include "manip/control_law.hpp"
#include "manip/dynamics.hpp"
#include "manip/joint.hpp"

namespace manip {

/// Classical fourth-order Runge–Kutta step of ds/dt = field(s).
/// State must support `a + b` and `scalar * a`.
template <typename State, typename Field>
State rk4_step(const State& s, double h, Field&& field) {
    const State k1 = field(s);
    const State k2 = field(s + (h / 2) * k1);
    const State k3 = field(s + (h / 2) * k2);
    const State k4 = field(s + h * k3);
    return s + (h / 6) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

/// RK4 step of the arm with τ held constant over the step.
/// Propagates SingularMass.
JointState step_rk4(const ManipulatorParams& p, const JointState& s, const JointVector& tau,
                    double dt);

/// Uniformly sampled run: sample k is taken at times[k] = k·dt and tau[k]
/// is the torque held over [t_k, t_k+1).
struct Trajectory {
    std::vector<double> times;
    std::vector<JointVector> q;
    std::vector<JointVector> qdot;
    std::vector<JointVector> tau;

    std::size_t size() const { return times.size(); }
    /// Angle history of one joint.
    std::vector<double> joint(std::size_t link) const;
};

inline constexpr double kBlowupLimit = 1e6;

/// A state component left ±kBlowupLimit or became non-finite. Carries the
/// samples recorded before the failure.
class NumericalBlowup : public std::runtime_error {
public:
    NumericalBlowup(const std::string& what, double time, Trajectory partial)
        : std::runtime_error(what), time_(time), partial_(std::move(partial)) {}

    double time() const { return time_; }
    const Trajectory& partial() const { return partial_; }

private:
    double time_;
    Trajectory partial_;
};

struct SimConfig {
    double dt = 1e-3;
    double t_end = 10.0;
    JointVector reference = JointVector::filled(1.0);
    JointState initial{};
    ManipulatorParams params{};

    /// Throws std::invalid_argument: needs 0 < dt ≤ 0.01, t_end ≥ dt and an
    /// integral number of steps.
    void validate() const;
    std::size_t steps() const;
};

/// Set-point regulation: e = θ_r − q, ė = −q̇, controller evaluated once per
/// step at the step start. Throws NumericalBlowup or SingularMass.
Trajectory run_closed_loop(const SimConfig& cfg, const ControllerConfig& controller);

/// Same integration with τ ≡ 0.
Trajectory run_open_loop(const SimConfig& cfg);

/// CSV with header t,q1,q2,q3,qd1,qd2,qd3,tau1,tau2,tau3 at 17 significant digits.
void write_trajectory_csv(std::ostream& os, const Trajectory& tr);

}  // namespace manip
