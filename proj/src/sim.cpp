#include "manip/sim.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

#include "manip/csv.hpp"

namespace manip {

std::vector<double> Trajectory::joint(std::size_t link) const {
    std::vector<double> out;
    out.reserve(q.size());
    for (const auto& s : q) out.push_back(s[link]);
    return out;
}

JointState step_rk4(const ManipulatorParams& p, const JointState& s, const JointVector& tau,
                    double dt) {
    if (!(dt > 0.0)) throw std::invalid_argument("step_rk4: dt must be > 0");
    return rk4_step(s, dt, [&](const JointState& x) {
        return JointState{x.qdot, forward_dynamics(p, x, tau)};
    });
}

void SimConfig::validate() const {
    if (!(dt > 0.0 && dt <= 0.01)) throw std::invalid_argument("sim.dt must be in (0, 0.01]");
    if (!(std::isfinite(t_end) && t_end >= dt))
        throw std::invalid_argument("sim.t_end must be finite and >= dt");
    const double n = t_end / dt;
    if (std::fabs(n - std::round(n)) > 1e-9 * std::fmax(1.0, n))
        throw std::invalid_argument("sim.t_end must be an integer multiple of sim.dt");
    if (!all_finite(reference) || !all_finite(initial.q) || !all_finite(initial.qdot))
        throw std::invalid_argument("sim reference and initial state must be finite");
    params.validate();
}

std::size_t SimConfig::steps() const {
    return static_cast<std::size_t>(std::llround(t_end / dt));
}

namespace {

template <typename TorqueFn>
Trajectory integrate(const SimConfig& cfg, TorqueFn&& torque_at) {
    cfg.validate();
    const std::size_t n = cfg.steps();

    Trajectory tr;
    tr.times.reserve(n + 1);
    tr.q.reserve(n + 1);
    tr.qdot.reserve(n + 1);
    tr.tau.reserve(n + 1);

    JointState s = cfg.initial;
    for (std::size_t k = 0;; ++k) {
        const JointVector tau = torque_at(s);
        tr.times.push_back(static_cast<double>(k) * cfg.dt);
        tr.q.push_back(s.q);
        tr.qdot.push_back(s.qdot);
        tr.tau.push_back(tau);
        if (k == n) break;

        s = step_rk4(cfg.params, s, tau, cfg.dt);
        const bool finite = all_finite(s.q) && all_finite(s.qdot);
        if (!finite || max_abs(s.q) > kBlowupLimit || max_abs(s.qdot) > kBlowupLimit) {
            const double t = static_cast<double>(k + 1) * cfg.dt;
            std::ostringstream msg;
            msg << "numerical blowup at t = " << t << " s";
            throw NumericalBlowup(msg.str(), t, std::move(tr));
        }
    }
    return tr;
}

}  // namespace

Trajectory run_closed_loop(const SimConfig& cfg, const ControllerConfig& controller) {
    validate(controller);
    Controller law(controller);
    return integrate(cfg, [&](const JointState& s) {
        return law.update(ErrorSignal{cfg.reference - s.q, -s.qdot}, cfg.dt);
    });
}

Trajectory run_open_loop(const SimConfig& cfg) {
    return integrate(cfg, [](const JointState&) { return JointVector{}; });
}

void write_trajectory_csv(std::ostream& os, const Trajectory& tr) {
    os << "t,q1,q2,q3,qd1,qd2,qd3,tau1,tau2,tau3\n";
    for (std::size_t k = 0; k < tr.size(); ++k) {
        os << csv::number(tr.times[k]);
        for (const JointVector* v : {&tr.q[k], &tr.qdot[k], &tr.tau[k]})
            for (double x : *v) os << ',' << csv::number(x);
        os << '\n';
    }
}

}  // namespace manip
