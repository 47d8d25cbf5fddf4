// Coarse search for the fuzzy controller's output scales: for ku in
// {8, 16, ..., 512} (same on all joints) run the unit-step experiment and
// report, per joint, the smallest ku whose final error is within 0.01 rad.
// Joints where no candidate qualifies fall back to the smallest candidate
// whose saturation torque covers the joint's peak static gravity torque.

#include <cmath>
#include <iomanip>
#include <iostream>
#include <optional>

#include "manip/config.hpp"
#include "manip/dynamics.hpp"
#include "manip/sim.hpp"

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: flc_calibrate <config>\n";
        return 1;
    }
    manip::ExperimentConfig cfg;
    try {
        cfg = manip::load_config(argv[1]);
    } catch (const manip::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 1;
    }
    const manip::fuzzy::FlcConfig* base = nullptr;
    for (const auto& c : cfg.controllers)
        if ((base = std::get_if<manip::fuzzy::FlcConfig>(&c.config))) break;
    if (!base) {
        std::cerr << "config has no flc controller\n";
        return 1;
    }

    const auto& p = cfg.sim.params;
    const double peak_gravity[] = {
        p.g * (p.m1 * p.L1 + p.m2 * (p.L1 + p.L2) + p.m3 * (p.L1 + p.L2 + p.L3)),
        p.g * (p.m2 * p.L2 + p.m3 * (p.L2 + p.L3)), p.g * p.m3 * p.L3};

    std::optional<double> chosen[manip::kJoints];
    std::optional<double> fallback[manip::kJoints];
    std::cout << std::setw(6) << "ku" << std::setw(14) << "|sse1|" << std::setw(14) << "|sse2|"
              << std::setw(14) << "|sse3|" << "  status\n";
    for (double ku = 8; ku <= 512; ku *= 2) {
        auto flc = *base;
        for (auto& l : flc.links) l.ku = ku;
        for (std::size_t i = 0; i < manip::kJoints; ++i)
            if (!fallback[i] && ku >= peak_gravity[i]) fallback[i] = ku;

        std::cout << std::setw(6) << ku;
        try {
            const auto tr = manip::run_closed_loop(cfg.sim, flc);
            for (std::size_t i = 0; i < manip::kJoints; ++i) {
                const double sse = std::fabs(cfg.sim.reference[i] - tr.q.back()[i]);
                std::cout << std::setw(14) << sse;
                if (!chosen[i] && sse <= 0.01) chosen[i] = ku;
            }
            std::cout << "  ok\n";
        } catch (const std::exception& e) {
            std::cout << std::setw(42) << "-" << "  " << e.what() << '\n';
        }
    }

    std::cout << "\nselected ku:";
    for (std::size_t i = 0; i < manip::kJoints; ++i) {
        if (chosen[i])
            std::cout << ' ' << *chosen[i] << " (converged)";
        else
            std::cout << ' ' << fallback[i].value_or(512) << " (gravity fallback)";
    }
    std::cout << '\n';
    return 0;
}
