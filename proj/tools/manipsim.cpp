// Command-line harness for the three-link arm controller comparison.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "manip/config.hpp"
#include "manip/experiment.hpp"

namespace {

struct Overrides {
    std::optional<std::string> output_dir;
    std::optional<double> dt;
    std::optional<double> t_end;
    std::optional<double> step_amplitude;

    void apply(manip::ExperimentConfig& cfg) const {
        if (output_dir) cfg.output_dir = *output_dir;
        if (dt) cfg.sim.dt = *dt;
        if (t_end) cfg.sim.t_end = *t_end;
        if (step_amplitude) cfg.step_amplitude = *step_amplitude;
        cfg.apply_step();
        cfg.validate();
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Three-link planar arm: open-loop response and PID/PD/fuzzy step comparison"};
    app.require_subcommand(1);

    Overrides ov;
    app.add_option("--output-dir", ov.output_dir, "Directory for generated CSV files");
    app.add_option("--dt", ov.dt, "Integration step [s]");
    app.add_option("--t-end", ov.t_end, "Simulation horizon [s]");
    app.add_option("--step-amplitude", ov.step_amplitude, "Step size on every joint [rad]");

    std::string config_path;
    auto* openloop = app.add_subcommand("openloop", "Unforced response, writes openloop.csv");
    auto* compare = app.add_subcommand("compare", "Closed-loop step comparison of all controllers");
    auto* surface = app.add_subcommand("surface", "Export the fuzzy inference surface");
    for (auto* sub : {openloop, compare, surface})
        sub->add_option("config", config_path, "Experiment config file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return manip::kExitConfig;
    }

    manip::ExperimentConfig cfg;
    try {
        cfg = manip::load_config(config_path);
        ov.apply(cfg);
    } catch (const manip::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return manip::kExitConfig;
    }

    try {
        if (*openloop) return manip::cmd_openloop(cfg, std::cout);
        if (*compare) return manip::cmd_compare(cfg, std::cout);
        return manip::cmd_surface(cfg, std::cout);
    } catch (const manip::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return manip::kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return manip::kExitNumerical;
    }
}
