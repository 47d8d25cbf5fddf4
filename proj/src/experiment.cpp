#include "manip/experiment.hpp"

#include <array>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <future>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>

#include "manip/csv.hpp"

namespace manip {

namespace {

namespace fs = std::filesystem;

void write_file(const fs::path& path, const std::string& contents) {
    if (!path.parent_path().empty()) fs::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
    out << contents;
    if (!out) throw std::runtime_error("failed writing '" + path.string() + "'");
}

std::string trajectory_text(const Trajectory& tr) {
    std::ostringstream os;
    write_trajectory_csv(os, tr);
    return os.str();
}

ControllerRun run_one(const SimConfig& sim, const NamedController& c) {
    ControllerRun run{c.name, std::string(kind(c.config)), {}, std::nullopt};
    try {
        run.trajectory = run_closed_loop(sim, c.config);
    } catch (const NumericalBlowup& e) {
        run.trajectory = e.partial();
        run.blowup = e.what();
    } catch (const SingularMass& e) {
        run.blowup = e.what();
    }
    return run;
}

StepMetrics undefined_metrics() {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    return {nan, nan, nan, nan, nan};
}

std::string cell(double x, int precision) {
    if (std::isnan(x)) return "NaN";
    std::ostringstream os;
    os << std::setprecision(precision) << x;
    return os.str();
}

}  // namespace

std::vector<ControllerRun> run_all(const ExperimentConfig& cfg) {
    std::vector<std::future<ControllerRun>> jobs;
    jobs.reserve(cfg.controllers.size());
    for (const auto& c : cfg.controllers)
        jobs.push_back(std::async(std::launch::async, run_one, std::cref(cfg.sim), std::cref(c)));
    std::vector<ControllerRun> runs;
    runs.reserve(jobs.size());
    for (auto& j : jobs) runs.push_back(j.get());
    return runs;
}

std::vector<MetricsRow> comparison_rows(const ExperimentConfig& cfg,
                                        const std::vector<ControllerRun>& runs) {
    std::vector<MetricsRow> rows;
    for (std::size_t link = 0; link < kJoints; ++link) {
        for (const auto& run : runs) {
            MetricsRow row{static_cast<int>(link + 1), run.name, undefined_metrics()};
            if (!run.blowup) {
                const auto y = run.trajectory.joint(link);
                row.metrics = step_metrics(run.trajectory.times, y, cfg.sim.reference[link],
                                           cfg.sim.initial.q[link]);
            }
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

void print_comparison(std::ostream& os, const std::vector<MetricsRow>& rows,
                      const std::vector<ControllerRun>& runs) {
    const std::size_t n = runs.size();
    const int label_w = 28;
    const int col_w = 16;
    for (std::size_t link = 0; link < kJoints; ++link) {
        os << "Link " << link + 1 << " comparison\n";
        os << std::left << std::setw(label_w) << "Characteristic";
        for (const auto& r : runs) {
            std::string head = "Link " + std::to_string(link + 1) + " " + r.name;
            os << std::right << std::setw(col_w) << head;
        }
        os << '\n';
        const std::pair<const char*, double StepMetrics::*> lines[] = {
            {"Rise Time (s)", &StepMetrics::rise_time},
            {"Settling Time (s)", &StepMetrics::settling_time},
            {"Overshoot (%)", &StepMetrics::overshoot},
            {"Undershoot (%)", &StepMetrics::undershoot},
            {"Steady State Error (rad)", &StepMetrics::sse}};
        for (const auto& [label, field] : lines) {
            os << std::left << std::setw(label_w) << label;
            for (std::size_t c = 0; c < n; ++c)
                os << std::right << std::setw(col_w) << cell(rows[link * n + c].metrics.*field, 5);
            os << '\n';
        }
        os << '\n';
    }
    for (const auto& r : runs)
        if (r.blowup) os << "WARNING: controller '" << r.name << "' diverged: " << *r.blowup << '\n';
}

int cmd_openloop(const ExperimentConfig& cfg, std::ostream& log) {
    const fs::path out = cfg.output_dir / "openloop.csv";
    try {
        const Trajectory tr = run_open_loop(cfg.sim);
        write_file(out, trajectory_text(tr));
        log << "wrote " << out.string() << " (" << tr.size() << " samples)\n";
        return kExitOk;
    } catch (const NumericalBlowup& e) {
        write_file(out, trajectory_text(e.partial()));
        log << "open loop diverged: " << e.what() << "; partial trajectory in " << out.string()
            << '\n';
    } catch (const SingularMass& e) {
        log << "open loop failed: " << e.what() << '\n';
    }
    return kExitNumerical;
}

int cmd_compare(const ExperimentConfig& cfg, std::ostream& log) {
    const auto runs = run_all(cfg);
    const auto rows = comparison_rows(cfg, runs);

    bool diverged = false;
    for (const auto& r : runs) {
        write_file(cfg.output_dir / (r.name + ".csv"), trajectory_text(r.trajectory));
        diverged = diverged || r.blowup.has_value();
    }
    std::ostringstream table;
    write_metrics_csv(table, rows);
    write_file(cfg.output_dir / "comparison.csv", table.str());

    print_comparison(log, rows, runs);
    return diverged ? kExitNumerical : kExitOk;
}

int cmd_surface(const ExperimentConfig& cfg, std::ostream& log) {
    const fuzzy::FlcConfig* flc = nullptr;
    for (const auto& c : cfg.controllers) {
        if ((flc = std::get_if<fuzzy::FlcConfig>(&c.config))) break;
    }
    if (!flc) throw ConfigError("key 'controller': no controller with type = flc");

    std::array<std::vector<double>, kJoints> surfaces;
    for (std::size_t i = 0; i < kJoints; ++i)
        surfaces[i] = fuzzy::inference_surface(flc->system, flc->links[i].ku, kSurfaceGrid);

    std::ostringstream os;
    os << "x,y,u1,u2,u3\n";
    const double span = static_cast<double>(kSurfaceGrid - 1);
    for (std::size_t i = 0; i < kSurfaceGrid; ++i) {
        for (std::size_t j = 0; j < kSurfaceGrid; ++j) {
            const std::size_t k = i * kSurfaceGrid + j;
            os << csv::number((2.0 * static_cast<double>(i) - span) / span) << ','
               << csv::number((2.0 * static_cast<double>(j) - span) / span);
            for (const auto& s : surfaces) os << ',' << csv::number(s[k]);
            os << '\n';
        }
    }
    const fs::path out = cfg.output_dir / "surface.csv";
    write_file(out, os.str());
    log << "wrote " << out.string() << '\n';
    return kExitOk;
}

}  // namespace manip
