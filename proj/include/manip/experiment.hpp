#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "manip/config.hpp"
#include "manip/metrics.hpp"
#include "manip/sim.hpp"

namespace manip {

/// Process exit codes shared by the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitConfig = 1, kExitNumerical = 2 };

/// Closed-loop result of one configured controller. `blowup` holds the
/// failure message when the run diverged; the trajectory is then partial.
struct ControllerRun {
    std::string name;
    std::string kind;
    Trajectory trajectory;
    std::optional<std::string> blowup;
};

/// Runs every controller of the experiment (in parallel) and returns the
/// results in configuration order.
std::vector<ControllerRun> run_all(const ExperimentConfig& cfg);

/// Metrics per link (outer) and controller (inner). Diverged runs yield all-NaN rows.
std::vector<MetricsRow> comparison_rows(const ExperimentConfig& cfg,
                                        const std::vector<ControllerRun>& runs);

/// Human-readable per-link comparison tables.
void print_comparison(std::ostream& os, const std::vector<MetricsRow>& rows,
                      const std::vector<ControllerRun>& runs);

/// Writes openloop.csv. Returns kExitNumerical (after writing the partial
/// trajectory) if the run diverges.
int cmd_openloop(const ExperimentConfig& cfg, std::ostream& log);

/// Writes <controller>.csv per controller plus comparison.csv and prints the
/// comparison tables. Diverged controllers are flagged; the others still
/// run. Returns kExitNumerical if any controller diverged.
int cmd_compare(const ExperimentConfig& cfg, std::ostream& log);

/// Writes surface.csv (x,y,u1,u2,u3 over a 101×101 normalized grid) for the
/// first fuzzy controller. Throws ConfigError when there is none.
int cmd_surface(const ExperimentConfig& cfg, std::ostream& log);

inline constexpr std::size_t kSurfaceGrid = 101;

}  // namespace manip
