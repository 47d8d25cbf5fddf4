#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "manip/controllers.hpp"
#include "manip/joint.hpp"

namespace manip::fuzzy {

/// Linguistic labels of the two inputs (e, ė).
enum class InputLabel : std::size_t { N = 0, Z = 1, P = 2 };
/// Linguistic labels of the output u.
enum class OutputLabel : std::size_t { NB = 0, N = 1, Z = 2, P = 3, PB = 4 };

inline constexpr std::size_t kInputSets = 3;
inline constexpr std::size_t kOutputSets = 5;

std::string_view name(InputLabel l);
std::string_view name(OutputLabel l);
std::optional<InputLabel> parse_input_label(std::string_view s);
std::optional<OutputLabel> parse_output_label(std::string_view s);

/// Triangle on the normalized universe. left == peak (or peak == right)
/// gives a shoulder that stays at 1 beyond the peak.
struct Triangle {
    double left = -1.0;
    double peak = 0.0;
    double right = 1.0;

    double operator()(double x) const;
};

/// Membership degrees indexed by InputLabel.
using Degrees = std::array<double, kInputSets>;

/// Input sets indexed by InputLabel.
struct Partition {
    std::array<Triangle, kInputSets> sets{{{-1.0, -1.0, 0.0}, {-1.0, 0.0, 1.0}, {0.0, 1.0, 1.0}}};

    /// Throws std::invalid_argument for unordered or inverted vertices.
    void validate() const;
};

/// Consequent label for every (e-label, ė-label) pair, indexed [e][ė].
using RuleTable = std::array<std::array<OutputLabel, kInputSets>, kInputSets>;

/// Nine-rule base: a large push when both error and its rate agree in sign,
/// nothing when they oppose each other.
RuleTable default_rules();

/// Crisp consequent levels on the normalized output universe, indexed by
/// OutputLabel.
using OutputLevels = std::array<double, kOutputSets>;

inline constexpr OutputLevels kDefaultLevels{-1.0, -0.5, 0.0, 0.5, 1.0};

/// Throws unless level(NB) = −level(PB), level(N) = −level(P), level(Z) = 0.
void validate_levels(const OutputLevels& levels);

/// Shared inference machinery of all three joint controllers.
struct FuzzySystem {
    Partition inputs;
    RuleTable rules = default_rules();
    OutputLevels levels = kDefaultLevels;
};

/// Per-joint scaling: x = clamp(ke·e), y = clamp(kde·ė), u = ku·crisp.
struct FlcLinkScales {
    double ke = 1.0;   // [1/rad]
    double kde = 1.0;  // [s/rad]
    double ku = 1.0;   // [N·m]
};

struct FlcConfig {
    FuzzySystem system;
    std::array<FlcLinkScales, kJoints> links{};

    void validate() const;
};

/// Membership degrees of x ∈ [−1, 1] in the {N, Z, P} sets.
Degrees fuzzify(const Partition& partition, double x);

/// Zero-order Sugeno inference on already-normalized inputs. Firing
/// strength is the product of the two antecedent degrees; the result is the
/// firing-weighted mean of the consequent levels, in [−1, 1] for the
/// default levels. Throws std::domain_error when total firing < 1e-9.
double infer(const FuzzySystem& system, double x, double y);

/// Torque per joint from the tracking error.
JointVector flc_control(const FlcConfig& cfg, const ErrorSignal& err);

/// grid_n × grid_n row-major samples of ku·infer(x_i, y_j) with
/// x_i = y_i = −1 + 2·i/(grid_n − 1). Row index runs over the error input.
std::vector<double> inference_surface(const FuzzySystem& system, double ku, std::size_t grid_n);

}  // namespace manip::fuzzy
