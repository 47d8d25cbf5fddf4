#include "manip/fuzzy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace manip::fuzzy {

namespace {

constexpr std::array<std::string_view, kInputSets> kInputNames{"N", "Z", "P"};
constexpr std::array<std::string_view, kOutputSets> kOutputNames{"NB", "N", "Z", "P", "PB"};
constexpr double kMinFiring = 1e-9;

constexpr std::size_t idx(InputLabel l) { return static_cast<std::size_t>(l); }
constexpr std::size_t idx(OutputLabel l) { return static_cast<std::size_t>(l); }

}  // namespace

std::string_view name(InputLabel l) { return kInputNames[idx(l)]; }
std::string_view name(OutputLabel l) { return kOutputNames[idx(l)]; }

std::optional<InputLabel> parse_input_label(std::string_view s) {
    for (std::size_t i = 0; i < kInputSets; ++i)
        if (kInputNames[i] == s) return static_cast<InputLabel>(i);
    return std::nullopt;
}

std::optional<OutputLabel> parse_output_label(std::string_view s) {
    for (std::size_t i = 0; i < kOutputSets; ++i)
        if (kOutputNames[i] == s) return static_cast<OutputLabel>(i);
    return std::nullopt;
}

double Triangle::operator()(double x) const {
    if (x == peak) return 1.0;
    if (x < peak) {
        if (left == peak) return 1.0;
        return std::clamp((x - left) / (peak - left), 0.0, 1.0);
    }
    if (right == peak) return 1.0;
    return std::clamp((right - x) / (right - peak), 0.0, 1.0);
}

void Partition::validate() const {
    for (std::size_t i = 0; i < kInputSets; ++i) {
        const auto& t = sets[i];
        if (!std::isfinite(t.left) || !std::isfinite(t.peak) || !std::isfinite(t.right) ||
            t.left > t.peak || t.peak > t.right)
            throw std::invalid_argument("membership set " + std::string(kInputNames[i]) +
                                        " needs finite vertices with left <= peak <= right");
    }
}

RuleTable default_rules() {
    using O = OutputLabel;
    // rows: e = N, Z, P; columns: ė = N, Z, P
    return {{{O::NB, O::N, O::Z}, {O::N, O::Z, O::P}, {O::Z, O::P, O::PB}}};
}

void validate_levels(const OutputLevels& levels) {
    for (double x : levels)
        if (!std::isfinite(x)) throw std::invalid_argument("output levels must be finite");
    if (levels[idx(OutputLabel::NB)] != -levels[idx(OutputLabel::PB)] ||
        levels[idx(OutputLabel::N)] != -levels[idx(OutputLabel::P)] ||
        levels[idx(OutputLabel::Z)] != 0.0)
        throw std::invalid_argument("output levels must be antisymmetric with level(Z) = 0");
}

void FlcConfig::validate() const {
    system.inputs.validate();
    validate_levels(system.levels);
    for (std::size_t i = 0; i < kJoints; ++i) {
        const auto& s = links[i];
        if (!std::isfinite(s.ke) || !std::isfinite(s.kde) || !std::isfinite(s.ku) || !(s.ku > 0.0))
            throw std::invalid_argument("flc scales of link " + std::to_string(i + 1) +
                                        " must be finite with ku > 0");
    }
}

Degrees fuzzify(const Partition& partition, double x) {
    Degrees d{};
    for (std::size_t i = 0; i < kInputSets; ++i) d[i] = partition.sets[i](x);
    return d;
}

double infer(const FuzzySystem& system, double x, double y) {
    const Degrees mx = fuzzify(system.inputs, x);
    const Degrees my = fuzzify(system.inputs, y);
    double num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < kInputSets; ++i) {
        for (std::size_t j = 0; j < kInputSets; ++j) {
            const double w = mx[i] * my[j];
            num += w * system.levels[idx(system.rules[i][j])];
            den += w;
        }
    }
    if (!(den >= kMinFiring))
        throw std::domain_error("fuzzy rule base does not fire (total strength " +
                                std::to_string(den) + "); check membership vertices");
    return num / den;
}

JointVector flc_control(const FlcConfig& cfg, const ErrorSignal& err) {
    JointVector u;
    for (std::size_t i = 0; i < kJoints; ++i) {
        const auto& s = cfg.links[i];
        const double x = std::clamp(s.ke * err.e[i], -1.0, 1.0);
        const double y = std::clamp(s.kde * err.edot[i], -1.0, 1.0);
        u[i] = s.ku * infer(cfg.system, x, y);
    }
    return u;
}

std::vector<double> inference_surface(const FuzzySystem& system, double ku, std::size_t grid_n) {
    if (grid_n < 2) throw std::invalid_argument("inference_surface: grid_n must be >= 2");
    std::vector<double> out;
    out.reserve(grid_n * grid_n);
    // (2k − (n − 1)) / (n − 1) keeps mirrored grid points exact negatives.
    const double span = static_cast<double>(grid_n - 1);
    const auto coord = [span](std::size_t k) { return (2.0 * static_cast<double>(k) - span) / span; };
    for (std::size_t i = 0; i < grid_n; ++i)
        for (std::size_t j = 0; j < grid_n; ++j) out.push_back(ku * infer(system, coord(i), coord(j)));
    return out;
}

}  // namespace manip::fuzzy
