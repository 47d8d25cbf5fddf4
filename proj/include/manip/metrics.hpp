#pragma once

#include <cmath>
#include <iosfwd>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace manip {

/// Step-response characteristics of one joint. Times are NaN when the
/// response never reaches 90 % of the step.
struct StepMetrics {
    double rise_time = std::numeric_limits<double>::quiet_NaN();      // [s]
    double settling_time = std::numeric_limits<double>::quiet_NaN();  // [s]
    double overshoot = 0.0;   // [% of |step|]
    double undershoot = 0.0;  // [% of |step|]
    double sse = 0.0;         // reference − final sample [rad]

    bool rose() const { return !std::isnan(rise_time); }
};

inline constexpr double kRiseLow = 0.1;
inline constexpr double kRiseHigh = 0.9;
inline constexpr double kSettlingBand = 0.02;

/// Stepinfo-style metrics of a uniformly sampled response y(times) to a step
/// from `initial` to `reference`. The final value is the last sample.
///
/// - rise: first crossing of 10 % to first crossing of 90 % of the step;
/// - settling: last exit from the ±2 % band around the final value;
/// - overshoot: peak excursion past the final value;
/// - undershoot: peak excursion behind the initial value.
///
/// Crossing times are linearly interpolated between samples. Throws
/// std::invalid_argument for empty or mismatched input and when
/// reference == initial.
StepMetrics step_metrics(std::span<const double> times, std::span<const double> y,
                         double reference, double initial);

/// One row of the comparison table.
struct MetricsRow {
    int link = 0;
    std::string controller;
    StepMetrics metrics;
};

/// CSV with header link,controller,rise_time,settling_time,overshoot_pct,undershoot_pct,sse.
void write_metrics_csv(std::ostream& os, const std::vector<MetricsRow>& rows);

}  // namespace manip
