#include "manip/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <ostream>

#include "manip/csv.hpp"

namespace manip {

namespace {

/// First time the signed progress (y − level)·dir reaches zero.
std::optional<double> first_crossing(std::span<const double> t, std::span<const double> y,
                                     double level, double dir) {
    if ((y[0] - level) * dir >= 0.0) return t[0];
    for (std::size_t k = 1; k < y.size(); ++k) {
        const double after = (y[k] - level) * dir;
        if (after >= 0.0) {
            const double before = (y[k - 1] - level) * dir;
            const double frac = before / (before - after);
            return t[k - 1] + frac * (t[k] - t[k - 1]);
        }
    }
    return std::nullopt;
}

}  // namespace

StepMetrics step_metrics(std::span<const double> times, std::span<const double> y,
                         double reference, double initial) {
    if (y.empty()) throw std::invalid_argument("step_metrics: empty signal");
    if (times.size() != y.size())
        throw std::invalid_argument("step_metrics: times and signal differ in length");
    const double delta = reference - initial;
    if (!(delta != 0.0)) throw std::invalid_argument("step_metrics: reference equals initial");

    const double dir = delta > 0.0 ? 1.0 : -1.0;
    const double mag = std::fabs(delta);
    const double final_value = y.back();

    StepMetrics m;
    m.sse = reference - final_value;

    double peak_past_final = 0.0;
    double peak_behind_initial = 0.0;
    for (double v : y) {
        peak_past_final = std::max(peak_past_final, (v - final_value) * dir);
        peak_behind_initial = std::max(peak_behind_initial, -(v - initial) * dir);
    }
    m.overshoot = peak_past_final / mag * 100.0;
    m.undershoot = peak_behind_initial / mag * 100.0;

    const auto t_low = first_crossing(times, y, initial + kRiseLow * delta, dir);
    const auto t_high = first_crossing(times, y, initial + kRiseHigh * delta, dir);
    if (!t_low || !t_high) return m;
    m.rise_time = *t_high - *t_low;

    const double band = kSettlingBand * mag;
    std::size_t last_out = y.size();
    for (std::size_t k = y.size(); k-- > 0;) {
        if (std::fabs(y[k] - final_value) > band) {
            last_out = k;
            break;
        }
    }
    if (last_out == y.size()) {
        m.settling_time = times[0];
    } else {
        // y[last_out + 1] exists: the last sample is the final value itself.
        const double d0 = y[last_out] - final_value;
        const double d1 = y[last_out + 1] - final_value;
        const double edge = d0 > 0.0 ? band : -band;
        const double frac = (d0 - edge) / (d0 - d1);
        m.settling_time = times[last_out] + frac * (times[last_out + 1] - times[last_out]);
    }
    return m;
}

void write_metrics_csv(std::ostream& os, const std::vector<MetricsRow>& rows) {
    os << "link,controller,rise_time,settling_time,overshoot_pct,undershoot_pct,sse\n";
    for (const auto& r : rows) {
        const auto& m = r.metrics;
        os << r.link << ',' << r.controller << ',' << csv::number(m.rise_time) << ','
           << csv::number(m.settling_time) << ',' << csv::number(m.overshoot) << ','
           << csv::number(m.undershoot) << ',' << csv::number(m.sse) << '\n';
    }
}

}  // namespace manip
