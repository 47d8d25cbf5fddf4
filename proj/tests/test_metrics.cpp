#include "manip/metrics.hpp"

#include <cmath>
#include <sstream>
#include <vector>

#include <gtest/gtest.h>

using manip::step_metrics;

namespace {

struct Series {
    std::vector<double> t, y;
};

template <typename F>
Series sample(F f, double dt, double t_end) {
    Series s;
    const auto n = static_cast<std::size_t>(std::lround(t_end / dt));
    for (std::size_t k = 0; k <= n; ++k) {
        const double t = static_cast<double>(k) * dt;
        s.t.push_back(t);
        s.y.push_back(f(t));
    }
    return s;
}

Series first_order() {
    return sample([](double t) { return 1.0 - std::exp(-t); }, 1e-4, 10.0);
}

}  // namespace

TEST(StepMetrics, FirstOrderLagAnalytic) {
    const auto s = first_order();
    const auto m = step_metrics(s.t, s.y, 1.0, 0.0);
    EXPECT_NEAR(m.rise_time, std::log(9.0), 1e-6);
    // band is centred on the last sample 1 − e^{−10}, not on 1:
    // e^{−t} − e^{−10} = 0.02  ⇒  t = −ln(0.02 + e^{−10}) ≈ 3.90976, not ln 50
    EXPECT_NEAR(m.settling_time, -std::log(0.02 + std::exp(-10.0)), 1e-6);
    EXPECT_EQ(m.overshoot, 0.0);
    EXPECT_EQ(m.undershoot, 0.0);
    EXPECT_NEAR(m.sse, std::exp(-10.0), 1e-12);
    EXPECT_TRUE(m.rose());
    EXPECT_LE(m.rise_time, m.settling_time);
}

TEST(StepMetrics, SettlingMatchesLn50WhenFinalValueIsExact) {
    // Over a long horizon the last sample equals the reference to rounding.
    const auto s = sample([](double t) { return 1.0 - std::exp(-t); }, 1e-4, 40.0);
    EXPECT_NEAR(step_metrics(s.t, s.y, 1.0, 0.0).settling_time, std::log(50.0), 1e-6);
}

TEST(StepMetrics, PerfectTracking) {
    const auto s = sample([](double) { return 2.0; }, 0.01, 1.0);
    const auto m = step_metrics(s.t, s.y, 2.0, 0.0);
    EXPECT_EQ(m.sse, 0.0);
    EXPECT_EQ(m.overshoot, 0.0);
    EXPECT_EQ(m.undershoot, 0.0);
    EXPECT_EQ(m.rise_time, 0.0);
    EXPECT_EQ(m.settling_time, 0.0);
}

TEST(StepMetrics, HandBuiltExcursions) {
    // dips 0.2 below the start, then peaks 0.1 above the final value
    const std::vector<double> t{0, 1, 2, 3, 4, 5};
    const std::vector<double> y{0, -0.2, 0.5, 1.1, 1.0, 1.0};
    const auto m = step_metrics(t, y, 1.0, 0.0);
    EXPECT_NEAR(m.undershoot, 20.0, 1e-12);
    EXPECT_NEAR(m.overshoot, 10.0, 1e-12);
    // 10 % crossing between t=1 and t=2: −0.2 → 0.5; 90 % between t=2 and t=3: 0.5 → 1.1
    const double t10 = 1.0 + (0.1 + 0.2) / 0.7;
    const double t90 = 2.0 + (0.9 - 0.5) / 0.6;
    EXPECT_NEAR(m.rise_time, t90 - t10, 1e-12);
    // last exit from the ±0.02 band: 1.1 (t=3) → 1.0 (t=4) crosses 1.02 at t = 3.8
    EXPECT_NEAR(m.settling_time, 3.8, 1e-12);
}

TEST(StepMetrics, UnderdampedSecondOrderOvershoot) {
    // brute-force peak of a dense sample against the closed-form overshoot
    const double zeta = 0.3, wn = 4.0, wd = wn * std::sqrt(1 - zeta * zeta);
    const auto s = sample(
        [&](double t) {
            return 1.0 - std::exp(-zeta * wn * t) *
                             (std::cos(wd * t) + zeta / std::sqrt(1 - zeta * zeta) * std::sin(wd * t));
        },
        1e-4, 20.0);
    const auto m = step_metrics(s.t, s.y, 1.0, 0.0);
    const double expected = 100.0 * std::exp(-zeta * M_PI / std::sqrt(1 - zeta * zeta));
    EXPECT_NEAR(m.overshoot, expected, 1e-4);
    EXPECT_EQ(m.undershoot, 0.0);
}

TEST(StepMetrics, NegativeStep) {
    const auto s = sample([](double t) { return 2.0 - 1.0 * (1.0 - std::exp(-t)); }, 1e-3, 10.0);
    const auto m = step_metrics(s.t, s.y, 1.0, 2.0);
    EXPECT_NEAR(m.rise_time, std::log(9.0), 1e-5);
    EXPECT_NEAR(m.settling_time, -std::log(0.02 + std::exp(-10.0)), 1e-5);
    EXPECT_EQ(m.overshoot, 0.0);
    EXPECT_EQ(m.undershoot, 0.0);
}

TEST(StepMetrics, NeverRisesIsNaN) {
    const auto s = sample([](double t) { return 0.5 * (1.0 - std::exp(-t)); }, 1e-2, 10.0);
    const auto m = step_metrics(s.t, s.y, 1.0, 0.0);
    EXPECT_FALSE(m.rose());
    EXPECT_TRUE(std::isnan(m.settling_time));
    EXPECT_NEAR(m.sse, 0.5, 1e-4);
}

TEST(StepMetrics, Errors) {
    const std::vector<double> none;
    EXPECT_THROW(step_metrics(none, none, 1.0, 0.0), std::invalid_argument);
    const std::vector<double> t{0, 1}, y{0, 1}, y3{0, 1, 2};
    EXPECT_THROW(step_metrics(t, y3, 1.0, 0.0), std::invalid_argument);
    EXPECT_THROW(step_metrics(t, y, 0.5, 0.5), std::invalid_argument);
}

TEST(StepMetrics, TimeShiftMovesSettlingOnly) {
    // Rise time is a difference of two crossing times, so it is unchanged;
    // settling time is absolute and moves by the shift.
    const auto base = sample([](double t) { return 1.0 - std::exp(-t); }, 1e-3, 10.0);
    const std::size_t k = 250;
    Series shifted;
    for (std::size_t i = 0; i < k; ++i) {
        shifted.t.push_back(static_cast<double>(i) * 1e-3);
        shifted.y.push_back(0.0);
    }
    for (std::size_t i = 0; i < base.y.size(); ++i) {
        shifted.t.push_back(static_cast<double>(i + k) * 1e-3);
        shifted.y.push_back(base.y[i]);
    }
    const auto a = step_metrics(base.t, base.y, 1.0, 0.0);
    const auto b = step_metrics(shifted.t, shifted.y, 1.0, 0.0);
    EXPECT_NEAR(b.rise_time, a.rise_time, 1e-9);
    EXPECT_NEAR(b.settling_time, a.settling_time + k * 1e-3, 1e-9);
    EXPECT_EQ(b.overshoot, a.overshoot);
}

TEST(StepMetrics, AmplitudeInvariance) {
    const auto s = sample(
        [](double t) { return 0.3 + 1.0 - std::exp(-2 * t) * (std::cos(5 * t) + 0.4 * std::sin(5 * t)); },
        1e-3, 8.0);
    const double c = 3.7;
    std::vector<double> scaled;
    for (double v : s.y) scaled.push_back(0.3 + c * (v - 0.3));
    const auto a = step_metrics(s.t, s.y, 1.3, 0.3);
    const auto b = step_metrics(s.t, scaled, 0.3 + c, 0.3);
    EXPECT_NEAR(b.rise_time, a.rise_time, 1e-9);
    EXPECT_NEAR(b.settling_time, a.settling_time, 1e-9);
    EXPECT_NEAR(b.overshoot, a.overshoot, 1e-9);
    EXPECT_NEAR(b.undershoot, a.undershoot, 1e-9);
    EXPECT_NEAR(b.sse, c * a.sse, 1e-12);
}

TEST(StepMetrics, MonotoneHasNoOvershoot) {
    for (double rate : {0.3, 1.0, 5.0}) {
        const auto s = sample([&](double t) { return 1 - std::exp(-rate * t) * (1 + rate * t); }, 1e-3, 6.0);
        EXPECT_EQ(step_metrics(s.t, s.y, 1.0, 0.0).overshoot, 0.0);
    }
}

TEST(MetricsCsv, Format) {
    std::ostringstream os;
    manip::StepMetrics m;
    m.overshoot = 1.5;
    manip::write_metrics_csv(os, {{2, "pid", m}});
    EXPECT_EQ(os.str(),
              "link,controller,rise_time,settling_time,overshoot_pct,undershoot_pct,sse\n"
              "2,pid,NaN,NaN,1.5,0,0\n");
}
