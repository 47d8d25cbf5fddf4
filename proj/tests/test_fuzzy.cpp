#include "manip/fuzzy.hpp"

#include <cmath>
#include <random>

#include <gtest/gtest.h>

using namespace manip;
using namespace manip::fuzzy;

namespace {

FlcConfig reference_flc() {
    FlcConfig c;
    c.links = {{{20, 9.275, 32}, {67, 13.275, 16}, {65, 11.975, 8}}};
    return c;
}

double grid(int k, int n) { return (2.0 * k - (n - 1)) / (n - 1); }

}  // namespace

TEST(Fuzzify, Examples) {
    const Partition part;
    const auto at0 = fuzzify(part, 0.0);
    EXPECT_EQ(at0[0], 0.0);
    EXPECT_EQ(at0[1], 1.0);
    EXPECT_EQ(at0[2], 0.0);
    const auto at1 = fuzzify(part, 1.0);
    EXPECT_EQ(at1[0], 0.0);
    EXPECT_EQ(at1[1], 0.0);
    EXPECT_EQ(at1[2], 1.0);
    const auto half = fuzzify(part, 0.5);
    EXPECT_DOUBLE_EQ(half[0], 0.0);
    EXPECT_DOUBLE_EQ(half[1], 0.5);
    EXPECT_DOUBLE_EQ(half[2], 0.5);
    const auto neg = fuzzify(part, -1.0);
    EXPECT_EQ(neg[0], 1.0);
    EXPECT_EQ(neg[1], 0.0);
}

TEST(Fuzzify, PartitionOfUnity) {
    const Partition part;
    for (int k = 0; k < 1001; ++k) {
        const auto d = fuzzify(part, grid(k, 1001));
        for (double x : d) {
            ASSERT_GE(x, 0.0);
            ASSERT_LE(x, 1.0);
        }
        ASSERT_LT(std::fabs(d[0] + d[1] + d[2] - 1.0), 1e-12);
    }
}

TEST(RuleTable, MatchesPublishedTable) {
    using O = OutputLabel;
    using I = InputLabel;
    const auto r = default_rules();
    const auto at = [&](I e, I de) { return r[static_cast<int>(e)][static_cast<int>(de)]; };
    EXPECT_EQ(at(I::P, I::P), O::PB);
    EXPECT_EQ(at(I::P, I::Z), O::P);
    EXPECT_EQ(at(I::P, I::N), O::Z);
    EXPECT_EQ(at(I::Z, I::P), O::P);
    EXPECT_EQ(at(I::Z, I::Z), O::Z);
    EXPECT_EQ(at(I::Z, I::N), O::N);
    EXPECT_EQ(at(I::N, I::P), O::Z);
    EXPECT_EQ(at(I::N, I::Z), O::N);
    EXPECT_EQ(at(I::N, I::N), O::NB);
}

TEST(Labels, RoundTrip) {
    for (auto l : {OutputLabel::NB, OutputLabel::N, OutputLabel::Z, OutputLabel::P, OutputLabel::PB})
        EXPECT_EQ(parse_output_label(name(l)), l);
    for (auto l : {InputLabel::N, InputLabel::Z, InputLabel::P}) EXPECT_EQ(parse_input_label(name(l)), l);
    EXPECT_FALSE(parse_output_label("PM"));
    EXPECT_FALSE(parse_input_label("PB"));
}

TEST(Infer, OriginAndCorners) {
    const FuzzySystem sys;
    EXPECT_EQ(infer(sys, 0, 0), 0.0);
    EXPECT_EQ(infer(sys, 1, 1), 1.0);
    EXPECT_EQ(infer(sys, 1, -1), 0.0);
    EXPECT_EQ(infer(sys, -1, 1), 0.0);
    EXPECT_EQ(infer(sys, -1, -1), -1.0);
}

TEST(Infer, PlanarSurfaceForDefaultDesign) {
    // With the complete triangular partition, product firing and uniformly
    // spaced levels the weighted average collapses to (x + y) / 2 in every
    // quadrant (expand the four firing rules by hand).
    const FuzzySystem sys;
    for (int i = 0; i < 201; ++i)
        for (int j = 0; j < 201; ++j) {
            const double x = grid(i, 201), y = grid(j, 201);
            ASSERT_NEAR(infer(sys, x, y), 0.5 * (x + y), 1e-14);
        }
}

TEST(FlcControl, ZeroAtOrigin) {
    EXPECT_EQ(flc_control(reference_flc(), {}), JointVector{});
}

TEST(FlcControl, SaturatedCornerGivesFullScale) {
    const auto cfg = reference_flc();
    const auto u = flc_control(cfg, {JointVector::filled(5.0), JointVector::filled(5.0)});
    for (int i = 0; i < 3; ++i) EXPECT_EQ(u[i], cfg.links[i].ku);
}

TEST(FlcControl, OddSymmetryAndBounded) {
    const auto cfg = reference_flc();
    for (int i = 0; i < 101; ++i)
        for (int j = 0; j < 101; ++j) {
            const double e = 0.1 * grid(i, 101), ed = 0.2 * grid(j, 101);
            const ErrorSignal err{JointVector::filled(e), JointVector::filled(ed)};
            const auto u = flc_control(cfg, err);
            const auto v = flc_control(cfg, {-err.e, -err.edot});
            for (int k = 0; k < 3; ++k) {
                ASSERT_NEAR(u[k], -v[k], 1e-12);
                ASSERT_LE(std::fabs(u[k]), cfg.links[k].ku);
            }
        }
}

TEST(FlcControl, ClampsScaledInputs) {
    const auto cfg = reference_flc();
    const auto a = flc_control(cfg, {JointVector::filled(0.5), {}});
    const auto b = flc_control(cfg, {JointVector::filled(50.0), {}});
    EXPECT_EQ(a, b);
}

TEST(Surface, CornersSymmetryMonotoneDiagonal) {
    const FuzzySystem sys;
    const double ku = 16;
    const std::size_t n = 101;
    const auto s = inference_surface(sys, ku, n);
    ASSERT_EQ(s.size(), n * n);
    const auto at = [&](std::size_t i, std::size_t j) { return s[i * n + j]; };
    EXPECT_EQ(at(n - 1, n - 1), ku);
    EXPECT_EQ(at(n - 1, 0), 0.0);
    EXPECT_EQ(at(0, n - 1), 0.0);
    EXPECT_EQ(at(0, 0), -ku);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            ASSERT_NEAR(at(i, j), -at(n - 1 - i, n - 1 - j), 1e-12);
            ASSERT_LE(std::fabs(at(i, j)), ku);
        }
    for (std::size_t i = 1; i < n; ++i) ASSERT_GE(at(i, i), at(i - 1, i - 1));
}

TEST(Surface, RejectsTinyGrid) {
    EXPECT_THROW(inference_surface({}, 1.0, 1), std::invalid_argument);
}

TEST(Infer, DegenerateMembershipThrows) {
    FuzzySystem sys;
    // narrow sets leave (0.5, 0.5) uncovered
    sys.inputs.sets = {{{-1, -1, -0.9}, {-0.1, 0, 0.1}, {0.9, 1, 1}}};
    EXPECT_THROW(infer(sys, 0.5, 0.5), std::domain_error);
}

TEST(Config, Validation) {
    auto cfg = reference_flc();
    EXPECT_NO_THROW(cfg.validate());
    cfg.links[1].ku = 0;
    EXPECT_THROW(cfg.validate(), std::invalid_argument);
    cfg = reference_flc();
    cfg.system.levels[4] = 0.9;
    EXPECT_THROW(cfg.validate(), std::invalid_argument);
    cfg = reference_flc();
    cfg.system.inputs.sets[1] = {0.5, 0.0, 1.0};
    EXPECT_THROW(cfg.validate(), std::invalid_argument);
}

TEST(Config, CustomRulesAndLevels) {
    FuzzySystem sys;
    sys.rules[2][2] = OutputLabel::P;
    sys.levels = {-2, -1, 0, 1, 2};
    EXPECT_EQ(infer(sys, 1, 1), 1.0);
    EXPECT_EQ(infer(sys, -1, -1), -2.0);
}
