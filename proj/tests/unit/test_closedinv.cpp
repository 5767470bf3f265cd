#include "ruledkit/closedinv.hpp"
#include "support.hpp"

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <cmath>
#include <fstream>

using namespace ruledkit;
using namespace ruledkit::testing;

namespace {

nlohmann::json golden() {
    std::ifstream in(RULEDKIT_GOLDEN_DIR "/example2_integrals.json");
    return nlohmann::json::parse(in);
}

} // namespace

TEST(Pitch, GreatCircleConstantFields) {
    auto gc = paths::great_circle();
    EXPECT_NEAR(pitch(*gc, LiftField::affine(0, 0, 0.5, 0, 0, 0)), 0.0, 1e-12);
    EXPECT_NEAR(pitch(*gc, LiftField::affine(0, 0, 0, 0, 0, 0.5)), -kPi, 1e-12);
    EXPECT_NEAR(pitch(*example2_path(), LiftField::zero()), 0.0, 1e-15);
}

TEST(Pitch, OpenPathsAreRejected) {
    auto open = std::make_shared<BezierCurvePath>(BezierPath2({{0.5, 0.5}, {1.0, 1.0}, {1.5, 0.7}}));
    try {
        pitch(*open, example_field());
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotClosed);
        EXPECT_STREQ(e.what(), "curve not closed");
    }
    EXPECT_THROW(angle_of_pitch(*paths::equator(), LiftField::zero()), Error);
    EXPECT_THROW(striction_arclength(*open, LiftField::zero()), Error);
}

TEST(AngleOfPitch, SmallCircles) {
    for (double v0 : {0.3, 0.8, kPi / 2, 2.4}) {
        EXPECT_NEAR(angle_of_pitch(*paths::small_circle(v0), LiftField::zero()), -2 * kPi * std::cos(v0), 1e-8);
    }
}

TEST(StrictionLength, ZeroFieldAndHelicoidStyleBand) {
    EXPECT_NEAR(striction_arclength(*example2_path(), LiftField::zero()), 0.0, 1e-15);
    // τ̄ = 0 here, so the length reduces to ∮|κ̄| = 4p
    const double p = 0.3;
    EXPECT_NEAR(striction_arclength(*paths::great_circle(), LiftField::parse("0.3*sin(u), 0")), 4 * p, 1e-9);
}

TEST(ClosedInvariants, SchemesAgreeOnExample2) {
    auto path = example2_path();
    auto field = example_field();
    QuadratureConfig gl, ad;
    ad.scheme = QuadratureConfig::Scheme::Adaptive;
    EXPECT_NEAR(pitch(*path, field, gl), pitch(*path, field, ad), 1e-8);
    EXPECT_NEAR(angle_of_pitch(*path, field, gl), angle_of_pitch(*path, field, ad), 1e-8);
    EXPECT_NEAR(striction_arclength(*path, field, gl), striction_arclength(*path, field, ad), 1e-8);
}

TEST(ClosedInvariants, Example2MatchesGoldenFile) {
    auto g = golden();
    auto inv = integral_invariants(*example2_path(), example_field());
    const double tol = g["tolerance"];
    EXPECT_NEAR(inv.pitch, g["pitch"].get<double>(), tol);
    EXPECT_NEAR(inv.angle_of_pitch, g["angle_of_pitch"].get<double>(), tol);
    EXPECT_NEAR(inv.striction_length, g["striction_length"].get<double>(), tol);
    EXPECT_LT(inv.est_error, 1e-8);
}

TEST(ClosedInvariants, FrameConventionNegates) {
    auto a = integral_invariants(*example2_path(), example_field(), Convention::CoordinateForms);
    auto b = integral_invariants(*example2_path(), example_field(), Convention::FrameForms);
    EXPECT_EQ(a.pitch, -b.pitch);
    EXPECT_EQ(a.angle_of_pitch, -b.angle_of_pitch);
    EXPECT_EQ(a.striction_length, b.striction_length);
}

TEST(ClosedInvariants, ParameterShiftInvariance) {
    auto path = example2_path();
    auto field = example_field();
    QuadratureConfig base;
    for (double c : {0.1, 0.37, 0.5, 0.93}) {
        QuadratureConfig shifted;
        shifted.shift = c;
        EXPECT_NEAR(pitch(*path, field, shifted), pitch(*path, field, base), 1e-9);
        EXPECT_NEAR(angle_of_pitch(*path, field, shifted), angle_of_pitch(*path, field, base), 1e-9);
        EXPECT_NEAR(striction_arclength(*path, field, shifted), striction_arclength(*path, field, base), 1e-9);
    }
}

TEST(ClosedInvariants, ReversalNegatesPitchAndAngle) {
    auto fwd = example2_path();
    auto rev = std::make_shared<BezierCurvePath>(example2_net().reversed());
    auto field = example_field();
    EXPECT_NEAR(pitch(*rev, field), -pitch(*fwd, field), 1e-9);
    EXPECT_NEAR(angle_of_pitch(*rev, field), -angle_of_pitch(*fwd, field), 1e-9);
    EXPECT_NEAR(striction_arclength(*rev, field), striction_arclength(*fwd, field), 1e-9);
}

TEST(ClosedInvariants, ClosedMotionDetection) {
    EXPECT_TRUE(is_closed_motion(*example2_path(), example_field()));
    EXPECT_TRUE(is_closed_motion(*paths::great_circle(), LiftField::zero()));
    EXPECT_FALSE(is_closed_motion(*paths::great_circle(), LiftField::parse("u, 0")));
    EXPECT_FALSE(is_closed_motion(*paths::equator(), LiftField::zero()));
}

TEST(AngleOfPitch, GreatCircleIsZeroForAnyField) {
    for (const char* f : {"0, 0", "sin(u), cos(u)", "0.3, 1 + sin(2*u)*v"}) {
        EXPECT_NEAR(angle_of_pitch(*paths::great_circle(), LiftField::parse(f)), 0.0, 1e-12) << f;
    }
}
