#include "ruledkit/error.hpp"
#include "ruledkit/expr.hpp"
#include "ruledkit/liftfield.hpp"
#include "ruledkit/netfile.hpp"
#include "ruledkit/tolerance.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace ruledkit;
constexpr double kPi = std::numbers::pi;

TEST(Angle, Literals) {
    EXPECT_DOUBLE_EQ(parse_angle("pi"), kPi);
    EXPECT_DOUBLE_EQ(parse_angle("pi/8"), kPi / 8);
    EXPECT_DOUBLE_EQ(parse_angle("3pi/8"), 3 * kPi / 8);
    EXPECT_DOUBLE_EQ(parse_angle("3*pi/8"), 3 * kPi / 8);
    EXPECT_DOUBLE_EQ(parse_angle("-pi/4"), -kPi / 4);
    EXPECT_DOUBLE_EQ(parse_angle("0.25"), 0.25);
    EXPECT_THROW(parse_angle("pie"), ParseError);
    EXPECT_THROW(parse_angle("pi/0"), ParseError);
    EXPECT_THROW(parse_angle(""), ParseError);
}

TEST(ControlNet, ParsesMixedEntries) {
    auto b = parse_control_net(R"([["pi/8", 0.5], [1, "pi/2"], ["pi/8", 0.5]])");
    ASSERT_EQ(b.control_points().size(), 3u);
    EXPECT_DOUBLE_EQ(b.control_points()[0].u, kPi / 8);
    EXPECT_DOUBLE_EQ(b.control_points()[1].v, kPi / 2);
    auto again = control_net_from_json(control_net_to_json(b));
    EXPECT_EQ(again.control_points(), b.control_points());
}

TEST(ControlNet, Errors) {
    EXPECT_THROW(parse_control_net("[[0, 1], [2"), ParseError);
    EXPECT_THROW(parse_control_net(R"({"u": 1})"), ParseError);
    EXPECT_THROW(parse_control_net(R"([[0, 1, 2], [1, 1]])"), ParseError);
    EXPECT_THROW(parse_control_net(R"([[0, 1]])"), ParseError);
    try {
        load_control_net("/nonexistent/net.json");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::Io);
    }
}

TEST(Expr, PrecedenceAndAssociativity) {
    auto e = expr::parse("1 + 2 * 3 ^ 2 ^ 0.5 - -u");
    const double want = 1 + 2 * std::pow(3.0, std::pow(2.0, 0.5)) + 0.25;
    EXPECT_NEAR(expr::evaluate(*e, 0.25, 0.0), want, 1e-14);
    EXPECT_NEAR(expr::evaluate(*expr::parse("sin(pi*v) + cos(u)/exp(v)"), 0.3, 0.5),
                std::sin(kPi * 0.5) + std::cos(0.3) / std::exp(0.5), 1e-15);
}

TEST(Expr, PrintRoundTrips) {
    for (const char* src : {"u - v", "-u^2 + 3*sin(v)/2", "exp(u*v) - pi", "(u+v)^-1", "1e-3*u"}) {
        auto a = expr::parse(src);
        auto b = expr::parse(expr::print(*a));
        EXPECT_TRUE(expr::structurally_equal(*a, *b)) << src;
    }
}

TEST(Expr, ErrorPositions) {
    try {
        expr::parse("u + * v");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), 4u);
    }
    EXPECT_THROW(expr::parse("sin u"), ParseError);
    EXPECT_THROW(expr::parse("Sin(u)"), ParseError);
    EXPECT_THROW(expr::parse("(u"), ParseError);
    EXPECT_THROW(expr::parse("u v"), ParseError);
}

TEST(Expr, DomainErrorsAtEvaluation) {
    EXPECT_THROW(expr::evaluate(*expr::parse("1/(u-v)"), 1.0, 1.0), Error);
    EXPECT_THROW(expr::evaluate(*expr::parse("u^0.5"), -1.0, 0.0), Error);
    EXPECT_NEAR(expr::evaluate(*expr::parse("u^-2"), -2.0, 0.0), 0.25, 1e-15);
}

TEST(LiftField, ParseSplitsOnTopLevelComma) {
    auto f = LiftField::parse("u - v , u + v");
    auto [a, b] = f.evaluate(0.5, 0.2);
    EXPECT_DOUBLE_EQ(a, 0.3);
    EXPECT_DOUBLE_EQ(b, 0.7);
    auto g = LiftField::parse(f.to_string());
    EXPECT_EQ(g.evaluate(1.1, 0.4), f.evaluate(1.1, 0.4));
}

TEST(LiftField, ErrorPositionsPointIntoWholeText) {
    try {
        LiftField::parse("u, v + * u");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), 7u);
    }
    EXPECT_THROW(LiftField::parse("u + v"), ParseError);
    EXPECT_THROW(LiftField::parse("u, v, w"), ParseError);
}

TEST(LiftField, PartialsMatchFiniteDifferences) {
    auto f = LiftField::parse("sin(u)*v^2, exp(u - v) + u*v");
    const double u = 0.8, v = 1.3, h = 1e-4;
    auto s = f.eval_with_partials(u, v);
    auto ub = [&](double a, double b) { return f.evaluate(a, b).first; };
    auto vb = [&](double a, double b) { return f.evaluate(a, b).second; };
    EXPECT_NEAR(s.u_bar_u, (ub(u + h, v) - ub(u - h, v)) / (2 * h), 1e-7);
    EXPECT_NEAR(s.v_bar_v, (vb(u, v + h) - vb(u, v - h)) / (2 * h), 1e-7);
    EXPECT_NEAR(s.u_bar_uv, (ub(u + h, v + h) - ub(u + h, v - h) - ub(u - h, v + h) + ub(u - h, v - h)) / (4 * h * h),
                1e-6);
    EXPECT_NEAR(s.v_bar_uu, (vb(u + h, v) - 2 * vb(u, v) + vb(u - h, v)) / (h * h), 1e-6);
    EXPECT_NEAR(s.u_bar_vv, 2 * std::sin(u), 1e-12);
}

TEST(LiftField, AffinePartialsAreConstant) {
    auto f = LiftField::affine(1, 2, 3, 4, 5, 6);
    auto s = f.eval_with_partials(0.1, 0.2);
    EXPECT_DOUBLE_EQ(s.u_bar, 0.1 + 0.4 + 3);
    EXPECT_DOUBLE_EQ(s.v_bar_v, 5.0);
    EXPECT_DOUBLE_EQ(s.u_bar_uu, 0.0);
}

TEST(Tolerances, ParseOverrides) {
    auto t = parse_tolerances("kappa_min=1e-6, pole=1e-4");
    EXPECT_DOUBLE_EQ(t.kappa_min, 1e-6);
    EXPECT_DOUBLE_EQ(t.pole, 1e-4);
    EXPECT_DOUBLE_EQ(t.structural, Tolerances{}.structural);
    EXPECT_DOUBLE_EQ(parse_tolerances("1e-7").numerical, 1e-7);
    EXPECT_THROW(parse_tolerances("bogus=1"), ParseError);
    EXPECT_THROW(parse_tolerances("pole=abc"), ParseError);
}

TEST(LiftField, WorkedValues) {
    auto f = LiftField::parse("u - v, u + v");
    auto s = f.eval_with_partials(0.4, 1.3);
    EXPECT_EQ(s.u_bar_u, 1.0);
    EXPECT_EQ(s.u_bar_v, -1.0);
    EXPECT_EQ(s.v_bar_u, 1.0);
    EXPECT_EQ(s.v_bar_v, 1.0);
    for (double t : {0.0, 0.5, 1.7}) {
        auto [ub, vb] = f.evaluate(t, t);
        EXPECT_EQ(ub, 0.0);
        EXPECT_DOUBLE_EQ(vb, 2 * t);
    }
    EXPECT_NEAR(LiftField::parse("sin(u)*v, 0").eval_with_partials(0.0, 2.0).u_bar_u, 2.0, 1e-15);
    try {
        LiftField::parse("u + * v, 0");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), 4u);
    }
}

TEST(LiftField, AffineMatchesParsedForm) {
    auto a = LiftField::affine(1, -1, 0, 1, 1, 0);
    auto p = LiftField::parse("u-v, u+v");
    EXPECT_TRUE(a.is_affine());
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> d(0.0, 6.0);
    for (int i = 0; i < 100; ++i) {
        const double u = d(rng), v = d(rng);
        EXPECT_NEAR(a.evaluate(u, v).first, p.evaluate(u, v).first, 1e-15);
        EXPECT_NEAR(a.evaluate(u, v).second, p.evaluate(u, v).second, 1e-15);
    }
}

TEST(LiftField, PolynomialPartialsExact) {
    // ū = u³v − 2uv², v̄ = u²v²
    auto f = LiftField::parse("u^3*v - 2*u*v^2, u^2*v^2");
    const double u = 1.3, v = -0.7;
    auto s = f.eval_with_partials(u, v);
    EXPECT_NEAR(s.u_bar_u, 3 * u * u * v - 2 * v * v, 1e-12);
    EXPECT_NEAR(s.u_bar_v, u * u * u - 4 * u * v, 1e-12);
    EXPECT_NEAR(s.u_bar_uu, 6 * u * v, 1e-12);
    EXPECT_NEAR(s.u_bar_uv, 3 * u * u - 4 * v, 1e-12);
    EXPECT_NEAR(s.u_bar_vv, -4 * u, 1e-12);
    EXPECT_NEAR(s.v_bar_uu, 2 * v * v, 1e-12);
    EXPECT_NEAR(s.v_bar_uv, 4 * u * v, 1e-12);
    EXPECT_NEAR(s.v_bar_vv, 2 * u * u, 1e-12);
}
