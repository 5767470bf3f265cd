#pragma once

#include "ruledkit/bezier.hpp"
#include "ruledkit/liftfield.hpp"

#include <cmath>
#include <memory>
#include <numbers>
#include <random>
#include <vector>

namespace ruledkit::testing {

inline constexpr double kPi = std::numbers::pi;

inline BezierPath2 example2_net() {
    const double p = kPi / 8;
    return BezierPath2({{p, 2 * p}, {p, 3 * p}, {3 * p, 3 * p}, {3 * p, 2 * p}, {3 * p, p}, {p, p}, {p, 2 * p}});
}

inline std::shared_ptr<const ParametricPath> example2_path() {
    return std::make_shared<BezierCurvePath>(example2_net());
}

inline LiftField example_field() { return LiftField::parse("u - v, u + v"); }

/// Closed net of the given degree kept well inside the chart, away from poles.
inline BezierPath2 random_closed_net(std::mt19937_64& rng, int degree) {
    std::uniform_real_distribution<double> du(0.3, 2.8), dv(0.5, 2.6);
    std::vector<DomainPoint> pts;
    for (int i = 0; i < degree; ++i) pts.push_back({du(rng), dv(rng)});
    pts.push_back(pts.front());
    return BezierPath2(std::move(pts));
}

inline LiftField random_affine_field(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> c(-1.0, 1.0);
    return LiftField::affine(c(rng), c(rng), c(rng), c(rng), c(rng), c(rng));
}

inline double rel_err(double got, double want) { return std::abs(got - want) / std::max(1.0, std::abs(want)); }

} // namespace ruledkit::testing
