#pragma once

#include "ruledkit/bezier.hpp"
#include "ruledkit/dual_vec.hpp"
#include "ruledkit/liftfield.hpp"

#include <array>

namespace ruledkit {

/// (cos u sin v, sin u sin v, cos v).
Vec3 rus_point(double u, double v);
/// ∂/∂u and ∂/∂v of rus_point.
Vec3 rus_du(double u, double v);
Vec3 rus_dv(double u, double v);

/// A point of the dual unit sphere: x from the chart, x̄ = ū·x_u + v̄·x_v.
struct DusPoint {
    Vec3 x;
    Vec3 x_bar;

    LineElement line() const { return {x, x_bar}; }
    DualVec3 as_dual() const { return {x, x_bar}; }
};

DusPoint dus_point(double u, double v, const LiftField& field);

/// X(t) together with X'(t) and X''(t).
struct DualCurvePoint {
    double t = 0.0;
    DusPoint point;
    DualVec3 d1;
    DualVec3 d2;
    PathSample path;
    bool near_pole = false;

    DualVec3 X() const { return point.as_dual(); }
};

/// Composes path and field; derivatives come from second-order jets in t
/// pushed through the chart and the field (no differencing).
DualCurvePoint dual_curve(const ParametricPath& path, const LiftField& field, double t,
                          const Tolerances& tol = tolerances());

/// Blaschke frame X₁ = X, X₂ = X'/‖X'‖, X₃ = X₁ × X₂ with the dual
/// curvature ‖X'‖ and dual torsion [X, X', X'']/‖X'‖².
struct BlaschkeFrame {
    DualVec3 X1, X2, X3;
    DualScalar kappa_hat;
    DualScalar tau_hat;
    /// x̄₁ = α₃x₂ − α₂x₃, x̄₂ = α₁x₃ − α₃x₁, x̄₃ = α₂x₁ − α₁x₂.
    std::array<double, 3> alpha{};
};

/// Throws CylindricalPoint when ‖x'‖ < tol.kappa_min.
BlaschkeFrame blaschke_frame(const DualCurvePoint& point, const Tolerances& tol = tolerances());

/// X(0) = X(1) componentwise within tol.numerical.
bool dual_curve_closes(const ParametricPath& path, const LiftField& field, const Tolerances& tol = tolerances());

} // namespace ruledkit
