#pragma once

#include "ruledkit/dual.hpp"
#include "ruledkit/tolerance.hpp"

#include <Eigen/Core>
#include <Eigen/Geometry>

namespace ruledkit {

using Vec3 = Eigen::Vector3d;

/// X = x + εx̄, componentwise dual arithmetic over R³.
struct DualVec3 {
    Vec3 real = Vec3::Zero();
    Vec3 dual = Vec3::Zero();

    DualVec3() = default;
    DualVec3(Vec3 r, Vec3 d) : real(std::move(r)), dual(std::move(d)) {}

    friend DualVec3 operator+(const DualVec3& a, const DualVec3& b) { return {a.real + b.real, a.dual + b.dual}; }
    friend DualVec3 operator-(const DualVec3& a, const DualVec3& b) { return {a.real - b.real, a.dual - b.dual}; }
    friend DualVec3 operator-(const DualVec3& a) { return {-a.real, -a.dual}; }
    friend DualVec3 operator*(const DualScalar& s, const DualVec3& a) {
        return {s.real * a.real, s.dual * a.real + s.real * a.dual};
    }
    friend DualVec3 operator*(const DualVec3& a, const DualScalar& s) { return s * a; }
    friend DualVec3 operator*(double s, const DualVec3& a) { return {s * a.real, s * a.dual}; }
};

/// ⟨U,V⟩ = ⟨u,v⟩ + ε(⟨u,v̄⟩ + ⟨ū,v⟩).
DualScalar dot(const DualVec3& a, const DualVec3& b);

/// (u×v) + ε(ū×v + u×v̄).
DualVec3 cross(const DualVec3& a, const DualVec3& b);

/// Dual norm sqrt(⟨U,U⟩); the real norm must exceed kDivisionGuard.
DualScalar norm(const DualVec3& a);

/// U / s for a dual scalar with invertible real part.
DualVec3 divide(const DualVec3& a, const DualScalar& s);

/// [A, B, C] = ⟨A, B × C⟩ in dual arithmetic.
DualScalar triple(const DualVec3& a, const DualVec3& b, const DualVec3& c);

/// A directed line: unit direction x and moment x̄ = p × x for any point p
/// on the line.
struct LineElement {
    Vec3 direction = Vec3::UnitZ();
    Vec3 moment = Vec3::Zero();

    static LineElement through(const Vec3& point, const Vec3& direction);

    /// Foot of the perpendicular from the origin, x × x̄.
    Vec3 closest_point_to_origin() const { return direction.cross(moment); }
    DualVec3 as_dual() const { return {direction, moment}; }
    bool satisfies_constraints(double tol) const;
};

struct DualAngle {
    double angle = 0.0;     ///< radians, in [0, π]
    double distance = 0.0;  ///< shortest distance between the lines, >= 0
};

/// Angle and shortest distance between two lines, read off cos(α + εd) = ⟨U,V⟩.
/// Parallel and anti-parallel lines take the distance from the moment difference.
DualAngle dual_angle(const LineElement& a, const LineElement& b, const Tolerances& tol = tolerances());

/// Scale to unit direction and project the moment onto the plane normal to
/// it. Throws SingularDirection when ‖u‖ <= 1e-12.
LineElement normalize(const DualVec3& v, const Tolerances& tol = tolerances());

} // namespace ruledkit
