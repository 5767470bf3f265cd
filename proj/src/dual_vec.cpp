#include "ruledkit/dual_vec.hpp"

#include <algorithm>
#include <cmath>

namespace ruledkit {

DualScalar dot(const DualVec3& a, const DualVec3& b) {
    return {a.real.dot(b.real), a.real.dot(b.dual) + a.dual.dot(b.real)};
}

DualVec3 cross(const DualVec3& a, const DualVec3& b) {
    return {a.real.cross(b.real), a.dual.cross(b.real) + a.real.cross(b.dual)};
}

DualScalar norm(const DualVec3& a) { return sqrt(dot(a, a)); }

DualVec3 divide(const DualVec3& a, const DualScalar& s) {
    DualScalar inv = 1.0 / s;
    return inv * a;
}

DualScalar triple(const DualVec3& a, const DualVec3& b, const DualVec3& c) { return dot(a, cross(b, c)); }

LineElement LineElement::through(const Vec3& point, const Vec3& direction) {
    Vec3 x = direction.normalized();
    return {x, point.cross(x)};
}

bool LineElement::satisfies_constraints(double tol) const {
    return std::abs(direction.norm() - 1.0) <= tol && std::abs(direction.dot(moment)) <= tol;
}

DualAngle dual_angle(const LineElement& a, const LineElement& b, const Tolerances& tol) {
    const Vec3& u = a.direction;
    const Vec3& v = b.direction;
    double sin_a = u.cross(v).norm();
    double cos_a = u.dot(v);
    double angle = std::atan2(sin_a, cos_a);
    if (sin_a <= tol.structural) {
        // cos α̂ = cos α − εd sin α carries no distance here; use moments.
        Vec3 diff = cos_a > 0.0 ? Vec3(a.moment - b.moment) : Vec3(a.moment + b.moment);
        return {cos_a > 0.0 ? 0.0 : M_PI, diff.norm()};
    }
    DualScalar c = dot(a.as_dual(), b.as_dual());
    return {angle, std::abs(-c.dual / sin_a)};
}

LineElement normalize(const DualVec3& v, const Tolerances& tol) {
    double len = v.real.norm();
    if (!(len > tol.structural)) {
        throw Error(ErrorKind::SingularDirection, "dual vector has no real direction");
    }
    Vec3 x = v.real / len;
    Vec3 m = v.dual / len;
    m -= x.dot(m) * x;
    return {x, m};
}

} // namespace ruledkit
