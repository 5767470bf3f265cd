#include "ruledkit/sphereline.hpp"

#include <cmath>

namespace ruledkit {

namespace {

using Jet = Dual<Dual<double>>;

// Second-order Taylor jet in t: value, first derivative on both ε parts,
// second derivative on ε₁ε₂.
Jet t_jet(double value, double first, double second) { return Jet{{value, first}, {first, second}}; }

double value_of(const Jet& j) { return j.real.real; }
double first_of(const Jet& j) { return j.real.dual; }
double second_of(const Jet& j) { return j.dual.dual; }

} // namespace

Vec3 rus_point(double u, double v) {
    return {std::cos(u) * std::sin(v), std::sin(u) * std::sin(v), std::cos(v)};
}

Vec3 rus_du(double u, double v) { return {-std::sin(u) * std::sin(v), std::cos(u) * std::sin(v), 0.0}; }

Vec3 rus_dv(double u, double v) {
    return {std::cos(u) * std::cos(v), std::sin(u) * std::cos(v), -std::sin(v)};
}

DusPoint dus_point(double u, double v, const LiftField& field) {
    auto [ub, vb] = field.evaluate(u, v);
    return {rus_point(u, v), ub * rus_du(u, v) + vb * rus_dv(u, v)};
}

DualCurvePoint dual_curve(const ParametricPath& path, const LiftField& field, double t, const Tolerances& tol) {
    DualCurvePoint out;
    out.t = t;
    out.path = path.sample(t);
    const PathSample& p = out.path;

    Jet u = t_jet(p.u, p.du, p.d2u);
    Jet v = t_jet(p.v, p.dv, p.d2v);
    Jet su = sin(u), cu = cos(u), sv = sin(v), cv = cos(v);
    auto [ub, vb] = field.evaluate(u, v);

    std::array<Jet, 3> x{cu * sv, su * sv, cv};
    std::array<Jet, 3> xb{ub * (-(su * sv)) + vb * (cu * cv), ub * (cu * sv) + vb * (su * cv), -(vb * sv)};

    for (int i = 0; i < 3; ++i) {
        out.point.x[i] = value_of(x[i]);
        out.point.x_bar[i] = value_of(xb[i]);
        out.d1.real[i] = first_of(x[i]);
        out.d1.dual[i] = first_of(xb[i]);
        out.d2.real[i] = second_of(x[i]);
        out.d2.dual[i] = second_of(xb[i]);
    }
    out.near_pole = std::abs(std::sin(p.v)) < tol.pole;
    return out;
}

BlaschkeFrame blaschke_frame(const DualCurvePoint& point, const Tolerances& tol) {
    const double kappa = point.d1.real.norm();
    if (!(kappa >= tol.kappa_min)) {
        throw Error(ErrorKind::CylindricalPoint, "ruling speed below kappa_min (cylindrical point)");
    }
    BlaschkeFrame f;
    f.X1 = point.X();
    f.kappa_hat = norm(point.d1);
    f.X2 = divide(point.d1, f.kappa_hat);
    f.X3 = cross(f.X1, f.X2);
    f.tau_hat = triple(f.X1, point.d1, point.d2) / (f.kappa_hat * f.kappa_hat);

    const Vec3& x2 = f.X2.real;
    const Vec3& x3 = f.X3.real;
    f.alpha[2] = f.X1.dual.dot(x2);
    f.alpha[1] = -f.X1.dual.dot(x3);
    f.alpha[0] = f.X2.dual.dot(x3);
    return f;
}

bool dual_curve_closes(const ParametricPath& path, const LiftField& field, const Tolerances& tol) {
    DomainPoint a = path.position(0.0);
    DomainPoint b = path.position(1.0);
    DusPoint p = dus_point(a.u, a.v, field);
    DusPoint q = dus_point(b.u, b.v, field);
    return (p.x - q.x).cwiseAbs().maxCoeff() <= tol.numerical &&
           (p.x_bar - q.x_bar).cwiseAbs().maxCoeff() <= tol.numerical;
}

} // namespace ruledkit
