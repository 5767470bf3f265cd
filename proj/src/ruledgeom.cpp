#include "ruledkit/ruledgeom.hpp"

#include "ruledkit/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <sstream>

namespace ruledkit {

std::string flags_to_string(unsigned flags) {
    std::string out;
    auto add = [&](unsigned bit, const char* name) {
        if (flags & bit) {
            if (!out.empty()) out += '|';
            out += name;
        }
    };
    add(kDevelopable, "developable");
    add(kCylindrical, "cylindrical");
    add(kPole, "pole");
    add(kUndefined, "undefined");
    return out;
}

unsigned flags_from_string(const std::string& text) {
    unsigned flags = 0;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, '|')) {
        if (item == "developable") flags |= kDevelopable;
        else if (item == "cylindrical") flags |= kCylindrical;
        else if (item == "pole") flags |= kPole;
        else if (item == "undefined") flags |= kUndefined;
    }
    return flags;
}

namespace {

// Total t-derivatives of ū(u(t), v(t)) and v̄(u(t), v(t)).
struct LiftJet {
    double a, da, d2a;  // ū
    double b, db, d2b;  // v̄
};

LiftJet lift_along_path(const PathSample& p, const LiftSample& s) {
    const double uu = p.du * p.du, uv = p.du * p.dv, vv = p.dv * p.dv;
    return {s.u_bar,
            s.u_bar_u * p.du + s.u_bar_v * p.dv,
            s.u_bar_uu * uu + 2.0 * s.u_bar_uv * uv + s.u_bar_vv * vv + s.u_bar_u * p.d2u + s.u_bar_v * p.d2v,
            s.v_bar,
            s.v_bar_u * p.du + s.v_bar_v * p.dv,
            s.v_bar_uu * uu + 2.0 * s.v_bar_uv * uv + s.v_bar_vv * vv + s.v_bar_u * p.d2u + s.v_bar_v * p.d2v};
}

void finish(InvariantSample& s, double sin_v, const Tolerances& tol) {
    s.delta = s.kappa_bar / s.kappa;
    if (std::abs(s.kappa_bar) <= tol.developable) {
        s.flags |= kDevelopable;
        s.cot_sigma.reset();
    } else {
        s.cot_sigma = s.tau_bar / s.kappa_bar;
    }
    if (std::abs(sin_v) < tol.pole) s.flags |= kPole;
}

double triple(const Vec3& a, const Vec3& b, const Vec3& c) { return a.dot(b.cross(c)); }

} // namespace

double pitch_density(const PathSample& p, const LiftSample& lift) {
    return std::sin(p.v) * (lift.u_bar * p.dv - lift.v_bar * p.du);
}

double coordinate_tau(const PathSample& p) {
    const double sv = std::sin(p.v), cv = std::cos(p.v);
    const double k2 = p.du * p.du * sv * sv + p.dv * p.dv;
    return (cv * (p.du * p.du * p.du * sv * sv + 2.0 * p.du * p.dv * p.dv) + sv * (p.d2u * p.dv - p.du * p.d2v)) /
           k2;
}

InvariantSample invariants_at(const ParametricPath& path, const LiftField& field, double t, const Tolerances& tol) {
    const PathSample p = path.sample(t);
    const double sv = std::sin(p.v), cv = std::cos(p.v);
    const double k2 = p.du * p.du * sv * sv + p.dv * p.dv;
    const double kappa = std::sqrt(k2);
    if (!(kappa >= tol.kappa_min)) {
        throw Error(ErrorKind::CylindricalPoint, "ruling speed below kappa_min (cylindrical point)");
    }
    const LiftSample lift = field.eval_with_partials(p.u, p.v);
    const LiftJet j = lift_along_path(p, lift);

    InvariantSample s;
    s.t = t;
    s.kappa = kappa;
    s.kappa_bar = (p.du * p.du * sv * (lift.v_bar * cv + lift.u_bar_u * sv) +
                   p.du * p.dv * (lift.v_bar_u + lift.u_bar_v * sv * sv) + p.dv * p.dv * lift.v_bar_v) /
                  kappa;
    s.tau = coordinate_tau(p);

    // τ̄ = ⟨m', x⟩ with m = c − q·x, q = ⟨x', c'⟩/κ²:  τ̄ = ⟨c', x⟩ − q'.
    const double P = sv * (j.db * p.du - j.da * p.dv) - cv * (j.a * k2 + j.b * p.du * p.dv);
    const double dk2 = 2.0 * p.du * p.d2u * sv * sv + 2.0 * p.du * p.du * sv * cv * p.dv + 2.0 * p.dv * p.d2v;
    const double dP = cv * p.dv * (j.db * p.du - j.da * p.dv) +
                      sv * (j.d2b * p.du + j.db * p.d2u - j.d2a * p.dv - j.da * p.d2v) +
                      sv * p.dv * (j.a * k2 + j.b * p.du * p.dv) -
                      cv * (j.da * k2 + j.a * dk2 + j.db * p.du * p.dv + j.b * (p.d2u * p.dv + p.du * p.d2v));
    const double dq = (dP * k2 - P * dk2) / (k2 * k2);
    s.tau_bar = pitch_density(p, lift) - dq;

    finish(s, sv, tol);
    return s;
}

InvariantSample frame_invariants_oracle(const ParametricPath& path, const LiftField& field, double t, double h,
                                        const Tolerances& tol) {
    auto at = [&](double s) {
        DomainPoint q = path.position(s);
        return dus_point(q.u, q.v, field);
    };
    // Central differences at steps h and h/2, Richardson-combined to O(h⁴).
    const DusPoint c = at(t), m1 = at(t - h), p1 = at(t + h), m2 = at(t - h / 2), p2 = at(t + h / 2);
    auto first = [&](const Vec3& lo1, const Vec3& hi1, const Vec3& lo2, const Vec3& hi2) -> Vec3 {
        const Vec3 coarse = (hi1 - lo1) / (2.0 * h), fine = (hi2 - lo2) / h;
        return (4.0 * fine - coarse) / 3.0;
    };
    auto second = [&](const Vec3& lo1, const Vec3& mid, const Vec3& hi1, const Vec3& lo2, const Vec3& hi2) -> Vec3 {
        const Vec3 coarse = (hi1 - 2.0 * mid + lo1) / (h * h), fine = (hi2 - 2.0 * mid + lo2) / (0.25 * h * h);
        return (4.0 * fine - coarse) / 3.0;
    };
    const Vec3 x = c.x, xb = c.x_bar;
    const Vec3 x1 = first(m1.x, p1.x, m2.x, p2.x);
    const Vec3 x2 = second(m1.x, c.x, p1.x, m2.x, p2.x);
    const Vec3 b1 = first(m1.x_bar, p1.x_bar, m2.x_bar, p2.x_bar);
    const Vec3 b2 = second(m1.x_bar, c.x_bar, p1.x_bar, m2.x_bar, p2.x_bar);

    const double kappa = x1.norm();
    if (!(kappa >= tol.kappa_min)) {
        throw Error(ErrorKind::CylindricalPoint, "ruling speed below kappa_min (cylindrical point)");
    }
    InvariantSample s;
    s.t = t;
    s.kappa = kappa;
    s.tau = triple(x, x1, x2) / (kappa * kappa);
    s.kappa_bar = x1.dot(b1) / kappa;
    s.tau_bar = (triple(xb, x1, x2) + triple(x, b1, x2) + triple(x, x1, b2)) / (kappa * kappa) -
                2.0 * s.tau * s.kappa_bar / kappa;
    finish(s, std::sin(path.position(t).v), tol);
    return s;
}

double striction_cot(const InvariantSample& sample) {
    if (!sample.cot_sigma) {
        throw Error(ErrorKind::StrictionUndefined, "striction angle undefined on a developable sample");
    }
    return *sample.cot_sigma;
}

Vec3 directrix(const ParametricPath& path, const LiftField& field, double t) {
    const PathSample p = path.sample(t);
    auto [ub, vb] = field.evaluate(p.u, p.v);
    const double su = std::sin(p.u), cu = std::cos(p.u), sv = std::sin(p.v), cv = std::cos(p.v);
    return {-ub * cu * sv * cv - vb * su, -ub * su * sv * cv + vb * cu, ub * sv * sv};
}

Vec3 RuledPatch::ruling_at(double t) const {
    const PathSample p = path->sample(t);
    return rus_point(p.u, p.v);
}

namespace {

struct StrictionBase {
    Vec3 m, dm;
    double offset;
};

StrictionBase striction_from_curve(const DualCurvePoint& pt, const Tolerances& tol) {
    const Vec3& x = pt.point.x;
    const Vec3& xb = pt.point.x_bar;
    const Vec3& x1 = pt.d1.real;
    const Vec3& x2 = pt.d2.real;
    const Vec3& b1 = pt.d1.dual;
    const Vec3& b2 = pt.d2.dual;
    const double k2 = x1.squaredNorm();
    if (!(std::sqrt(k2) >= tol.kappa_min)) {
        throw Error(ErrorKind::CylindricalPoint, "ruling speed below kappa_min (cylindrical point)");
    }
    const Vec3 c = x.cross(xb);
    const Vec3 c1 = x1.cross(xb) + x.cross(b1);
    const Vec3 c2 = x2.cross(xb) + 2.0 * x1.cross(b1) + x.cross(b2);
    const double P = x1.dot(c1);
    const double dP = x2.dot(c1) + x1.dot(c2);
    const double dk2 = 2.0 * x1.dot(x2);
    const double q = P / k2;
    const double dq = (dP * k2 - P * dk2) / (k2 * k2);
    return {c - q * x, c1 - dq * x - q * x1, q};
}

} // namespace

StrictionData striction_point(const ParametricPath& path, const LiftField& field, double t, bool with_arclength,
                              const Tolerances& tol) {
    const StrictionBase base = striction_from_curve(dual_curve(path, field, t, tol), tol);
    StrictionData out{base.m, base.dm, 0.0, base.offset};
    if (with_arclength && t > 0.0) {
        auto speed = [&](double s) {
            InvariantSample inv = invariants_at(path, field, s, tol);
            return std::hypot(inv.tau_bar, inv.kappa_bar);
        };
        out.s = adaptive_gauss_kronrod(speed, 0.0, t).value;
    }
    return out;
}

SurfaceSample surface_sample(const ParametricPath& path, const LiftField& field, double t, double w,
                             const Tolerances& tol) {
    const DualCurvePoint pt = dual_curve(path, field, t, tol);
    const BlaschkeFrame frame = blaschke_frame(pt, tol);
    const InvariantSample inv = invariants_at(path, field, t, tol);
    const StrictionBase base = striction_from_curve(pt, tol);

    const double kappa = inv.kappa, kb = inv.kappa_bar, tau = inv.tau, tb = inv.tau_bar;
    const double wk = w * kappa;
    const double q = wk * wk + kb * kb;
    if (!(q > 1e-18)) {
        throw Error(ErrorKind::NormalUndefined, "surface normal undefined (central point of a developable)");
    }
    const double root = std::sqrt(q);

    const Vec3& x1 = frame.X1.real;
    const Vec3& x2 = frame.X2.real;
    const Vec3& x3 = frame.X3.real;

    // κ' analytically; κ̄' by central differences kept inside [0, 1].
    const double dkappa = pt.d1.real.dot(pt.d2.real) / kappa;
    constexpr double h = 1e-5;
    const double lo = std::max(0.0, t - h), hi = std::min(1.0, t + h);
    const double dkb =
        (invariants_at(path, field, hi, tol).kappa_bar - invariants_at(path, field, lo, tol).kappa_bar) / (hi - lo);

    SurfaceSample s;
    s.point = base.m + w * x1;
    s.r_t = tb * x1 + wk * x2 + kb * x3;
    s.r_w = x1;
    s.normal = (kb * x2 - wk * x3) / root;
    s.g11 = tb * tb + wk * wk + kb * kb;
    s.g12 = tb;
    s.g22 = 1.0;
    s.h11 = (kb * (kappa * tb + w * dkappa - kb * tau) - wk * (wk * tau + dkb)) / root;
    s.h12 = kb * kappa / root;
    s.h22 = 0.0;
    const double det_g = s.g11 * s.g22 - s.g12 * s.g12;
    s.gauss = -(kb * kb * kappa * kappa) / (q * q);
    s.mean = (s.h11 * s.g22 + s.g11 * s.h22 - 2.0 * s.h12 * s.g12) / (2.0 * det_g);
    return s;
}

namespace {

InvariantSample guarded_sample(const ParametricPath& path, const LiftField& field, double t, const Tolerances& tol) {
    try {
        return invariants_at(path, field, t, tol);
    } catch (const Error& e) {
        InvariantSample s;
        s.t = t;
        if (e.kind() == ErrorKind::CylindricalPoint) {
            const PathSample p = path.sample(t);
            s.kappa = std::hypot(p.du * std::sin(p.v), p.dv);
            s.flags = kCylindrical;
            if (std::abs(std::sin(p.v)) < tol.pole) s.flags |= kPole;
        } else {
            s.flags = kUndefined;
        }
        return s;
    }
}

double grid_t(int i, int samples) { return static_cast<double>(i) / static_cast<double>(samples - 1); }

void check_samples(int samples) {
    if (samples < 2) throw Error(ErrorKind::ParameterOutOfRange, "a profile needs at least two samples");
}

} // namespace

std::vector<InvariantSample> profile_serial(const ParametricPath& path, const LiftField& field, int samples,
                                            const Tolerances& tol) {
    check_samples(samples);
    std::vector<InvariantSample> out(static_cast<std::size_t>(samples));
    for (int i = 0; i < samples; ++i) out[static_cast<std::size_t>(i)] = guarded_sample(path, field, grid_t(i, samples), tol);
    return out;
}

std::vector<InvariantSample> profile(const ParametricPath& path, const LiftField& field, int samples,
                                     const Tolerances& tol) {
    check_samples(samples);
    std::vector<InvariantSample> out(static_cast<std::size_t>(samples));
#pragma omp parallel for schedule(static)
    for (int i = 0; i < samples; ++i) out[static_cast<std::size_t>(i)] = guarded_sample(path, field, grid_t(i, samples), tol);
    return out;
}

} // namespace ruledkit
