#include "ruledkit/closedinv.hpp"

#include "ruledkit/ruledgeom.hpp"
#include "ruledkit/sphereline.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>

namespace ruledkit {

bool is_closed_motion(const ParametricPath& path, const LiftField& field, const Tolerances& tol) {
    if (const auto* bez = dynamic_cast<const BezierCurvePath*>(&path)) {
        return bez->bezier().is_closed(tol.structural) && dual_curve_closes(path, field, tol);
    }
    return path.declared_closed() && dual_curve_closes(path, field, tol);
}

namespace {

void require_closed(const ParametricPath& path, const LiftField& field, const Tolerances& tol) {
    if (!is_closed_motion(path, field, tol)) throw Error(ErrorKind::NotClosed, "curve not closed");
}

double integrate(const Integrand& f, const QuadratureConfig& cfg) {
    // The wrapped window is split at the seam so no panel straddles t = 0.
    double c = cfg.shift - std::floor(cfg.shift);
    auto run = [&](double a, double b) {
        if (a == b) return 0.0;
        if (cfg.scheme == QuadratureConfig::Scheme::GaussLegendre) {
            return gauss_legendre(f, a, b, cfg.panels, cfg.order).value;
        }
        return adaptive_gauss_kronrod(f, a, b, cfg.rel_tol, cfg.abs_tol, cfg.max_depth).value;
    };
    if (c == 0.0) return run(0.0, 1.0);
    return run(c, 1.0) + run(0.0, c);
}

double orient(double value, Convention convention) {
    return convention == Convention::CoordinateForms ? value : -value;
}

} // namespace

double pitch(const ParametricPath& path, const LiftField& field, const QuadratureConfig& cfg, const Tolerances& tol) {
    require_closed(path, field, tol);
    auto f = [&](double t) {
        const PathSample p = path.sample(t);
        auto [ub, vb] = field.evaluate(p.u, p.v);
        return std::sin(p.v) * (ub * p.dv - vb * p.du);
    };
    return orient(integrate(f, cfg), cfg.convention);
}

double angle_of_pitch(const ParametricPath& path, const LiftField& field, const QuadratureConfig& cfg,
                      const Tolerances& tol) {
    require_closed(path, field, tol);
    auto f = [&](double t) {
        const PathSample p = path.sample(t);
        if (!(std::hypot(p.du * std::sin(p.v), p.dv) >= tol.kappa_min)) {
            throw Error(ErrorKind::CylindricalPoint,
                        fmt::format("cylindrical point at t = {} inside the integration period", t));
        }
        return -coordinate_tau(p);
    };
    return orient(integrate(f, cfg), cfg.convention);
}

double striction_arclength(const ParametricPath& path, const LiftField& field, const QuadratureConfig& cfg,
                           const Tolerances& tol) {
    require_closed(path, field, tol);
    auto f = [&](double t) {
        InvariantSample s = invariants_at(path, field, t, tol);
        return std::hypot(s.tau_bar, s.kappa_bar);
    };
    return integrate(f, cfg);
}

IntegralInvariants integral_invariants(const ParametricPath& path, const LiftField& field, Convention convention,
                                       double agreement, const Tolerances& tol) {
    QuadratureConfig gl;
    gl.convention = convention;
    QuadratureConfig adaptive = gl;
    adaptive.scheme = QuadratureConfig::Scheme::Adaptive;

    IntegralInvariants out;
    auto both = [&](auto fn, const char* name) {
        const double a = fn(path, field, gl, tol);
        const double b = fn(path, field, adaptive, tol);
        const double diff = std::abs(a - b);
        if (!(diff <= agreement)) {
            throw Error(ErrorKind::QuadratureNoConvergence,
                        fmt::format("{}: quadrature schemes disagree by {:.3e} (limit {:.1e})", name, diff, agreement));
        }
        out.est_error = std::max(out.est_error, diff);
        return a;
    };
    out.pitch = both(pitch, "pitch");
    out.angle_of_pitch = both(angle_of_pitch, "angle of pitch");
    out.striction_length = both(striction_arclength, "striction length");
    return out;
}

} // namespace ruledkit
