#pragma once

#include "ruledkit/bezier.hpp"
#include "ruledkit/liftfield.hpp"
#include "ruledkit/sphereline.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace ruledkit {

enum SampleFlag : unsigned {
    kDevelopable = 1u << 0,  ///< κ̄ ≈ 0: zero distribution parameter, striction angle undefined
    kCylindrical = 1u << 1,  ///< κ ≈ 0: Blaschke frame undefined
    kPole = 1u << 2,         ///< |sin v| below tol.pole
    kUndefined = 1u << 3,    ///< lift field not evaluable here
};

/// "developable|pole" style rendering; empty for no flags.
std::string flags_to_string(unsigned flags);
unsigned flags_from_string(const std::string& text);

/// Real and dual parts of the dual curvature and torsion at one t, the
/// distribution parameter δ = κ̄/κ and the striction cotangent τ̄/κ̄.
struct InvariantSample {
    double t = 0.0;
    double kappa = 0.0;
    double kappa_bar = 0.0;
    double tau = 0.0;
    double tau_bar = 0.0;
    double delta = 0.0;
    std::optional<double> cot_sigma;  ///< empty on developable samples
    unsigned flags = 0;
};

/// Invariants from the coordinate functions u(t), v(t), ū, v̄ and the field
/// partials. Throws CylindricalPoint when κ < tol.kappa_min.
InvariantSample invariants_at(const ParametricPath& path, const LiftField& field, double t,
                              const Tolerances& tol = tolerances());

/// Independent computation from the ruling x(t) and moment x̄(t) alone,
/// differentiated by central differences at steps h and h/2 combined by
/// Richardson extrapolation (error O(h⁴)). Test oracle.
InvariantSample frame_invariants_oracle(const ParametricPath& path, const LiftField& field, double t,
                                        double h = 1e-3, const Tolerances& tol = tolerances());

/// cot σ; throws StrictionUndefined on developable samples.
double striction_cot(const InvariantSample& sample);

/// Integrand of the pitch in coordinates, sin v (ū v' − v̄ u'). Equals
/// ⟨c', x⟩ for the foot point c = x × x̄, and τ̄ up to a total derivative.
double pitch_density(const PathSample& p, const LiftSample& lift);

/// Dual torsion real part in coordinates (no κ_min check; needs κ > 0).
double coordinate_tau(const PathSample& p);

/// Directrix a(t) = x × x̄ written in coordinates.
Vec3 directrix(const ParametricPath& path, const LiftField& field, double t);

struct StrictionData {
    Vec3 m = Vec3::Zero();      ///< striction point
    Vec3 dm_dt = Vec3::Zero();  ///< its parameter derivative
    double s = 0.0;             ///< striction arc length from t = 0
    double offset = 0.0;        ///< m = a − offset·x
};

/// Striction point m = c − (⟨x', c'⟩/‖x'‖²) x and its derivative.
/// With `with_arclength`, also integrates √(τ̄² + κ̄²) over [0, t].
StrictionData striction_point(const ParametricPath& path, const LiftField& field, double t,
                              bool with_arclength = true, const Tolerances& tol = tolerances());

struct SurfaceSample {
    Vec3 point = Vec3::Zero();
    Vec3 normal = Vec3::Zero();
    Vec3 r_t = Vec3::Zero();
    Vec3 r_w = Vec3::Zero();
    double g11 = 0.0, g12 = 0.0, g22 = 0.0;
    double h11 = 0.0, h12 = 0.0, h22 = 0.0;
    double gauss = 0.0;
    double mean = 0.0;
};

/// Surface point R = m + w·x₁ in the striction-based chart with normal,
/// both fundamental forms, Gauss and mean curvature. Throws
/// NormalUndefined when (wκ)² + κ̄² <= 1e-18.
SurfaceSample surface_sample(const ParametricPath& path, const LiftField& field, double t, double w,
                             const Tolerances& tol = tolerances());

/// One closed or open patch R(t, w) = a(t) + w·x(t), w ∈ [w_min, w_max].
struct RuledPatch {
    std::shared_ptr<const ParametricPath> path;
    LiftField field = LiftField::zero();
    double w_min = -1.0;
    double w_max = 1.0;

    Vec3 directrix_at(double t) const { return directrix(*path, field, t); }
    Vec3 ruling_at(double t) const;
    Vec3 point(double t, double w) const { return directrix_at(t) + w * ruling_at(t); }
};

/// Uniform t-grid of `samples` >= 2 points over [0, 1]; failing samples
/// carry flags instead of aborting. Parallel over t.
std::vector<InvariantSample> profile(const ParametricPath& path, const LiftField& field, int samples,
                                     const Tolerances& tol = tolerances());

/// Serial reference for `profile`; results are bitwise identical.
std::vector<InvariantSample> profile_serial(const ParametricPath& path, const LiftField& field, int samples,
                                            const Tolerances& tol = tolerances());

} // namespace ruledkit
