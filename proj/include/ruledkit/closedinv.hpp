#pragma once

#include "ruledkit/bezier.hpp"
#include "ruledkit/liftfield.hpp"
#include "ruledkit/quadrature.hpp"

namespace ruledkit {

/// Sign convention for the two integral invariants.
enum class Convention {
    /// l = ∮ sin v (ū v' − v̄ u') dt,  λ = −∮ τ dt.
    CoordinateForms,
    /// l = −∮ ⟨c', x⟩ dt,  λ = ∮ ⟨x₂', x₃⟩ dt; both are the negatives of the above.
    FrameForms,
};

struct QuadratureConfig {
    enum class Scheme { GaussLegendre, Adaptive };
    Scheme scheme = Scheme::GaussLegendre;
    int panels = 64;
    int order = 10;
    double rel_tol = 1e-11;
    double abs_tol = 1e-13;
    int max_depth = 20;
    /// Integrate over [shift, 1 + shift] wrapped into [0, 1].
    double shift = 0.0;
    Convention convention = Convention::CoordinateForms;
};

/// Pitch l. Throws NotClosed, QuadratureNoConvergence.
double pitch(const ParametricPath& path, const LiftField& field, const QuadratureConfig& cfg = {},
             const Tolerances& tol = tolerances());

/// Angle of pitch λ. Throws NotClosed, CylindricalPoint, QuadratureNoConvergence.
double angle_of_pitch(const ParametricPath& path, const LiftField& field, const QuadratureConfig& cfg = {},
                      const Tolerances& tol = tolerances());

/// Striction curve length ∮ √(τ̄² + κ̄²) dt.
double striction_arclength(const ParametricPath& path, const LiftField& field, const QuadratureConfig& cfg = {},
                           const Tolerances& tol = tolerances());

struct IntegralInvariants {
    double pitch = 0.0;
    double angle_of_pitch = 0.0;
    double striction_length = 0.0;
    /// Largest disagreement between the Gauss–Legendre and adaptive schemes.
    double est_error = 0.0;
};

/// All three invariants, each by both schemes. The Gauss–Legendre values
/// are reported; a disagreement above `agreement` throws
/// QuadratureNoConvergence.
IntegralInvariants integral_invariants(const ParametricPath& path, const LiftField& field,
                                       Convention convention = Convention::CoordinateForms,
                                       double agreement = 1e-8, const Tolerances& tol = tolerances());

/// Whether path and field describe a closed motion: Bézier nets need
/// p₀ = pₙ, other paths X(0) = X(1).
bool is_closed_motion(const ParametricPath& path, const LiftField& field, const Tolerances& tol = tolerances());

} // namespace ruledkit
