#pragma once

#include "ruledkit/tolerance.hpp"

#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace ruledkit {

/// A point of the chart rectangle [0, π] × [0, 2π] (radians).
struct DomainPoint {
    double u = 0.0;
    double v = 0.0;
    friend bool operator==(const DomainPoint&, const DomainPoint&) = default;
};

/// Planar Bernstein–Bézier curve p₀…pₙ in (u, v).
class BezierPath2 {
public:
    /// Throws DegreeTooLow for fewer than two control points.
    explicit BezierPath2(std::vector<DomainPoint> control_points);

    int degree() const { return static_cast<int>(points_.size()) - 1; }
    const std::vector<DomainPoint>& control_points() const { return points_; }

    /// de Casteljau evaluation; t outside [0,1] throws ParameterOutOfRange.
    DomainPoint eval(double t) const;

    /// Hodograph derivative of the given order (1 or 2).
    /// Throws DegreeTooLow when order > degree.
    DomainPoint derivative(double t, int order) const;

    /// Polynomial continuation to any real t (no range check).
    DomainPoint eval_unchecked(double t) const;

    bool is_closed(double tol) const;
    BezierPath2 elevated() const;
    BezierPath2 reversed() const;

private:
    std::vector<DomainPoint> points_;
};

struct ValidationReport {
    bool closed = false;
    bool c1 = false;
    double pole_proximity = 0.0;  ///< min over sampled t of the distance from v(t) to a multiple of π
    bool near_pole = false;       ///< |sin v| < tol.pole at some sample
    bool out_of_domain = false;   ///< a control point or sample leaves [0,π]×[0,2π]
    std::vector<std::string> warnings;
};

/// Closure (p₀ = pₙ), C¹ (area of pₙ₋₁, p₀, p₁ below tol.c1_area) and
/// domain/pole diagnostics. Never throws.
ValidationReport validate_closed_c1(const BezierPath2& path, const Tolerances& tol = tolerances(),
                                    int samples = 256);

struct PathSample {
    double t = 0.0;
    double u = 0.0, v = 0.0;
    double du = 0.0, dv = 0.0;
    double d2u = 0.0, d2v = 0.0;
};

/// Uniform access to (u(t), v(t)) and its first two derivatives.
class ParametricPath {
public:
    virtual ~ParametricPath() = default;

    /// t must lie in [0,1].
    virtual PathSample sample(double t) const = 0;

    /// (u, v) at any real t; used by finite-difference oracles near the ends.
    virtual DomainPoint position(double t) const = 0;

    /// Whether the path is declared periodic over [0,1]. Dual-part closure
    /// also depends on the lift field and is checked separately.
    virtual bool declared_closed() const = 0;

    virtual std::string describe() const = 0;
};

class BezierCurvePath final : public ParametricPath {
public:
    explicit BezierCurvePath(BezierPath2 path, Tolerances tol = tolerances())
        : path_(std::move(path)), tol_(tol) {}

    PathSample sample(double t) const override;
    DomainPoint position(double t) const override { return path_.eval_unchecked(t); }
    bool declared_closed() const override { return path_.is_closed(tol_.structural); }
    std::string describe() const override;

    const BezierPath2& bezier() const { return path_; }

private:
    BezierPath2 path_;
    Tolerances tol_;
};

/// A coordinate function with its first two derivatives.
struct Coordinate {
    std::function<double(double)> value;
    std::function<double(double)> first;
    std::function<double(double)> second;
};

class AnalyticPath final : public ParametricPath {
public:
    AnalyticPath(std::string name, Coordinate u, Coordinate v, bool closed)
        : name_(std::move(name)), u_(std::move(u)), v_(std::move(v)), closed_(closed) {}

    PathSample sample(double t) const override;
    DomainPoint position(double t) const override { return {u_.value(t), v_.value(t)}; }
    bool declared_closed() const override { return closed_; }
    std::string describe() const override { return name_; }

private:
    std::string name_;
    Coordinate u_, v_;
    bool closed_;
};

namespace paths {

/// u = 2πt, v = π/2.
std::shared_ptr<const ParametricPath> great_circle();
/// u = 2πt, v = v0.
std::shared_ptr<const ParametricPath> small_circle(double v0);
/// u = speed·t, v = π/2; speed 1 makes the ruling direction unit-speed.
std::shared_ptr<const ParametricPath> equator(double speed = 1.0);
/// u = v = t.
std::shared_ptr<const ParametricPath> diagonal();
/// Constant point (u0, v0); every sample is cylindrical.
std::shared_ptr<const ParametricPath> constant(double u0, double v0);
/// Look up one of the names above ("great-circle", "small-circle:V0",
/// "helicoid", "diagonal"); returns nullptr for unknown names.
std::shared_ptr<const ParametricPath> by_name(const std::string& name);

} // namespace paths

} // namespace ruledkit
