#include "ruledkit/bezier.hpp"

#include "ruledkit/error.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <limits>

namespace ruledkit {

namespace {

void check_parameter(double t) {
    if (!(t >= 0.0 && t <= 1.0)) {
        throw Error(ErrorKind::ParameterOutOfRange, fmt::format("parameter t = {} outside [0, 1]", t));
    }
}

DomainPoint de_casteljau(std::vector<DomainPoint> pts, double t) {
    const double s = 1.0 - t;
    for (std::size_t level = pts.size() - 1; level > 0; --level) {
        for (std::size_t i = 0; i < level; ++i) {
            pts[i].u = s * pts[i].u + t * pts[i + 1].u;
            pts[i].v = s * pts[i].v + t * pts[i + 1].v;
        }
    }
    return pts.front();
}

// Forward differences Δᵏpᵢ scaled by n(n-1)…(n-k+1).
std::vector<DomainPoint> hodograph(const std::vector<DomainPoint>& pts, int order) {
    std::vector<DomainPoint> d = pts;
    for (int k = 0; k < order; ++k) {
        const double n = static_cast<double>(d.size() - 1);
        for (std::size_t i = 0; i + 1 < d.size(); ++i) {
            d[i].u = n * (d[i + 1].u - d[i].u);
            d[i].v = n * (d[i + 1].v - d[i].v);
        }
        d.pop_back();
    }
    return d;
}

} // namespace

BezierPath2::BezierPath2(std::vector<DomainPoint> control_points) : points_(std::move(control_points)) {
    if (points_.size() < 2) {
        throw Error(ErrorKind::DegreeTooLow, "a Bezier path needs at least two control points");
    }
}

DomainPoint BezierPath2::eval(double t) const {
    check_parameter(t);
    if (t == 0.0) return points_.front();
    if (t == 1.0) return points_.back();
    return de_casteljau(points_, t);
}

DomainPoint BezierPath2::eval_unchecked(double t) const { return de_casteljau(points_, t); }

DomainPoint BezierPath2::derivative(double t, int order) const {
    check_parameter(t);
    if (order < 1 || order > 2) {
        throw Error(ErrorKind::DegreeTooLow, fmt::format("derivative order {} not supported", order));
    }
    if (order > degree()) {
        throw Error(ErrorKind::DegreeTooLow,
                    fmt::format("derivative of order {} needs degree >= {}, have {}", order, order, degree()));
    }
    auto d = hodograph(points_, order);
    return de_casteljau(std::move(d), t);
}

bool BezierPath2::is_closed(double tol) const {
    return std::abs(points_.front().u - points_.back().u) <= tol &&
           std::abs(points_.front().v - points_.back().v) <= tol;
}

BezierPath2 BezierPath2::elevated() const {
    const std::size_t n = points_.size() - 1;
    std::vector<DomainPoint> q(n + 2);
    q.front() = points_.front();
    q.back() = points_.back();
    for (std::size_t i = 1; i <= n; ++i) {
        const double a = static_cast<double>(i) / static_cast<double>(n + 1);
        q[i].u = a * points_[i - 1].u + (1.0 - a) * points_[i].u;
        q[i].v = a * points_[i - 1].v + (1.0 - a) * points_[i].v;
    }
    return BezierPath2(std::move(q));
}

BezierPath2 BezierPath2::reversed() const {
    std::vector<DomainPoint> q(points_.rbegin(), points_.rend());
    return BezierPath2(std::move(q));
}

ValidationReport validate_closed_c1(const BezierPath2& path, const Tolerances& tol, int samples) {
    ValidationReport report;
    const auto& p = path.control_points();
    report.closed = path.is_closed(tol.structural);

    if (report.closed && path.degree() >= 2) {
        const DomainPoint& prev = p[p.size() - 2];
        const DomainPoint& p0 = p.front();
        const DomainPoint& p1 = p[1];
        double area = 0.5 * std::abs((p1.u - p0.u) * (prev.v - p0.v) - (prev.u - p0.u) * (p1.v - p0.v));
        report.c1 = area < tol.c1_area;
    }
    if (!report.closed) report.warnings.emplace_back("curve not closed");
    else if (!report.c1) report.warnings.emplace_back("closed curve is not C1 at the seam");

    auto outside = [](const DomainPoint& q) {
        return q.u < 0.0 || q.u > M_PI || q.v < 0.0 || q.v > 2.0 * M_PI;
    };
    report.out_of_domain = std::any_of(p.begin(), p.end(), outside);

    samples = std::max(samples, 2);
    double proximity = std::numeric_limits<double>::infinity();
    for (int i = 0; i < samples; ++i) {
        const double t = static_cast<double>(i) / (samples - 1);
        DomainPoint q = path.eval(t);
        report.out_of_domain = report.out_of_domain || outside(q);
        const double k = std::round(q.v / M_PI);
        proximity = std::min(proximity, std::abs(q.v - k * M_PI));
        if (std::abs(std::sin(q.v)) < tol.pole) report.near_pole = true;
    }
    report.pole_proximity = proximity;
    if (report.out_of_domain) report.warnings.emplace_back("curve leaves the domain rectangle [0,pi]x[0,2pi]");
    if (report.near_pole) report.warnings.emplace_back("curve passes a pole of the sphere chart");
    return report;
}

PathSample BezierCurvePath::sample(double t) const {
    DomainPoint p = path_.eval(t);
    DomainPoint d1 = path_.degree() >= 1 ? path_.derivative(t, 1) : DomainPoint{};
    DomainPoint d2 = path_.degree() >= 2 ? path_.derivative(t, 2) : DomainPoint{};
    return {t, p.u, p.v, d1.u, d1.v, d2.u, d2.v};
}

std::string BezierCurvePath::describe() const { return fmt::format("bezier(degree {})", path_.degree()); }

PathSample AnalyticPath::sample(double t) const {
    check_parameter(t);
    return {t, u_.value(t), v_.value(t), u_.first(t), v_.first(t), u_.second(t), v_.second(t)};
}

namespace paths {

namespace {

Coordinate linear(double offset, double slope) {
    return {[=](double t) { return offset + slope * t; }, [=](double) { return slope; },
            [](double) { return 0.0; }};
}

} // namespace

std::shared_ptr<const ParametricPath> great_circle() { return small_circle(M_PI / 2.0); }

std::shared_ptr<const ParametricPath> small_circle(double v0) {
    return std::make_shared<AnalyticPath>(fmt::format("small-circle:{}", v0), linear(0.0, 2.0 * M_PI),
                                          linear(v0, 0.0), true);
}

std::shared_ptr<const ParametricPath> equator(double speed) {
    return std::make_shared<AnalyticPath>(fmt::format("equator:{}", speed), linear(0.0, speed),
                                          linear(M_PI / 2.0, 0.0), false);
}

std::shared_ptr<const ParametricPath> diagonal() {
    return std::make_shared<AnalyticPath>("diagonal", linear(0.0, 1.0), linear(0.0, 1.0), false);
}

std::shared_ptr<const ParametricPath> constant(double u0, double v0) {
    return std::make_shared<AnalyticPath>("constant", linear(u0, 0.0), linear(v0, 0.0), true);
}

std::shared_ptr<const ParametricPath> by_name(const std::string& name) {
    if (name == "great-circle") return great_circle();
    if (name == "helicoid") return equator(1.0);
    if (name == "diagonal") return diagonal();
    const std::string prefix = "small-circle:";
    if (name.rfind(prefix, 0) == 0) {
        try {
            std::size_t used = 0;
            double v0 = std::stod(name.substr(prefix.size()), &used);
            if (used == name.size() - prefix.size()) return small_circle(v0);
        } catch (const std::exception&) {
        }
    }
    return nullptr;
}

} // namespace paths

} // namespace ruledkit
