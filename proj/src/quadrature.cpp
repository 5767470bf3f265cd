#include "ruledkit/quadrature.hpp"

#include "ruledkit/error.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fmt/format.h>
#include <vector>

namespace ruledkit {

void gauss_legendre_rule(int n, double* nodes, double* weights) {
    // Newton iteration on P_n from the Chebyshev-like initial guess.
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = pk;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= n; ++k) {
            double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = pk;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        double w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
}

namespace {

struct PanelRule {
    std::vector<double> x, w, x_low, w_low;

    PanelRule(int order) : x(order), w(order), x_low(order - 1), w_low(order - 1) {
        gauss_legendre_rule(order, x.data(), w.data());
        gauss_legendre_rule(order - 1, x_low.data(), w_low.data());
    }

    std::array<double, 2> integrate(const Integrand& f, double lo, double hi) const {
        const double half = 0.5 * (hi - lo);
        const double mid = 0.5 * (hi + lo);
        double high = 0.0, low = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) high += w[i] * f(mid + half * x[i]);
        for (std::size_t i = 0; i < x_low.size(); ++i) low += w_low[i] * f(mid + half * x_low[i]);
        return {half * high, half * low};
    }
};

void check_rule(int panels, int order) {
    if (panels < 1 || order < 2) {
        throw Error(ErrorKind::QuadratureNoConvergence,
                    fmt::format("invalid Gauss-Legendre configuration: {} panels of order {}", panels, order));
    }
}

QuadratureResult accumulate(const std::vector<std::array<double, 2>>& parts, int order) {
    QuadratureResult r;
    double low = 0.0;
    for (const auto& p : parts) {
        r.value += p[0];
        low += p[1];
    }
    r.error = std::abs(r.value - low);
    r.evaluations = static_cast<int>(parts.size()) * (2 * order - 1);
    return r;
}

} // namespace

QuadratureResult gauss_legendre_serial(const Integrand& f, double a, double b, int panels, int order) {
    check_rule(panels, order);
    PanelRule rule(order);
    const double h = (b - a) / panels;
    std::vector<std::array<double, 2>> parts(static_cast<std::size_t>(panels));
    for (int i = 0; i < panels; ++i) {
        const double lo = a + i * h;
        const double hi = (i + 1 == panels) ? b : a + (i + 1) * h;
        parts[static_cast<std::size_t>(i)] = rule.integrate(f, lo, hi);
    }
    return accumulate(parts, order);
}

QuadratureResult gauss_legendre(const Integrand& f, double a, double b, int panels, int order) {
    check_rule(panels, order);
    PanelRule rule(order);
    const double h = (b - a) / panels;
    std::vector<std::array<double, 2>> parts(static_cast<std::size_t>(panels));
    // Exceptions cannot cross the parallel region; capture the first one.
    std::exception_ptr failure;
#pragma omp parallel for schedule(static)
    for (int i = 0; i < panels; ++i) {
        try {
            const double lo = a + i * h;
            const double hi = (i + 1 == panels) ? b : a + (i + 1) * h;
            parts[static_cast<std::size_t>(i)] = rule.integrate(f, lo, hi);
        } catch (...) {
#pragma omp critical(ruledkit_quadrature_failure)
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return accumulate(parts, order);
}

namespace {

// Kronrod 15-point nodes (non-negative half) and weights, with the
// embedded 7-point Gauss weights on the odd-indexed nodes.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                                       0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct KronrodEstimate {
    double kronrod;
    double gauss;
};

KronrodEstimate gauss_kronrod_15(const Integrand& f, double lo, double hi) {
    const double half = 0.5 * (hi - lo);
    const double mid = 0.5 * (hi + lo);
    const double fc = f(mid);
    double resk = fc * kWgk[7];
    double resg = fc * kWg[3];
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kXgk[static_cast<std::size_t>(j)];
        const double fsum = f(mid - dx) + f(mid + dx);
        resk += kWgk[static_cast<std::size_t>(j)] * fsum;
        if (j % 2 == 1) resg += kWg[static_cast<std::size_t>(j / 2)] * fsum;
    }
    return {resk * half, resg * half};
}

struct Panel {
    double lo, hi;
    KronrodEstimate est;
    double err;
    int depth;
};

} // namespace

QuadratureResult adaptive_gauss_kronrod(const Integrand& f, double a, double b, double rel_tol, double abs_tol,
                                        int max_depth) {
    if (a == b) return {};
    auto make = [&](double lo, double hi, int depth) {
        KronrodEstimate est = gauss_kronrod_15(f, lo, hi);
        const double err = std::abs(est.kronrod - est.gauss);
        if (!std::isfinite(est.kronrod) || !std::isfinite(err)) {
            throw Error(ErrorKind::QuadratureNoConvergence, fmt::format("non-finite integrand on [{}, {}]", lo, hi));
        }
        return Panel{lo, hi, est, err, depth};
    };
    // Max-heap on error; ties broken by position so the run is reproducible.
    auto worse = [](const Panel& x, const Panel& y) { return x.err < y.err || (x.err == y.err && x.lo > y.lo); };
    std::vector<Panel> heap{make(a, b, 0)};
    int evaluations = 15;
    auto totals = [&] {
        double value = 0.0, error = 0.0;
        for (const auto& p : heap) {
            value += p.est.kronrod;
            error += p.err;
        }
        return std::pair{value, error};
    };
    for (;;) {
        auto [value, error] = totals();
        if (error <= std::max(abs_tol, rel_tol * std::abs(value))) break;
        std::pop_heap(heap.begin(), heap.end(), worse);
        const Panel worst = heap.back();
        heap.pop_back();
        if (worst.depth >= max_depth) {
            throw Error(ErrorKind::QuadratureNoConvergence,
                        fmt::format("adaptive quadrature did not converge on [{}, {}] within depth {}", worst.lo,
                                    worst.hi, max_depth));
        }
        const double mid = 0.5 * (worst.lo + worst.hi);
        for (Panel half : {make(worst.lo, mid, worst.depth + 1), make(mid, worst.hi, worst.depth + 1)}) {
            heap.push_back(half);
            std::push_heap(heap.begin(), heap.end(), worse);
        }
        evaluations += 30;
    }
    // Fixed left-to-right summation order for the reported value.
    std::sort(heap.begin(), heap.end(), [](const Panel& x, const Panel& y) { return x.lo < y.lo; });
    QuadratureResult result;
    for (const auto& p : heap) {
        result.value += p.est.kronrod;
        result.error += p.err;
    }
    result.evaluations = evaluations;
    return result;
}

} // namespace ruledkit
