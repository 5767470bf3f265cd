#pragma once

#include <functional>

namespace ruledkit {

struct QuadratureResult {
    double value = 0.0;
    double error = 0.0;  ///< scheme-internal error estimate
    int evaluations = 0;
};

using Integrand = std::function<double(double)>;

/// Composite Gauss–Legendre over `panels` equal panels of `order` nodes.
/// Panel sums are accumulated in panel order. The error estimate is the
/// difference to the (order-1)-point rule on the same panels.
QuadratureResult gauss_legendre_serial(const Integrand& f, double a, double b, int panels = 64, int order = 10);

/// Same rule with panels evaluated in parallel; the per-panel results are
/// summed in panel order, so the value is bitwise identical to the serial one.
QuadratureResult gauss_legendre(const Integrand& f, double a, double b, int panels = 64, int order = 10);

/// Globally adaptive bisection with an embedded Gauss–Kronrod 7/15 pair:
/// the panel with the largest error estimate is split until the summed
/// estimate is below max(abs_tol, rel_tol·|I|). Throws
/// QuadratureNoConvergence when a panel needs more than max_depth
/// bisections or the integrand is non-finite.
QuadratureResult adaptive_gauss_kronrod(const Integrand& f, double a, double b, double rel_tol = 1e-11,
                                        double abs_tol = 1e-13, int max_depth = 20);

/// Nodes and weights of the n-point Gauss–Legendre rule on [-1, 1].
void gauss_legendre_rule(int n, double* nodes, double* weights);

} // namespace ruledkit
