#pragma once

#include <string>
#include <string_view>

namespace ruledkit {

/// Every comparison threshold used across the library.
struct Tolerances {
    double structural = 1e-12;  ///< unit length, Plücker orthogonality, closure
    double numerical = 1e-9;    ///< identities after floating-point pipelines
    double kappa_min = 1e-8;    ///< below this the ruling speed is treated as zero
    double pole = 1e-6;         ///< |sin v| below this flags a chart pole
    double c1_area = 1e-10;     ///< triangle area threshold for the C1 collinearity test
    double developable = 1e-9;  ///< |kappa_bar| below this marks a developable sample
};

/// Divisor magnitude below which dual division refuses to proceed.
inline constexpr double kDivisionGuard = 1e-12;

/// Parse "key=value,key=value" (or a bare number, which sets `numerical`).
/// Unknown keys and malformed numbers raise ParseError.
Tolerances parse_tolerances(std::string_view text, Tolerances base = {});

/// Process-wide tolerances: defaults overridden once by the RULEDKIT_TOL
/// environment variable on first use.
const Tolerances& tolerances();

std::string describe(const Tolerances& tol);

} // namespace ruledkit
