#pragma once

/**
 * Dual numbers a + εā with ε² = 0.
 *
 * `Dual<T>` is generic over its coefficient type so that nesting
 * (`Dual<Dual<double>>`) yields second-order jets: seeding both ε-parts of
 * an input with a direction and the ε₁ε₂ part with a second derivative
 * propagates values, first and second derivatives through any expression
 * built from the operations below.
 */

#include "ruledkit/error.hpp"
#include "ruledkit/tolerance.hpp"

#include <cmath>
#include <type_traits>

namespace ruledkit {

template <typename T>
struct Dual {
    T real{};
    T dual{};

    constexpr Dual() = default;
    constexpr Dual(T r) : real(r), dual{} {}  // NOLINT: scalars promote implicitly
    constexpr Dual(T r, T d) : real(r), dual(d) {}

    /// Independent variable: real part x, unit dual part.
    static constexpr Dual variable(T x) { return {x, T(1)}; }

    friend constexpr bool operator==(const Dual&, const Dual&) = default;
};

using DualScalar = Dual<double>;

template <typename T>
struct is_dual : std::false_type {};
template <typename T>
struct is_dual<Dual<T>> : std::true_type {};

/// Innermost real coefficient of a possibly nested dual number.
inline constexpr double scalar_part(double x) { return x; }
template <typename T>
constexpr double scalar_part(const Dual<T>& x) { return scalar_part(x.real); }

template <typename T>
constexpr Dual<T> operator+(const Dual<T>& a, const Dual<T>& b) { return {a.real + b.real, a.dual + b.dual}; }
template <typename T>
constexpr Dual<T> operator-(const Dual<T>& a, const Dual<T>& b) { return {a.real - b.real, a.dual - b.dual}; }
template <typename T>
constexpr Dual<T> operator-(const Dual<T>& a) { return {-a.real, -a.dual}; }
template <typename T>
constexpr Dual<T> operator*(const Dual<T>& a, const Dual<T>& b) {
    return {a.real * b.real, a.dual * b.real + a.real * b.dual};
}

/// Requires |real(b)| > kDivisionGuard; dual numbers with zero real part
/// have no inverse.
template <typename T>
Dual<T> operator/(const Dual<T>& a, const Dual<T>& b) {
    if (!(std::abs(scalar_part(b)) > kDivisionGuard)) {
        throw Error(ErrorKind::DivisionByZero, "dual division by a number with zero real part");
    }
    T inv = T(1) / b.real;
    return {a.real * inv, (a.dual * b.real - a.real * b.dual) * inv * inv};
}

// Mixed forms with a plain double, valid at every nesting level.
template <typename T> constexpr Dual<T> operator+(const Dual<T>& a, double b) { return {a.real + b, a.dual}; }
template <typename T> constexpr Dual<T> operator+(double a, const Dual<T>& b) { return {a + b.real, b.dual}; }
template <typename T> constexpr Dual<T> operator-(const Dual<T>& a, double b) { return {a.real - b, a.dual}; }
template <typename T> constexpr Dual<T> operator-(double a, const Dual<T>& b) { return {a - b.real, -b.dual}; }
template <typename T> constexpr Dual<T> operator*(const Dual<T>& a, double b) { return {a.real * b, a.dual * b}; }
template <typename T> constexpr Dual<T> operator*(double a, const Dual<T>& b) { return {a * b.real, a * b.dual}; }
template <typename T> Dual<T> operator/(const Dual<T>& a, double b) { return a / Dual<T>(T(b)); }
template <typename T> Dual<T> operator/(double a, const Dual<T>& b) { return Dual<T>(T(a)) / b; }

template <typename T> Dual<T>& operator+=(Dual<T>& a, const Dual<T>& b) { return a = a + b; }
template <typename T> Dual<T>& operator-=(Dual<T>& a, const Dual<T>& b) { return a = a - b; }
template <typename T> Dual<T>& operator*=(Dual<T>& a, const Dual<T>& b) { return a = a * b; }

/// f(x + εx̄) = f(x) + εx̄ f′(x).
template <typename T, typename F, typename DF>
Dual<T> lift_fn(F&& f, DF&& df, const Dual<T>& x) {
    return {f(x.real), x.dual * df(x.real)};
}

// Elementary functions; each is lift_fn with the matching derivative and
// recurses through nested coefficient types via ADL.
using std::cos;
using std::exp;
using std::log;
using std::sin;
using std::sqrt;

template <typename T>
Dual<T> sin(const Dual<T>& x) { return {sin(x.real), x.dual * cos(x.real)}; }
template <typename T>
Dual<T> cos(const Dual<T>& x) { return {cos(x.real), -(x.dual * sin(x.real))}; }
template <typename T>
Dual<T> exp(const Dual<T>& x) {
    T e = exp(x.real);
    return {e, x.dual * e};
}
template <typename T>
Dual<T> log(const Dual<T>& x) {
    if (!(scalar_part(x) > 0.0)) throw Error(ErrorKind::Domain, "log of a non-positive number");
    return {log(x.real), x.dual / x.real};
}
template <typename T>
Dual<T> sqrt(const Dual<T>& x) {
    if (!(scalar_part(x) > kDivisionGuard)) {
        throw Error(ErrorKind::Domain, "dual sqrt needs a positive real part");
    }
    T r = sqrt(x.real);
    return {r, x.dual / (T(2) * r)};
}

/// Integer power by repeated squaring; total for n >= 0.
template <typename T>
T ipow(T base, long long n) {
    bool invert = n < 0;
    unsigned long long e = invert ? static_cast<unsigned long long>(-n) : static_cast<unsigned long long>(n);
    T result(1.0);
    while (e) {
        if (e & 1u) result = result * base;
        base = base * base;
        e >>= 1u;
    }
    if (invert) {
        if constexpr (std::is_same_v<T, double>) {
            if (!(std::abs(result) > kDivisionGuard)) {
                throw Error(ErrorKind::Domain, "negative power of zero");
            }
            return 1.0 / result;
        } else {
            return T(1.0) / result;
        }
    }
    return result;
}

} // namespace ruledkit
