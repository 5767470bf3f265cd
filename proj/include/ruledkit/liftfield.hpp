#pragma once

#include "ruledkit/dual.hpp"
#include "ruledkit/expr.hpp"

#include <array>
#include <string>
#include <string_view>
#include <utility>

namespace ruledkit {

/// ū, v̄ and their partial derivatives at one (u, v).
struct LiftSample {
    double u_bar = 0.0, v_bar = 0.0;
    double u_bar_u = 0.0, u_bar_v = 0.0;
    double v_bar_u = 0.0, v_bar_v = 0.0;
    // Second partials; needed for the dual part of X'' and for τ̄.
    double u_bar_uu = 0.0, u_bar_uv = 0.0, u_bar_vv = 0.0;
    double v_bar_uu = 0.0, v_bar_uv = 0.0, v_bar_vv = 0.0;
};

/// Dual-part fields ū(u, v), v̄(u, v). Either an affine pair or two parsed
/// expressions; immutable and cheap to copy.
class LiftField {
public:
    /// ū = a1·u + b1·v + c1, v̄ = a2·u + b2·v + c2.
    static LiftField affine(double a1, double b1, double c1, double a2, double b2, double c2);
    static LiftField zero() { return affine(0, 0, 0, 0, 0, 0); }

    /// "EXPR , EXPR"; throws ParseError with a position into `source`.
    static LiftField parse(std::string_view source);
    static LiftField from_expressions(std::string_view u_bar, std::string_view v_bar);

    template <typename T>
    std::pair<T, T> evaluate(const T& u, const T& v) const {
        if (is_affine_) {
            const auto& c = coeffs_;
            return {u * c[0] + v * c[1] + T(c[2]), u * c[3] + v * c[4] + T(c[5])};
        }
        return {expr::evaluate(*u_expr_, u, v), expr::evaluate(*v_expr_, u, v)};
    }

    /// Values and partials by forward-mode differentiation (nested duals
    /// seeded on u/u, u/v and v/v). Throws Error(Domain) where undefined.
    LiftSample eval_with_partials(double u, double v) const;

    bool is_affine() const { return is_affine_; }
    /// "EXPR , EXPR" form that parses back to the same field.
    std::string to_string() const;
    const expr::Node* u_bar_expression() const { return u_expr_.get(); }
    const expr::Node* v_bar_expression() const { return v_expr_.get(); }

private:
    LiftField() = default;

    bool is_affine_ = true;
    std::array<double, 6> coeffs_{};
    expr::NodePtr u_expr_;
    expr::NodePtr v_expr_;
};

} // namespace ruledkit
