#include "ruledkit/liftfield.hpp"

#include <fmt/format.h>

namespace ruledkit {

using Jet = Dual<Dual<double>>;

LiftField LiftField::affine(double a1, double b1, double c1, double a2, double b2, double c2) {
    LiftField f;
    f.is_affine_ = true;
    f.coeffs_ = {a1, b1, c1, a2, b2, c2};
    return f;
}

LiftField LiftField::parse(std::string_view source) {
    std::size_t consumed = 0;
    expr::NodePtr first = expr::parse_prefix(source, consumed);
    if (consumed >= source.size() || source[consumed] != ',') {
        throw ParseError(consumed, "','",
                         fmt::format("parse error at position {}: expected ',' between the two lift expressions",
                                     consumed));
    }
    std::size_t second_start = consumed + 1;
    expr::NodePtr second = expr::parse(source.substr(second_start), second_start);
    LiftField f;
    f.is_affine_ = false;
    f.u_expr_ = std::move(first);
    f.v_expr_ = std::move(second);
    return f;
}

LiftField LiftField::from_expressions(std::string_view u_bar, std::string_view v_bar) {
    LiftField f;
    f.is_affine_ = false;
    f.u_expr_ = expr::parse(u_bar);
    f.v_expr_ = expr::parse(v_bar);
    return f;
}

LiftSample LiftField::eval_with_partials(double u, double v) const {
    // Jet seeded with direction a on ε₁ and b on ε₂: the ε₁ε₂ coefficient of
    // f is the mixed second partial along (a, b), the ε₁ part the first.
    auto seed = [&](bool u_first, bool u_second) {
        Jet ju{{u, u_first ? 1.0 : 0.0}, {u_second ? 1.0 : 0.0, 0.0}};
        Jet jv{{v, u_first ? 0.0 : 1.0}, {u_second ? 0.0 : 1.0, 0.0}};
        return evaluate(ju, jv);
    };
    auto [uu_a, uu_b] = seed(true, true);
    auto [uv_a, uv_b] = seed(true, false);
    auto [vv_a, vv_b] = seed(false, false);

    LiftSample s;
    s.u_bar = uu_a.real.real;
    s.v_bar = uu_b.real.real;
    s.u_bar_u = uu_a.real.dual;
    s.v_bar_u = uu_b.real.dual;
    s.u_bar_v = vv_a.real.dual;
    s.v_bar_v = vv_b.real.dual;
    s.u_bar_uu = uu_a.dual.dual;
    s.v_bar_uu = uu_b.dual.dual;
    s.u_bar_uv = uv_a.dual.dual;
    s.v_bar_uv = uv_b.dual.dual;
    s.u_bar_vv = vv_a.dual.dual;
    s.v_bar_vv = vv_b.dual.dual;
    return s;
}

std::string LiftField::to_string() const {
    if (is_affine_) {
        const auto& c = coeffs_;
        return fmt::format("{:.17g}*u + {:.17g}*v + {:.17g}, {:.17g}*u + {:.17g}*v + {:.17g}", c[0], c[1], c[2],
                           c[3], c[4], c[5]);
    }
    return expr::print(*u_expr_) + ", " + expr::print(*v_expr_);
}

} // namespace ruledkit
