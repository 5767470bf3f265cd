#pragma once

// Tiny infix expression language over the chart coordinates u and v:
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' unary)?          (right associative)
//   primary := number | 'u' | 'v' | 'pi' | ('sin'|'cos'|'exp') '(' expr ')' | '(' expr ')'
// Evaluation is templated so the same tree runs on doubles and dual numbers.

#include "ruledkit/dual.hpp"
#include "ruledkit/error.hpp"

#include <cmath>
#include <memory>
#include <string>
#include <string_view>

namespace ruledkit::expr {

enum class Op { Constant, VarU, VarV, Pi, Add, Sub, Mul, Div, Pow, Neg, Sin, Cos, Exp };

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Node {
    Op op;
    double value = 0.0;
    NodePtr lhs;
    NodePtr rhs;
};

/// Parse a complete expression. `offset` is added to reported positions.
NodePtr parse(std::string_view source, std::size_t offset = 0);

/// Parse the longest expression prefix; `consumed` receives its length.
NodePtr parse_prefix(std::string_view source, std::size_t& consumed, std::size_t offset = 0);

/// Fully parenthesised text that parses back to an identical tree.
std::string print(const Node& node);

bool structurally_equal(const Node& a, const Node& b);

/// Exponent value when `node` is a constant integer literal.
bool integer_literal(const Node& node, long long& out);

namespace detail {

template <typename T>
T power(const T& base, const Node& exponent_node, const T& exponent) {
    long long n = 0;
    if (integer_literal(exponent_node, n)) return ipow(base, n);
    if (!(scalar_part(base) > 0.0)) {
        throw Error(ErrorKind::Domain, "non-integer power of a non-positive base");
    }
    using std::exp;
    using std::log;
    return exp(exponent * log(base));
}

} // namespace detail

template <typename T>
T evaluate(const Node& node, const T& u, const T& v) {
    switch (node.op) {
    case Op::Constant: return T(node.value);
    case Op::Pi: return T(M_PI);
    case Op::VarU: return u;
    case Op::VarV: return v;
    case Op::Add: return evaluate(*node.lhs, u, v) + evaluate(*node.rhs, u, v);
    case Op::Sub: return evaluate(*node.lhs, u, v) - evaluate(*node.rhs, u, v);
    case Op::Mul: return evaluate(*node.lhs, u, v) * evaluate(*node.rhs, u, v);
    case Op::Div: {
        T den = evaluate(*node.rhs, u, v);
        if (!(std::abs(scalar_part(den)) > kDivisionGuard)) {
            throw Error(ErrorKind::Domain, "division by zero in lift expression");
        }
        return evaluate(*node.lhs, u, v) / den;
    }
    case Op::Pow: return detail::power(evaluate(*node.lhs, u, v), *node.rhs, evaluate(*node.rhs, u, v));
    case Op::Neg: return -evaluate(*node.lhs, u, v);
    case Op::Sin: {
        using std::sin;
        return sin(evaluate(*node.lhs, u, v));
    }
    case Op::Cos: {
        using std::cos;
        return cos(evaluate(*node.lhs, u, v));
    }
    case Op::Exp: {
        using std::exp;
        return exp(evaluate(*node.lhs, u, v));
    }
    }
    throw Error(ErrorKind::Domain, "corrupt expression node");
}

} // namespace ruledkit::expr
