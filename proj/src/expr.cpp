#include "ruledkit/expr.hpp"

#include <cctype>
#include <charconv>
#include <fmt/format.h>

namespace ruledkit::expr {

namespace {

NodePtr make(Op op, NodePtr lhs = nullptr, NodePtr rhs = nullptr, double value = 0.0) {
    return std::make_shared<const Node>(Node{op, value, std::move(lhs), std::move(rhs)});
}

class Parser {
public:
    Parser(std::string_view src, std::size_t offset) : src_(src), offset_(offset) {}

    NodePtr expression() {
        NodePtr lhs = term();
        for (;;) {
            skip();
            if (peek() == '+') {
                ++pos_;
                lhs = make(Op::Add, lhs, term());
            } else if (peek() == '-') {
                ++pos_;
                lhs = make(Op::Sub, lhs, term());
            } else {
                return lhs;
            }
        }
    }

    std::size_t position() {
        skip();
        return pos_;
    }

    [[noreturn]] void fail(const std::string& expected) {
        skip();
        std::string found = pos_ < src_.size() ? fmt::format("'{}'", src_[pos_]) : "end of input";
        throw ParseError(offset_ + pos_, expected,
                         fmt::format("parse error at position {}: expected {}, found {}", offset_ + pos_,
                                     expected, found));
    }

private:
    NodePtr term() {
        NodePtr lhs = unary();
        for (;;) {
            skip();
            if (peek() == '*') {
                ++pos_;
                lhs = make(Op::Mul, lhs, unary());
            } else if (peek() == '/') {
                ++pos_;
                lhs = make(Op::Div, lhs, unary());
            } else {
                return lhs;
            }
        }
    }

    NodePtr unary() {
        skip();
        if (peek() == '-') {
            ++pos_;
            return make(Op::Neg, unary());
        }
        return power();
    }

    NodePtr power() {
        NodePtr base = primary();
        skip();
        if (peek() == '^') {
            ++pos_;
            return make(Op::Pow, base, unary());
        }
        return base;
    }

    NodePtr primary() {
        skip();
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
            std::string_view name = src_.substr(start, pos_ - start);
            if (name == "u") return make(Op::VarU);
            if (name == "v") return make(Op::VarV);
            if (name == "pi") return make(Op::Pi);
            Op fn;
            if (name == "sin") fn = Op::Sin;
            else if (name == "cos") fn = Op::Cos;
            else if (name == "exp") fn = Op::Exp;
            else {
                pos_ = start;
                fail("u, v, pi, sin, cos or exp");
            }
            skip();
            if (peek() != '(') fail("'('");
            ++pos_;
            NodePtr arg = expression();
            skip();
            if (peek() != ')') fail("')'");
            ++pos_;
            return make(fn, arg);
        }
        if (c == '(') {
            ++pos_;
            NodePtr inner = expression();
            skip();
            if (peek() != ')') fail("')'");
            ++pos_;
            return inner;
        }
        fail("operand");
    }

    NodePtr number() {
        double value = 0.0;
        auto [ptr, ec] = std::from_chars(src_.data() + pos_, src_.data() + src_.size(), value);
        if (ec != std::errc{}) fail("number");
        pos_ = static_cast<std::size_t>(ptr - src_.data());
        return make(Op::Constant, nullptr, nullptr, value);
    }

    char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }
    void skip() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    std::string_view src_;
    std::size_t offset_;
    std::size_t pos_ = 0;
};

const char* binary_symbol(Op op) {
    switch (op) {
    case Op::Add: return "+";
    case Op::Sub: return "-";
    case Op::Mul: return "*";
    case Op::Div: return "/";
    case Op::Pow: return "^";
    default: return "?";
    }
}

} // namespace

NodePtr parse_prefix(std::string_view source, std::size_t& consumed, std::size_t offset) {
    Parser parser(source, offset);
    NodePtr root = parser.expression();
    consumed = parser.position();
    return root;
}

NodePtr parse(std::string_view source, std::size_t offset) {
    Parser parser(source, offset);
    NodePtr root = parser.expression();
    if (parser.position() != source.size()) parser.fail("operator or end of expression");
    return root;
}

std::string print(const Node& node) {
    switch (node.op) {
    case Op::Constant: return fmt::format("{:.17g}", node.value);
    case Op::Pi: return "pi";
    case Op::VarU: return "u";
    case Op::VarV: return "v";
    case Op::Neg: return fmt::format("(-{})", print(*node.lhs));
    case Op::Sin: return fmt::format("sin({})", print(*node.lhs));
    case Op::Cos: return fmt::format("cos({})", print(*node.lhs));
    case Op::Exp: return fmt::format("exp({})", print(*node.lhs));
    case Op::Add:
    case Op::Sub:
    case Op::Mul:
    case Op::Div:
    case Op::Pow: return fmt::format("({} {} {})", print(*node.lhs), binary_symbol(node.op), print(*node.rhs));
    }
    return "?";
}

bool structurally_equal(const Node& a, const Node& b) {
    if (a.op != b.op) return false;
    if (a.op == Op::Constant && a.value != b.value) return false;
    if (static_cast<bool>(a.lhs) != static_cast<bool>(b.lhs)) return false;
    if (static_cast<bool>(a.rhs) != static_cast<bool>(b.rhs)) return false;
    if (a.lhs && !structurally_equal(*a.lhs, *b.lhs)) return false;
    if (a.rhs && !structurally_equal(*a.rhs, *b.rhs)) return false;
    return true;
}

bool integer_literal(const Node& node, long long& out) {
    const Node* n = &node;
    bool negate = false;
    if (n->op == Op::Neg && n->lhs) {
        negate = true;
        n = n->lhs.get();
    }
    if (n->op != Op::Constant || n->value != std::floor(n->value) || std::abs(n->value) > 1e6) return false;
    out = static_cast<long long>(n->value);
    if (negate) out = -out;
    return true;
}

} // namespace ruledkit::expr
