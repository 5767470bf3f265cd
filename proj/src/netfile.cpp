#include "ruledkit/netfile.hpp"

#include "ruledkit/error.hpp"

#include <charconv>
#include <cmath>
#include <fmt/format.h>
#include <fstream>
#include <sstream>

namespace ruledkit {

namespace {

class AngleScanner {
public:
    explicit AngleScanner(std::string_view text) : text_(text) {}

    double parse() {
        skip_space();
        double sign = 1.0;
        if (peek() == '-' || peek() == '+') {
            sign = take() == '-' ? -1.0 : 1.0;
            skip_space();
        }
        double coef = 1.0;
        bool have_number = false;
        if (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.') {
            coef = number();
            have_number = true;
            skip_space();
        }
        bool has_pi = false;
        if (peek() == '*') {
            if (!have_number) fail("number");
            take();
            skip_space();
            expect_pi();
            has_pi = true;
        } else if (peek() == 'p') {
            expect_pi();
            has_pi = true;
        }
        if (!have_number && !has_pi) fail("number or 'pi'");
        skip_space();
        double denom = 1.0;
        if (peek() == '/') {
            take();
            skip_space();
            denom = number();
            if (denom == 0.0) fail("nonzero denominator");
            skip_space();
        }
        if (pos_ != text_.size()) fail("end of angle");
        return sign * coef * (has_pi ? M_PI : 1.0) / denom;
    }

private:
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    char take() { return text_[pos_++]; }
    void skip_space() {
        while (peek() == ' ' || peek() == '\t') ++pos_;
    }
    void expect_pi() {
        if (text_.substr(pos_, 2) != "pi") fail("'pi'");
        pos_ += 2;
    }
    double number() {
        double value = 0.0;
        auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
        if (ec != std::errc{}) fail("number");
        pos_ = static_cast<std::size_t>(ptr - text_.data());
        return value;
    }
    [[noreturn]] void fail(const std::string& expected) const {
        throw ParseError(pos_, expected,
                         fmt::format("bad angle '{}' at position {}: expected {}", text_, pos_, expected));
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

double angle_from_json(const nlohmann::json& value, std::size_t index) {
    if (value.is_number()) return value.get<double>();
    if (value.is_string()) {
        try {
            return parse_angle(value.get<std::string>());
        } catch (const ParseError& e) {
            throw ParseError(index, e.expected(), fmt::format("control point {}: {}", index, e.what()));
        }
    }
    throw ParseError(index, "number or angle string",
                     fmt::format("control point {}: coordinates must be numbers or strings", index));
}

} // namespace

double parse_angle(std::string_view text) { return AngleScanner(text).parse(); }

BezierPath2 control_net_from_json(const nlohmann::json& doc) {
    if (!doc.is_array()) throw ParseError(0, "array of [u, v] pairs", "control net must be a JSON array");
    std::vector<DomainPoint> points;
    points.reserve(doc.size());
    for (std::size_t i = 0; i < doc.size(); ++i) {
        const auto& item = doc[i];
        if (!item.is_array() || item.size() != 2) {
            throw ParseError(i, "[u, v] pair", fmt::format("control point {} is not a [u, v] pair", i));
        }
        points.push_back({angle_from_json(item[0], i), angle_from_json(item[1], i)});
    }
    if (points.size() < 2) throw ParseError(points.size(), "at least two control points", "control net too short");
    return BezierPath2(std::move(points));
}

BezierPath2 parse_control_net(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(e.byte > 0 ? e.byte - 1 : 0, "valid JSON", fmt::format("malformed JSON: {}", e.what()));
    }
    return control_net_from_json(doc);
}

BezierPath2 load_control_net(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Io, fmt::format("cannot open control net '{}'", path));
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_control_net(buf.str());
}

nlohmann::json control_net_to_json(const BezierPath2& path) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& p : path.control_points()) out.push_back({p.u, p.v});
    return out;
}

} // namespace ruledkit
