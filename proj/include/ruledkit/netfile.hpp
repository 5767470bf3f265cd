#pragma once

#include "ruledkit/bezier.hpp"

#include <nlohmann/json.hpp>
#include <string>
#include <string_view>

namespace ruledkit {

/// An angle literal: a decimal number or a rational multiple of π such as
/// "pi", "-pi/4", "3pi/8", "3*pi/8". Throws ParseError.
double parse_angle(std::string_view text);

/// JSON array of [u, v] pairs; entries may be numbers or angle strings.
BezierPath2 control_net_from_json(const nlohmann::json& doc);

/// Parse a control-net document. Malformed JSON or entries throw ParseError.
BezierPath2 parse_control_net(std::string_view text);

/// Read and parse a control-net file; unreadable files throw Error(Io).
BezierPath2 load_control_net(const std::string& path);

nlohmann::json control_net_to_json(const BezierPath2& path);

} // namespace ruledkit
