#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ruledkit {

enum class ErrorKind {
    SingularDirection,
    DivisionByZero,
    ParameterOutOfRange,
    DegreeTooLow,
    Parse,
    Domain,
    CylindricalPoint,
    StrictionUndefined,
    NormalUndefined,
    NotClosed,
    QuadratureNoConvergence,
    AllSamplesDegenerate,
    EmptyMesh,
    Io,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// Syntax error in an expression, a control net or a request body.
/// `position` is a 0-based byte offset into the offending text.
class ParseError : public Error {
public:
    ParseError(std::size_t position, std::string expected, const std::string& what)
        : Error(ErrorKind::Parse, what), position_(position), expected_(std::move(expected)) {}
    std::size_t position() const noexcept { return position_; }
    const std::string& expected() const noexcept { return expected_; }

private:
    std::size_t position_;
    std::string expected_;
};

} // namespace ruledkit
