#include "ruledkit/tolerance.hpp"

#include "ruledkit/error.hpp"

#include <charconv>
#include <cstdlib>
#include <fmt/format.h>

namespace ruledkit {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::SingularDirection: return "SingularDirection";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::ParameterOutOfRange: return "ParameterOutOfRange";
    case ErrorKind::DegreeTooLow: return "DegreeTooLow";
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::Domain: return "DomainError";
    case ErrorKind::CylindricalPoint: return "CylindricalPoint";
    case ErrorKind::StrictionUndefined: return "StrictionUndefined";
    case ErrorKind::NormalUndefined: return "NormalUndefined";
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::QuadratureNoConvergence: return "QuadratureNoConvergence";
    case ErrorKind::AllSamplesDegenerate: return "AllSamplesDegenerate";
    case ErrorKind::EmptyMesh: return "EmptyMesh";
    case ErrorKind::Io: return "IoError";
    }
    return "Unknown";
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

double parse_positive(std::string_view s, std::size_t offset) {
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size() || !(value > 0.0)) {
        throw ParseError(offset, "positive number",
                         fmt::format("tolerance value '{}' is not a positive number", s));
    }
    return value;
}

} // namespace

Tolerances parse_tolerances(std::string_view text, Tolerances base) {
    std::size_t offset = 0;
    while (offset <= text.size()) {
        std::size_t comma = text.find(',', offset);
        if (comma == std::string_view::npos) comma = text.size();
        std::string_view item = trim(text.substr(offset, comma - offset));
        if (!item.empty()) {
            std::size_t eq = item.find('=');
            if (eq == std::string_view::npos) {
                base.numerical = parse_positive(item, offset);
            } else {
                std::string_view key = trim(item.substr(0, eq));
                double value = parse_positive(trim(item.substr(eq + 1)), offset + eq + 1);
                if (key == "structural") base.structural = value;
                else if (key == "numerical") base.numerical = value;
                else if (key == "kappa_min") base.kappa_min = value;
                else if (key == "pole") base.pole = value;
                else if (key == "c1_area") base.c1_area = value;
                else if (key == "developable") base.developable = value;
                else
                    throw ParseError(offset, "tolerance key",
                                     fmt::format("unknown tolerance key '{}'", key));
            }
        }
        offset = comma + 1;
    }
    return base;
}

const Tolerances& tolerances() {
    static const Tolerances tol = [] {
        const char* env = std::getenv("RULEDKIT_TOL");
        return env ? parse_tolerances(env) : Tolerances{};
    }();
    return tol;
}

std::string describe(const Tolerances& tol) {
    return fmt::format("structural={:g},numerical={:g},kappa_min={:g},pole={:g},c1_area={:g},developable={:g}",
                       tol.structural, tol.numerical, tol.kappa_min, tol.pole, tol.c1_area,
                       tol.developable);
}

} // namespace ruledkit
