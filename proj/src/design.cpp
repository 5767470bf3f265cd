#include "ruledkit/design.hpp"

#include "ruledkit/error.hpp"
#include "ruledkit/meshio.hpp"
#include "ruledkit/netfile.hpp"
#include "ruledkit/ruledgeom.hpp"

#include <cmath>
#include <fmt/format.h>

#ifndef RULEDKIT_VERSION
#define RULEDKIT_VERSION "0.0.0"
#endif

namespace ruledkit {

namespace {

using nlohmann::json;

int count_field(const json& doc, const char* key, int fallback) {
    if (!doc.contains(key)) return fallback;
    const json& v = doc.at(key);
    if (!v.is_number_integer()) throw ParseError(0, "integer", fmt::format("'{}' must be an integer", key));
    const auto n = v.get<long long>();
    if (n < 2 || n > 4096) throw ParseError(0, "count in [2, 4096]", fmt::format("'{}' = {} is outside [2, 4096]", key, n));
    return static_cast<int>(n);
}

double number_field(const json& doc, const char* key, double fallback) {
    if (!doc.contains(key)) return fallback;
    const json& v = doc.at(key);
    if (!v.is_number()) throw ParseError(0, "number", fmt::format("'{}' must be a number", key));
    return v.get<double>();
}

std::string expression_field(const json& lift, const char* key) {
    if (!lift.contains(key)) return "0";
    if (!lift.at(key).is_string()) throw ParseError(0, "string", fmt::format("lift.{} must be a string", key));
    return lift.at(key).get<std::string>();
}

json error_body(const std::string& message) { return {{"error", message}}; }

} // namespace

DesignRequest parse_design_request(std::string_view body) {
    json doc = json::parse(body.begin(), body.end(), nullptr, false);
    if (doc.is_discarded()) throw ParseError(0, "JSON document", "malformed JSON body");
    if (!doc.is_object()) throw ParseError(0, "JSON object", "request must be a JSON object");
    if (!doc.contains("control_points")) throw ParseError(0, "control_points", "missing 'control_points'");

    std::string u_bar = "0", v_bar = "0";
    if (doc.contains("lift")) {
        const json& lift = doc.at("lift");
        if (!lift.is_object()) throw ParseError(0, "object", "'lift' must be an object");
        u_bar = expression_field(lift, "u_bar");
        v_bar = expression_field(lift, "v_bar");
    }
    DesignRequest req{control_net_from_json(doc.at("control_points")), LiftField::from_expressions(u_bar, v_bar)};
    req.u_bar = std::move(u_bar);
    req.v_bar = std::move(v_bar);
    req.samples = count_field(doc, "samples", req.samples);
    req.mesh_nt = count_field(doc, "mesh_nt", req.mesh_nt);
    req.mesh_nw = count_field(doc, "mesh_nw", req.mesh_nw);
    req.w_min = number_field(doc, "w_min", req.w_min);
    req.w_max = number_field(doc, "w_max", req.w_max);
    if (!(req.w_min < req.w_max)) throw ParseError(0, "w_min < w_max", "w_min must be smaller than w_max");
    return req;
}

json validation_to_json(const ValidationReport& r) {
    return {{"closed", r.closed},
            {"c1", r.c1},
            {"pole_proximity", r.pole_proximity},
            {"near_pole", r.near_pole},
            {"out_of_domain", r.out_of_domain},
            {"warnings", r.warnings}};
}

json integrals_to_json(const IntegralInvariants& inv) {
    return {{"pitch", inv.pitch},
            {"angle_of_pitch", inv.angle_of_pitch},
            {"striction_length", inv.striction_length},
            {"est_error", inv.est_error}};
}

json health_json() {
    const Tolerances& tol = tolerances();
    return {{"status", "ok"},
            {"version", RULEDKIT_VERSION},
            {"tolerances",
             {{"structural", tol.structural},
              {"numerical", tol.numerical},
              {"kappa_min", tol.kappa_min},
              {"pole", tol.pole},
              {"c1_area", tol.c1_area},
              {"developable", tol.developable}}}};
}

namespace {

void dump_into(const json& doc, std::string& out) {
    switch (doc.type()) {
    case json::value_t::object: {
        out += '{';
        bool first = true;
        for (auto it = doc.begin(); it != doc.end(); ++it) {
            if (!first) out += ',';
            first = false;
            out += json(it.key()).dump();
            out += ':';
            dump_into(it.value(), out);
        }
        out += '}';
        break;
    }
    case json::value_t::array: {
        out += '[';
        for (std::size_t i = 0; i < doc.size(); ++i) {
            if (i) out += ',';
            dump_into(doc[i], out);
        }
        out += ']';
        break;
    }
    case json::value_t::number_float: {
        const double v = doc.get<double>();
        out += std::isfinite(v) ? format_number(v) : "null";
        break;
    }
    default:
        out += doc.dump();
    }
}

} // namespace

std::string dump_json(const json& doc) {
    std::string out;
    dump_into(doc, out);
    return out;
}

DesignResult handle_design(std::string_view body) {
    std::optional<DesignRequest> req;
    try {
        req = parse_design_request(body);
    } catch (const ParseError& e) {
        json err = error_body(e.what());
        err["position"] = e.position();
        return {400, err};
    } catch (const Error& e) {
        return {400, error_body(e.what())};
    }

    const Tolerances& tol = tolerances();
    const ValidationReport report = validate_closed_c1(req->net, tol);
    auto path = std::make_shared<const BezierCurvePath>(req->net, tol);
    if (!report.closed || !is_closed_motion(*path, req->field, tol)) {
        json err = error_body("curve not closed");
        err["validation"] = validation_to_json(report);
        return {422, err};
    }

    json out;
    out["validation"] = validation_to_json(report);
    std::vector<std::string> warnings = report.warnings;
    try {
        RuledPatch patch{path, req->field, req->w_min, req->w_max};
        const TriMesh mesh = tessellate(patch, req->mesh_nt, req->mesh_nw, tol);
        out["mesh"] = mesh_to_json(mesh);
        out["striction"] = out["mesh"]["striction"];
        if (!mesh.holes.empty()) {
            warnings.push_back(fmt::format("{} cylindrical rulings left as holes in the mesh", mesh.holes.size()));
        }
        if (!mesh.degenerate_vertices.empty()) {
            warnings.push_back(fmt::format("{} mesh vertices on a singular line use limit normals",
                                           mesh.degenerate_vertices.size()));
        }

        const auto samples = profile(*path, req->field, req->samples, tol);
        out["profile"] = profile_to_json(samples);
        int developable = 0, cylindrical = 0, pole = 0, undefined = 0;
        for (const auto& s : samples) {
            developable += (s.flags & kDevelopable) != 0;
            cylindrical += (s.flags & kCylindrical) != 0;
            pole += (s.flags & kPole) != 0;
            undefined += (s.flags & kUndefined) != 0;
        }
        if (developable) warnings.push_back(fmt::format("{} developable samples", developable));
        if (cylindrical) warnings.push_back(fmt::format("{} cylindrical samples", cylindrical));
        if (pole) warnings.push_back(fmt::format("{} samples near a pole", pole));
        if (undefined) warnings.push_back(fmt::format("{} samples where the lift field is undefined", undefined));

        try {
            out["integrals"] = integrals_to_json(integral_invariants(*path, req->field, Convention::CoordinateForms,
                                                                     1e-8, tol));
        } catch (const Error& e) {
            out["integrals"] = nullptr;
            warnings.push_back(fmt::format("integral invariants unavailable: {}", e.what()));
        }
    } catch (const Error& e) {
        // All-degenerate geometry and other domain conditions are 422, never 500.
        return {422, error_body(e.what())};
    }
    out["warnings"] = warnings;
    return {200, out};
}

} // namespace ruledkit
