// ruledkit command line: validate, invariants, integrals, mesh, serve.
// Exit codes: 0 ok, 1 domain/validation failure, 2 input parse failure,
// 3 environment failure (files, ports).

#include "ruledkit/closedinv.hpp"
#include "ruledkit/design.hpp"
#include "ruledkit/error.hpp"
#include "ruledkit/meshio.hpp"
#include "ruledkit/netfile.hpp"
#include "ruledkit/ruledgeom.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

namespace {

using namespace ruledkit;

enum Exit { kOk = 0, kDomain = 1, kParse = 2, kEnvironment = 3 };

struct Input {
    std::string curve_file;
    std::string net_inline;
    std::string path_name;
    std::string field = "0, 0";
};

void add_input_flags(CLI::App* cmd, Input& in) {
    auto* curve = cmd->add_option("--curve", in.curve_file, "control-net JSON file");
    auto* net = cmd->add_option("--net", in.net_inline, "inline control-net JSON");
    auto* path = cmd->add_option("--path", in.path_name,
                                 "built-in path: great-circle, small-circle:V0, helicoid, diagonal");
    curve->excludes(net)->excludes(path);
    net->excludes(path);
    cmd->add_option("--field", in.field, "lift field \"EXPR , EXPR\" for u_bar, v_bar");
}

std::shared_ptr<const ParametricPath> resolve_path(const Input& in) {
    if (!in.curve_file.empty()) return std::make_shared<BezierCurvePath>(load_control_net(in.curve_file));
    if (!in.net_inline.empty()) return std::make_shared<BezierCurvePath>(parse_control_net(in.net_inline));
    if (!in.path_name.empty()) {
        auto p = paths::by_name(in.path_name);
        if (!p) throw ParseError(0, "path name", fmt::format("unknown path '{}'", in.path_name));
        return p;
    }
    throw ParseError(0, "--curve, --net or --path", "no input: give exactly one of --curve, --net, --path");
}

/// Writes to `target`, or stdout when empty.
void emit(const std::string& target, const std::string& text) {
    if (target.empty() || target == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(target, std::ios::binary);
    if (!out) throw Error(ErrorKind::Io, fmt::format("cannot open '{}' for writing", target));
    out << text;
    if (!out) throw Error(ErrorKind::Io, fmt::format("write to '{}' failed", target));
}

int exit_code_for(const Error& e) {
    switch (e.kind()) {
    case ErrorKind::Parse: return kParse;
    case ErrorKind::Io: return kEnvironment;
    default: return kDomain;
    }
}

std::pair<double, double> parse_range(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw ParseError(0, "A:B", fmt::format("bad w-range '{}'", text));
    try {
        std::size_t n1 = 0, n2 = 0;
        const std::string lo = text.substr(0, colon), hi = text.substr(colon + 1);
        const double a = std::stod(lo, &n1), b = std::stod(hi, &n2);
        if (n1 != lo.size() || n2 != hi.size()) throw std::invalid_argument("trailing");
        if (!(a < b)) throw ParseError(colon, "A < B", fmt::format("empty w-range '{}'", text));
        return {a, b};
    } catch (const std::logic_error&) {
        throw ParseError(0, "A:B", fmt::format("bad w-range '{}'", text));
    }
}

int cmd_validate(const Input& in) {
    if (in.curve_file.empty() && in.net_inline.empty()) throw ParseError(0, "net file", "validate needs a net file or --net");
    const BezierPath2 net = !in.net_inline.empty() ? parse_control_net(in.net_inline) : load_control_net(in.curve_file);
    const ValidationReport report = validate_closed_c1(net);
    std::cout << dump_json(validation_to_json(report)) << "\n";
    return report.closed ? kOk : kDomain;
}

int cmd_invariants(const Input& in, int samples, const std::string& out) {
    auto path = resolve_path(in);
    const LiftField field = LiftField::parse(in.field);
    std::ostringstream csv;
    write_profile_csv(profile(*path, field, samples), csv);
    emit(out, csv.str());
    return kOk;
}

int cmd_integrals(const Input& in, const std::string& convention) {
    auto path = resolve_path(in);
    const LiftField field = LiftField::parse(in.field);
    if (!is_closed_motion(*path, field)) throw Error(ErrorKind::NotClosed, "curve not closed");
    const Convention conv = convention == "frame" ? Convention::FrameForms : Convention::CoordinateForms;
    std::cout << dump_json(integrals_to_json(integral_invariants(*path, field, conv))) << "\n";
    return kOk;
}

int cmd_mesh(const Input& in, int nt, int nw, const std::string& range, const std::string& format,
             const std::string& out) {
    const auto [w_min, w_max] = parse_range(range);
    RuledPatch patch{resolve_path(in), LiftField::parse(in.field), w_min, w_max};
    const TriMesh mesh = tessellate(patch, nt, nw);
    std::ostringstream text;
    if (format == "ply") {
        write_ply(mesh, text);
    } else {
        write_obj(mesh, text);
    }
    emit(out, text.str());
    return kOk;
}

int cmd_serve(const std::string& host, int port) {
    DesignServer server;
    if (!server.bind(host, port)) {
        std::cerr << fmt::format("error: cannot bind {}:{}\n", host, port);
        return kEnvironment;
    }
    std::cerr << fmt::format("ruledkit design service on http://{}:{}\n", host, server.port());
    server.run();
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Closed ruled surfaces from Bezier control nets on the dual unit sphere"};
    app.require_subcommand(1);

    Input in;
    int samples = 128, nt = 128, nw = 8, port = 8080;
    std::string out, convention = "coordinate", range = "-1:1", format = "obj", host = "127.0.0.1";

    auto* validate = app.add_subcommand("validate", "check closure and C1 continuity of a net");
    auto* vcurve = validate->add_option("--curve", in.curve_file, "control-net JSON file");
    auto* vnet = validate->add_option("--net", in.net_inline, "inline control-net JSON");
    vcurve->excludes(vnet);
    validate->add_option("file", in.curve_file, "control-net JSON file")->excludes(vnet);

    auto* invariants = app.add_subcommand("invariants", "sample the invariant profile to CSV");
    add_input_flags(invariants, in);
    invariants->add_option("--samples", samples)->check(CLI::Range(2, 1 << 20));
    invariants->add_option("--out", out, "output file (default stdout)");

    auto* integrals = app.add_subcommand("integrals", "pitch, angle of pitch and striction length");
    add_input_flags(integrals, in);
    integrals->add_option("--convention", convention)->check(CLI::IsMember({"coordinate", "frame"}));

    auto* mesh = app.add_subcommand("mesh", "tessellate the ruled patch");
    add_input_flags(mesh, in);
    mesh->add_option("--nt", nt)->check(CLI::Range(2, 1 << 16));
    mesh->add_option("--nw", nw)->check(CLI::Range(1, 1 << 16));
    mesh->add_option("--w-range", range, "A:B");
    mesh->add_option("--format", format)->check(CLI::IsMember({"obj", "ply"}));
    mesh->add_option("--out", out, "output file (default stdout)");

    auto* serve = app.add_subcommand("serve", "run the JSON design service");
    serve->add_option("--port", port)->check(CLI::Range(0, 65535));
    serve->add_option("--host", host);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kParse;
    }

    try {
        (void)tolerances();  // surface a malformed RULEDKIT_TOL before any work
        if (*validate) return cmd_validate(in);
        if (*invariants) return cmd_invariants(in, samples, out);
        if (*integrals) return cmd_integrals(in, convention);
        if (*mesh) return cmd_mesh(in, nt, nw, range, format, out);
        if (*serve) return cmd_serve(host, port);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kEnvironment;
    }
    return kOk;
}
