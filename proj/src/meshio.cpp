#include "ruledkit/meshio.hpp"

#include "ruledkit/error.hpp"

#include <cmath>
#include <fmt/format.h>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace ruledkit {

std::string format_number(double value) {
    if (value == 0.0) return "0";  // folds -0 so outputs stay diffable
    return fmt::format("{:.17g}", value);
}

namespace {

struct RowResult {
    bool cylindrical = false;
    Vec3 striction = Vec3::Zero();
    std::vector<Vec3> points;
    std::vector<Vec3> normals;
    std::vector<int> degenerate;  // local w indices
};

RowResult tessellate_row(const RuledPatch& patch, double t, int nw, const Tolerances& tol) {
    RowResult row;
    const Vec3 a = patch.directrix_at(t);
    const Vec3 x = patch.ruling_at(t);
    row.points.resize(static_cast<std::size_t>(nw + 1));
    row.normals.assign(static_cast<std::size_t>(nw + 1), Vec3::Zero());
    for (int j = 0; j <= nw; ++j) {
        const double w = patch.w_min + (patch.w_max - patch.w_min) * j / nw;
        row.points[static_cast<std::size_t>(j)] = a + w * x;
    }
    try {
        const DualCurvePoint pt = dual_curve(*patch.path, patch.field, t, tol);
        const BlaschkeFrame frame = blaschke_frame(pt, tol);
        const InvariantSample inv = invariants_at(*patch.path, patch.field, t, tol);
        const StrictionData st = striction_point(*patch.path, patch.field, t, false, tol);
        row.striction = st.m;
        const Vec3& x2 = frame.X2.real;
        const Vec3& x3 = frame.X3.real;
        for (int j = 0; j <= nw; ++j) {
            const double w = patch.w_min + (patch.w_max - patch.w_min) * j / nw;
            // Vertex a + w·x sits at w + offset in the striction chart.
            const double ws = w + st.offset;
            const double wk = ws * inv.kappa;
            const double q = wk * wk + inv.kappa_bar * inv.kappa_bar;
            Vec3 n;
            if (q > 1e-18) {
                n = (inv.kappa_bar * x2 - wk * x3) / std::sqrt(q);
            } else {
                n = -x3;
                row.degenerate.push_back(j);
            }
            row.normals[static_cast<std::size_t>(j)] = n;
        }
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::CylindricalPoint) throw;
        row.cylindrical = true;
    }
    return row;
}

TriMesh assemble(const std::vector<RowResult>& rows, int nt, int nw) {
    TriMesh mesh;
    mesh.nt = nt;
    mesh.nw = nw;
    const int stride = nw + 1;
    int first_valid = -1;
    for (int i = 0; i <= nt; ++i) {
        if (!rows[static_cast<std::size_t>(i)].cylindrical) {
            first_valid = i;
            break;
        }
    }
    if (first_valid < 0) {
        throw Error(ErrorKind::AllSamplesDegenerate, "every ruling of the patch is at a cylindrical point");
    }
    int last_valid = first_valid;
    for (int i = 0; i <= nt; ++i) {
        const RowResult& row = rows[static_cast<std::size_t>(i)];
        if (!row.cylindrical) last_valid = i;
        const RowResult& shade = row.cylindrical ? rows[static_cast<std::size_t>(last_valid)] : row;
        std::vector<int> ruling;
        for (int j = 0; j <= nw; ++j) {
            mesh.vertices.push_back(row.points[static_cast<std::size_t>(j)]);
            mesh.normals.push_back(shade.normals[static_cast<std::size_t>(j)]);
            ruling.push_back(i * stride + j);
        }
        mesh.ruling_polylines.push_back(std::move(ruling));
        if (row.cylindrical) {
            mesh.holes.push_back(i);
        } else {
            mesh.striction_polyline.push_back(row.striction);
            for (int j : row.degenerate) mesh.degenerate_vertices.push_back(i * stride + j);
        }
    }
    for (int i = 0; i < nt; ++i) {
        if (rows[static_cast<std::size_t>(i)].cylindrical || rows[static_cast<std::size_t>(i + 1)].cylindrical) {
            continue;
        }
        for (int j = 0; j < nw; ++j) {
            const int v00 = i * stride + j, v01 = v00 + 1, v10 = v00 + stride, v11 = v10 + 1;
            mesh.faces.push_back({v00, v10, v11});
            mesh.faces.push_back({v00, v11, v01});
        }
    }
    return mesh;
}

void check_grid(const RuledPatch& patch, int nt, int nw) {
    if (nt < 2 || nw < 1) {
        throw Error(ErrorKind::ParameterOutOfRange, fmt::format("mesh grid needs nt >= 2 and nw >= 1 (got {}x{})", nt, nw));
    }
    if (!patch.path) throw Error(ErrorKind::ParameterOutOfRange, "ruled patch has no path");
}

} // namespace

TriMesh tessellate_serial(const RuledPatch& patch, int nt, int nw, const Tolerances& tol) {
    check_grid(patch, nt, nw);
    std::vector<RowResult> rows(static_cast<std::size_t>(nt + 1));
    for (int i = 0; i <= nt; ++i) {
        rows[static_cast<std::size_t>(i)] = tessellate_row(patch, static_cast<double>(i) / nt, nw, tol);
    }
    return assemble(rows, nt, nw);
}

TriMesh tessellate(const RuledPatch& patch, int nt, int nw, const Tolerances& tol) {
    check_grid(patch, nt, nw);
    std::vector<RowResult> rows(static_cast<std::size_t>(nt + 1));
    std::exception_ptr failure;
#pragma omp parallel for schedule(static)
    for (int i = 0; i <= nt; ++i) {
        try {
            rows[static_cast<std::size_t>(i)] = tessellate_row(patch, static_cast<double>(i) / nt, nw, tol);
        } catch (...) {
#pragma omp critical(ruledkit_mesh_failure)
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return assemble(rows, nt, nw);
}

namespace {

void require_nonempty(const TriMesh& mesh) {
    if (mesh.vertices.empty() || mesh.faces.empty()) throw Error(ErrorKind::EmptyMesh, "cannot export an empty mesh");
}

void check_stream(const std::ostream& out) {
    if (!out) throw Error(ErrorKind::Io, "write failed");
}

std::string vec_line(const char* tag, const Vec3& p) {
    return fmt::format("{} {} {} {}\n", tag, format_number(p.x()), format_number(p.y()), format_number(p.z()));
}

[[noreturn]] void bad_input(const std::string& what, std::size_t line) {
    throw ParseError(line, "mesh record", fmt::format("line {}: {}", line, what));
}

} // namespace

void write_obj(const TriMesh& mesh, std::ostream& out) {
    require_nonempty(mesh);
    out << "# ruledkit mesh " << mesh.nt << "x" << mesh.nw << "\n";
    for (const auto& v : mesh.vertices) out << vec_line("v", v);
    for (const auto& n : mesh.normals) out << vec_line("vn", n);
    for (const auto& f : mesh.faces) {
        out << fmt::format("f {0}//{0} {1}//{1} {2}//{2}\n", f[0] + 1, f[1] + 1, f[2] + 1);
    }
    check_stream(out);
}

void write_ply(const TriMesh& mesh, std::ostream& out) {
    require_nonempty(mesh);
    out << "ply\nformat ascii 1.0\ncomment ruledkit mesh\n";
    out << "element vertex " << mesh.vertices.size() << "\n";
    out << "property double x\nproperty double y\nproperty double z\n";
    out << "property double nx\nproperty double ny\nproperty double nz\n";
    out << "element face " << mesh.faces.size() << "\n";
    out << "property list uchar int vertex_indices\nend_header\n";
    for (std::size_t i = 0; i < mesh.vertices.size(); ++i) {
        const Vec3& p = mesh.vertices[i];
        const Vec3& n = mesh.normals[i];
        out << fmt::format("{} {} {} {} {} {}\n", format_number(p.x()), format_number(p.y()), format_number(p.z()),
                           format_number(n.x()), format_number(n.y()), format_number(n.z()));
    }
    for (const auto& f : mesh.faces) out << fmt::format("3 {} {} {}\n", f[0], f[1], f[2]);
    check_stream(out);
}

TriMesh read_obj(std::istream& in) {
    TriMesh mesh;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag) || tag[0] == '#') continue;
        if (tag == "v" || tag == "vn") {
            double x, y, z;
            if (!(ls >> x >> y >> z)) bad_input("expected three coordinates", lineno);
            (tag == "v" ? mesh.vertices : mesh.normals).emplace_back(x, y, z);
        } else if (tag == "f") {
            std::array<int, 3> face{};
            for (int k = 0; k < 3; ++k) {
                std::string ref;
                if (!(ls >> ref)) bad_input("expected a triangle", lineno);
                face[static_cast<std::size_t>(k)] = std::stoi(ref.substr(0, ref.find('/'))) - 1;
            }
            mesh.faces.push_back(face);
        }
    }
    for (const auto& f : mesh.faces) {
        for (int idx : f) {
            if (idx < 0 || idx >= static_cast<int>(mesh.vertices.size())) bad_input("face index out of range", lineno);
        }
    }
    return mesh;
}

TriMesh read_ply(std::istream& in) {
    TriMesh mesh;
    std::string line;
    std::size_t vertices = 0, faces = 0, lineno = 0;
    if (!std::getline(in, line) || line != "ply") bad_input("missing ply magic", 1);
    ++lineno;
    while (std::getline(in, line)) {
        ++lineno;
        if (line == "end_header") break;
        std::istringstream ls(line);
        std::string a, b;
        ls >> a >> b;
        if (a == "element" && b == "vertex") ls >> vertices;
        if (a == "element" && b == "face") ls >> faces;
    }
    for (std::size_t i = 0; i < vertices; ++i) {
        double x, y, z, nx, ny, nz;
        if (!(in >> x >> y >> z >> nx >> ny >> nz)) bad_input("truncated vertex list", lineno + i);
        mesh.vertices.emplace_back(x, y, z);
        mesh.normals.emplace_back(nx, ny, nz);
    }
    for (std::size_t i = 0; i < faces; ++i) {
        int count;
        std::array<int, 3> f{};
        if (!(in >> count >> f[0] >> f[1] >> f[2]) || count != 3) bad_input("bad face record", lineno + vertices + i);
        mesh.faces.push_back(f);
    }
    return mesh;
}

void write_profile_csv(const std::vector<InvariantSample>& samples, std::ostream& out) {
    if (samples.empty()) throw Error(ErrorKind::EmptyMesh, "cannot export an empty profile");
    out << "t,kappa,kappa_bar,tau,tau_bar,delta,cot_sigma,flags\n";
    for (const auto& s : samples) {
        out << fmt::format("{},{},{},{},{},{},{},{}\n", format_number(s.t), format_number(s.kappa),
                           format_number(s.kappa_bar), format_number(s.tau), format_number(s.tau_bar),
                           format_number(s.delta), format_number(s.cot_sigma.value_or(0.0)),
                           flags_to_string(s.flags));
    }
    check_stream(out);
}

std::vector<InvariantSample> read_profile_csv(std::istream& in) {
    std::vector<InvariantSample> out;
    std::string line;
    if (!std::getline(in, line) || line != "t,kappa,kappa_bar,tau,tau_bar,delta,cot_sigma,flags") {
        bad_input("unexpected profile header", 1);
    }
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::vector<std::string> cells;
        std::stringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        if (cells.size() == 7) cells.emplace_back();
        if (cells.size() != 8) bad_input("expected 8 columns", lineno);
        InvariantSample s;
        try {
            s.t = std::stod(cells[0]);
            s.kappa = std::stod(cells[1]);
            s.kappa_bar = std::stod(cells[2]);
            s.tau = std::stod(cells[3]);
            s.tau_bar = std::stod(cells[4]);
            s.delta = std::stod(cells[5]);
            s.flags = flags_from_string(cells[7]);
            if (!(s.flags & (kDevelopable | kCylindrical | kUndefined))) s.cot_sigma = std::stod(cells[6]);
        } catch (const std::logic_error&) {
            bad_input("non-numeric cell", lineno);
        }
        out.push_back(s);
    }
    return out;
}

nlohmann::json mesh_to_json(const TriMesh& mesh) {
    auto points = [](const std::vector<Vec3>& pts) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& p : pts) arr.push_back({p.x(), p.y(), p.z()});
        return arr;
    };
    nlohmann::json faces = nlohmann::json::array();
    for (const auto& f : mesh.faces) faces.push_back({f[0], f[1], f[2]});
    return {{"vertices", points(mesh.vertices)},
            {"normals", points(mesh.normals)},
            {"faces", std::move(faces)},
            {"striction", points(mesh.striction_polyline)},
            {"rulings", mesh.ruling_polylines},
            {"degenerate_vertices", mesh.degenerate_vertices},
            {"holes", mesh.holes}};
}

nlohmann::json profile_to_json(const std::vector<InvariantSample>& samples) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& s : samples) {
        arr.push_back({{"t", s.t},
                       {"kappa", s.kappa},
                       {"kappa_bar", s.kappa_bar},
                       {"tau", s.tau},
                       {"tau_bar", s.tau_bar},
                       {"delta", s.delta},
                       {"cot_sigma", s.cot_sigma.value_or(0.0)},
                       {"flags", flags_to_string(s.flags)}});
    }
    return arr;
}

} // namespace ruledkit
