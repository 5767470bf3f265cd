#pragma once

#include "ruledkit/ruledgeom.hpp"

#include <array>
#include <iosfwd>
#include <nlohmann/json.hpp>
#include <vector>

namespace ruledkit {

struct TriMesh {
    int nt = 0;  ///< cells along t
    int nw = 0;  ///< cells along w
    std::vector<Vec3> vertices;
    std::vector<Vec3> normals;
    std::vector<std::array<int, 3>> faces;
    std::vector<std::vector<int>> ruling_polylines;  ///< one vertex-index list per t row
    std::vector<Vec3> striction_polyline;             ///< striction points m(tᵢ), non-cylindrical rows only
    std::vector<int> degenerate_vertices;             ///< normals taken as one-sided limits
    std::vector<int> holes;                           ///< cylindrical t rows; their faces are omitted
};

/// (nt+1)·(nw+1) grid over t ∈ [0,1], w ∈ [w_min, w_max], two triangles per
/// cell, normals from the surface chart. Requires nt >= 2, nw >= 1.
/// Throws AllSamplesDegenerate when every row is cylindrical.
TriMesh tessellate(const RuledPatch& patch, int nt, int nw, const Tolerances& tol = tolerances());

/// Serial reference for `tessellate`; bitwise identical output.
TriMesh tessellate_serial(const RuledPatch& patch, int nt, int nw, const Tolerances& tol = tolerances());

/// "v x y z", "vn x y z", "f a//a b//b c//c" (1-based). Empty mesh throws EmptyMesh.
void write_obj(const TriMesh& mesh, std::ostream& out);
/// ASCII PLY with per-vertex normals.
void write_ply(const TriMesh& mesh, std::ostream& out);

/// Readers for the subset written above (vertices, normals, faces).
TriMesh read_obj(std::istream& in);
TriMesh read_ply(std::istream& in);

/// Header t,kappa,kappa_bar,tau,tau_bar,delta,cot_sigma,flags; 17 significant digits.
void write_profile_csv(const std::vector<InvariantSample>& samples, std::ostream& out);
std::vector<InvariantSample> read_profile_csv(std::istream& in);

/// 17-significant-digit decimal, the format of every numeric text output.
std::string format_number(double value);

nlohmann::json mesh_to_json(const TriMesh& mesh);
nlohmann::json profile_to_json(const std::vector<InvariantSample>& samples);

} // namespace ruledkit
