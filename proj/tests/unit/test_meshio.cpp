#include "ruledkit/meshio.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <set>
#include <sstream>
#include <utility>

using namespace ruledkit;
using namespace ruledkit::testing;

namespace {

RuledPatch example2_patch() { return {example2_path(), example_field(), -1.0, 1.0}; }

} // namespace

TEST(Tessellate, SmallestGrid) {
    auto m = tessellate(example2_patch(), 2, 1);
    EXPECT_EQ(m.vertices.size(), 6u);
    EXPECT_EQ(m.faces.size(), 4u);
    EXPECT_EQ(m.normals.size(), 6u);
    EXPECT_EQ(m.ruling_polylines.size(), 3u);
}

TEST(Tessellate, RejectsDegenerateGrids) {
    EXPECT_THROW(tessellate(example2_patch(), 1, 1), Error);
    EXPECT_THROW(tessellate(example2_patch(), 4, 0), Error);
}

TEST(Tessellate, Example2GridTopology) {
    const int nt = 128, nw = 8;
    auto m = tessellate(example2_patch(), nt, nw);
    ASSERT_EQ(m.vertices.size(), static_cast<std::size_t>((nt + 1) * (nw + 1)));
    std::set<std::pair<int, int>> edges;
    for (const auto& f : m.faces) {
        for (int k = 0; k < 3; ++k) {
            int a = f[k], b = f[(k + 1) % 3];
            ASSERT_GE(a, 0);
            ASSERT_LT(a, static_cast<int>(m.vertices.size()));
            edges.insert({std::min(a, b), std::max(a, b)});
        }
    }
    const long V = static_cast<long>(m.vertices.size()), E = static_cast<long>(edges.size()),
               F = static_cast<long>(m.faces.size());
    EXPECT_EQ(V - E + F, 1);
    EXPECT_TRUE(m.holes.empty());
    for (const auto& n : m.normals) EXPECT_NEAR(n.norm(), 1.0, 1e-12);
    for (const auto& v : m.vertices) EXPECT_TRUE(v.allFinite());
}

TEST(Tessellate, ParallelMatchesSerialBitwise) {
    auto a = tessellate(example2_patch(), 64, 5);
    auto b = tessellate_serial(example2_patch(), 64, 5);
    EXPECT_EQ(a.vertices, b.vertices);
    EXPECT_EQ(a.normals, b.normals);
    EXPECT_EQ(a.faces, b.faces);
    EXPECT_EQ(a.striction_polyline, b.striction_polyline);
}

TEST(Tessellate, PlanarAnnulus) {
    RuledPatch patch{paths::great_circle(), LiftField::affine(0, 0, 0, 0, 0, 0.8), -0.5, 0.5};
    auto m = tessellate(patch, 16, 3);
    for (const auto& v : m.vertices) EXPECT_NEAR(v.z(), 0.0, 1e-15);
    for (const auto& n : m.normals) {
        EXPECT_NEAR(std::abs(n.z()), 1.0, 1e-12);
    }
}

TEST(Tessellate, NormalsMatchSurfaceChart) {
    auto patch = example2_patch();
    auto m = tessellate(patch, 8, 4);
    const int i = 3, j = 1;
    const double t = i / 8.0, w = -1.0 + 2.0 * j / 4;
    auto st = striction_point(*patch.path, patch.field, t, false);
    auto s = surface_sample(*patch.path, patch.field, t, w + st.offset);
    EXPECT_LT((m.vertices[i * 5 + j] - s.point).norm(), 1e-12);
    EXPECT_LT((m.normals[i * 5 + j] - s.normal).norm(), 1e-12);
}

TEST(Tessellate, DevelopableConeListsDegenerateApex) {
    RuledPatch patch{example2_path(), LiftField::zero(), 0.0, 1.0};
    auto m = tessellate(patch, 4, 2);
    EXPECT_EQ(m.degenerate_vertices.size(), 5u);
    EXPECT_TRUE(m.holes.empty());
}

TEST(Tessellate, AllCylindricalIsAnError) {
    RuledPatch patch{paths::constant(1.0, 1.0), LiftField::zero()};
    try {
        tessellate(patch, 4, 2);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::AllSamplesDegenerate);
    }
}

TEST(Obj, OneTriangle) {
    TriMesh m;
    m.vertices = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}};
    m.normals = {{0, 0, 1}, {0, 0, 1}, {0, 0, 1}};
    m.faces = {{0, 1, 2}};
    std::ostringstream out;
    write_obj(m, out);
    const std::string text = out.str();
    int v = 0, f = 0;
    std::istringstream lines(text);
    for (std::string line; std::getline(lines, line);) {
        v += line.rfind("v ", 0) == 0;
        f += line.rfind("f ", 0) == 0;
    }
    EXPECT_EQ(v, 3);
    EXPECT_EQ(f, 1);
    EXPECT_NE(text.find("f 1//1 2//2 3//3"), std::string::npos);
}

TEST(Obj, EmptyMeshIsAnError) {
    std::ostringstream out;
    EXPECT_THROW(write_obj(TriMesh{}, out), Error);
    EXPECT_THROW(write_ply(TriMesh{}, out), Error);
}

TEST(Obj, RoundTrip) {
    auto m = tessellate(example2_patch(), 32, 4);
    std::stringstream io;
    write_obj(m, io);
    auto back = read_obj(io);
    ASSERT_EQ(back.vertices.size(), m.vertices.size());
    ASSERT_EQ(back.faces, m.faces);
    for (std::size_t i = 0; i < m.vertices.size(); ++i) {
        EXPECT_LT((back.vertices[i] - m.vertices[i]).cwiseAbs().maxCoeff(), 1e-6);
        EXPECT_NEAR(back.normals[i].norm(), 1.0, 1e-6);
    }
}

TEST(Ply, RoundTrip) {
    auto m = tessellate(example2_patch(), 16, 3);
    std::stringstream io;
    write_ply(m, io);
    auto back = read_ply(io);
    ASSERT_EQ(back.vertices.size(), m.vertices.size());
    ASSERT_EQ(back.faces, m.faces);
    for (std::size_t i = 0; i < m.vertices.size(); ++i) {
        EXPECT_EQ(back.vertices[i], m.vertices[i]);
        EXPECT_EQ(back.normals[i], m.normals[i]);
    }
}

TEST(ProfileCsv, OneSample) {
    std::ostringstream out;
    write_profile_csv(profile(*example2_path(), example_field(), 2), out);
    const std::string two = out.str();
    EXPECT_EQ(std::count(two.begin(), two.end(), '\n'), 3);
    std::ostringstream one;
    write_profile_csv({InvariantSample{}}, one);
    const std::string single = one.str();
    EXPECT_EQ(std::count(single.begin(), single.end(), '\n'), 2);
    std::ostringstream none;
    EXPECT_THROW(write_profile_csv({}, none), Error);
}

TEST(ProfileCsv, FlagsColumn) {
    std::ostringstream out;
    write_profile_csv(profile(*example2_path(), LiftField::zero(), 4), out);
    EXPECT_NE(out.str().find(",developable\n"), std::string::npos);
    std::ostringstream cyl;
    write_profile_csv(profile(*paths::constant(1, 1), LiftField::zero(), 2), cyl);
    EXPECT_NE(cyl.str().find("cylindrical"), std::string::npos);
}

TEST(ProfileCsv, DiagonalProfileRoundTripsBitForBit) {
    auto samples = profile(*paths::diagonal(), example_field(), 128);
    std::stringstream io;
    write_profile_csv(samples, io);
    auto back = read_profile_csv(io);
    ASSERT_EQ(back.size(), samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i) {
        EXPECT_EQ(back[i].t, samples[i].t);
        EXPECT_EQ(back[i].kappa, samples[i].kappa);
        EXPECT_EQ(back[i].kappa_bar, samples[i].kappa_bar);
        EXPECT_EQ(back[i].tau, samples[i].tau);
        EXPECT_EQ(back[i].tau_bar, samples[i].tau_bar);
        EXPECT_EQ(back[i].delta, samples[i].delta);
        EXPECT_EQ(back[i].cot_sigma, samples[i].cot_sigma);
        EXPECT_EQ(back[i].flags, samples[i].flags);
    }
}

TEST(Json, MeshShape) {
    auto j = mesh_to_json(tessellate(example2_patch(), 4, 2));
    EXPECT_EQ(j["vertices"].size(), 15u);
    EXPECT_EQ(j["faces"].size(), 16u);
    EXPECT_EQ(j["vertices"][0].size(), 3u);
    EXPECT_EQ(j["striction"].size(), 5u);
}
