#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <tuple>
#include <vector>

#include <gtest/gtest.h>

#include <squircle/fields3d.hpp>
#include <squircle/mesh_io.hpp>
#include <squircle/polygonize3d.hpp>

using namespace squircle;

namespace {

constexpr double kFourPi = 12.566370614359172954;  // tests/oracles/derived_values.txt

ScalarField3D sphere_field() {
    ShapeSpec3D sp;
    sp.family = Family3D::lame3d;
    sp.p = 2.0;
    sp.r = 1.0;
    return make_field3d(sp);
}

TriangleMesh polygonize(const ScalarField3D& f, const Domain3D& d, unsigned workers = 1) {
    return marching_cubes(sample_grid3d(f, d, workers), workers);
}

Domain3D cube(double half, int n) { return Domain3D{-half, half, -half, half, -half, half, n, n, n}; }

double signed_volume(const TriangleMesh& m) {
    double v = 0.0;
    for (const auto& t : m.triangles)
        v += dot(m.vertices[t[0]], cross(m.vertices[t[1]], m.vertices[t[2]])) / 6.0;
    return v;
}

} // namespace

TEST(SampleGrid3D, ConstantField) {
    const Grid3D g = sample_grid3d([](double, double, double) { return -1.0; }, cube(1.0, 3));
    EXPECT_EQ(g.samples.size(), 64u);
    for (double v : g.samples) EXPECT_EQ(v, -1.0);
}

TEST(SampleGrid3D, SphereCornerSample) {
    const Grid3D g = sample_grid3d(sphere_field(), cube(2.0, 2));
    EXPECT_NEAR(g.at(0, 0, 0), 2.4641016151377545871, 1e-15);
    EXPECT_EQ(g.at(1, 1, 1), -1.0);
}

TEST(SampleGrid3D, XFastestOrder) {
    const Grid3D g = sample_grid3d([](double x, double y, double z) { return x + 10 * y + 100 * z; },
                                   Domain3D{0, 2, 0, 3, 0, 4, 2, 3, 4});
    EXPECT_EQ(g.samples[1], 1.0);
    EXPECT_EQ(g.samples[3], 10.0);
    EXPECT_EQ(g.samples[12], 100.0);
    EXPECT_EQ(g.at(2, 3, 4), 432.0);
}

TEST(SampleGrid3D, RejectsSingleCellAxis) {
    Domain3D d = cube(1.0, 4);
    d.nz = 1;
    EXPECT_THROW(sample_grid3d(sphere_field(), d), std::invalid_argument);
    d = cube(1.0, 4);
    d.zmax = d.zmin;
    EXPECT_THROW(sample_grid3d(sphere_field(), d), std::invalid_argument);
}

TEST(SampleGrid3D, NonFiniteSampleIsNumericError) {
    const ScalarField3D bad = [](double x, double, double) { return x > 0 ? std::nan("") : 1.0; };
    EXPECT_THROW(sample_grid3d(bad, cube(1.0, 2), 1), NumericError);
}

TEST(MarchingCubes, UniformSignGivesEmptyMesh) {
    EXPECT_TRUE(polygonize([](double, double, double) { return 1.0; }, cube(1.0, 8)).empty());
    EXPECT_TRUE(polygonize([](double, double, double) { return -1.0; }, cube(1.0, 8)).empty());
}

TEST(MarchingCubes, SphereIsWatertightWithEulerTwo) {
    const TriangleMesh m = polygonize(sphere_field(), cube(1.2, 64));
    const MeshStats st = mesh_stats(m);
    EXPECT_TRUE(st.watertight);
    EXPECT_EQ(st.boundary_edge_count, 0u);
    EXPECT_EQ(st.euler_characteristic, 2);
    EXPECT_NEAR(st.total_area / kFourPi, 1.0, 0.01);
}

TEST(MarchingCubes, RoundTorusHasEulerZero) {
    ShapeSpec3D sp;
    sp.family = Family3D::toroid;
    sp.s = 0.0;
    sp.ring_radius = 2.0;
    sp.r = 0.5;
    const TriangleMesh m =
        polygonize(make_field3d(sp), Domain3D{-2.75, 2.75, -2.75, 2.75, -0.75, 0.75, 128, 128, 48}, 0);
    const MeshStats st = mesh_stats(m);
    EXPECT_TRUE(st.watertight);
    EXPECT_EQ(st.euler_characteristic, 0);
}

TEST(MarchingCubes, HemisphereFromIntersection) {
    const ScalarField3D half = csg_intersect(sphere_field(), [](double, double, double z) { return z; });
    const MeshStats st = mesh_stats(polygonize(half, cube(1.2, 48)));
    EXPECT_TRUE(st.watertight);
    EXPECT_EQ(st.euler_characteristic, 2);
}

TEST(MarchingCubes, IntersectionWithVeryNegativeFieldKeepsTheSurface) {
    const ScalarField3D same = csg_intersect(sphere_field(), [](double, double, double) { return -1e30; });
    const TriangleMesh a = polygonize(sphere_field(), cube(1.2, 24));
    const TriangleMesh b = polygonize(same, cube(1.2, 24));
    EXPECT_EQ(a.vertices, b.vertices);
    EXPECT_EQ(a.triangles, b.triangles);
}

TEST(MarchingCubes, IndependentOfWorkerCount) {
    ShapeSpec3D sp;
    sp.family = Family3D::periodic3d;
    sp.s = 0.7;
    const ScalarField3D f = make_field3d(sp);
    const Domain3D d = cube(3.0, 40);
    const TriangleMesh one = polygonize(f, d, 1);
    for (unsigned w : {2u, 3u, 7u}) {
        const TriangleMesh many = polygonize(f, d, w);
        EXPECT_EQ(one.vertices, many.vertices) << "workers=" << w;
        EXPECT_EQ(one.triangles, many.triangles) << "workers=" << w;
    }
}

TEST(MarchingCubes, TriangleCountGrowsWithResolution) {
    std::size_t previous = 0;
    for (int n : {32, 64, 128}) {
        const std::size_t count = polygonize(sphere_field(), cube(1.2, n), 0).triangles.size();
        EXPECT_GT(count, previous) << "n=" << n;
        previous = count;
    }
}

TEST(MarchingCubes, VerticesLieCloseToTheZeroSet) {
    ShapeSpec3D sp;
    sp.family = Family3D::sphube;
    sp.s = 0.8;
    const ScalarField3D f = make_field3d(sp);
    const Grid3D g = sample_grid3d(f, cube(1.2, 32), 1);
    double variation = 0.0;
    const Domain3D& d = g.domain;
    for (int k = 0; k <= d.nz; ++k)
        for (int j = 0; j <= d.ny; ++j)
            for (int i = 0; i <= d.nx; ++i) {
                if (i < d.nx) variation = std::max(variation, std::fabs(g.at(i + 1, j, k) - g.at(i, j, k)));
                if (j < d.ny) variation = std::max(variation, std::fabs(g.at(i, j + 1, k) - g.at(i, j, k)));
                if (k < d.nz) variation = std::max(variation, std::fabs(g.at(i, j, k + 1) - g.at(i, j, k)));
            }
    const TriangleMesh m = marching_cubes(g, 1);
    ASSERT_FALSE(m.empty());
    for (const Point3& v : m.vertices) EXPECT_LE(std::fabs(f(v.x, v.y, v.z)), variation);
}

TEST(MarchingCubes, OutwardWindingAndNoDegenerateTriangles) {
    const TriangleMesh m = polygonize(sphere_field(), cube(1.2, 32));
    EXPECT_NEAR(signed_volume(m), 4.0 / 3.0 * std::numbers::pi, 0.02);
    for (const auto& t : m.triangles) {
        EXPECT_NE(t[0], t[1]);
        EXPECT_NE(t[1], t[2]);
        EXPECT_NE(t[0], t[2]);
        for (auto idx : t) EXPECT_LT(idx, m.vertices.size());
        const Point3& a = m.vertices[t[0]];
        EXPECT_GT(norm(cross(m.vertices[t[1]] - a, m.vertices[t[2]] - a)), 0.0);
    }
}

TEST(MarchingCubes, WeldedVerticesAreUnique) {
    const TriangleMesh m = polygonize(sphere_field(), cube(1.2, 24));
    std::vector<Point3> sorted = m.vertices;
    std::sort(sorted.begin(), sorted.end(), [](const Point3& a, const Point3& b) {
        return std::tie(a.x, a.y, a.z) < std::tie(b.x, b.y, b.z);
    });
    EXPECT_EQ(std::adjacent_find(sorted.begin(), sorted.end()), sorted.end());
}

TEST(MarchingCubes, LatticeZerosAreNudged) {
    // unit sphere passes exactly through lattice points on the axes
    const MeshStats st = mesh_stats(polygonize(sphere_field(), cube(2.0, 8)));
    EXPECT_TRUE(st.watertight);
    EXPECT_EQ(st.euler_characteristic, 2);
}
