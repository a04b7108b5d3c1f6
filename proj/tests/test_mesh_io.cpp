#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <limits>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include <squircle/contour2d.hpp>
#include <squircle/fields3d.hpp>
#include <squircle/mesh_io.hpp>
#include <squircle/polygonize3d.hpp>

using namespace squircle;

namespace {

TriangleMesh single_triangle() {
    TriangleMesh m;
    m.vertices = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}};
    m.triangles = {{0, 1, 2}};
    return m;
}

TriangleMesh tetrahedron() {
    TriangleMesh m;
    m.vertices = {{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
    m.triangles = {{0, 1, 2}, {0, 3, 1}, {0, 2, 3}, {1, 3, 2}};
    return m;
}

TriangleMesh sphere_mesh(int n) {
    ShapeSpec3D sp;
    sp.family = Family3D::lame3d;
    return marching_cubes(sample_grid3d(make_field3d(sp), Domain3D{-1.2, 1.2, -1.2, 1.2, -1.2, 1.2, n, n, n}, 1), 1);
}

std::string obj_of(const TriangleMesh& m, const std::string& label = "label") {
    std::ostringstream os;
    write_obj(m, os, label);
    return os.str();
}

std::string stl_of(const TriangleMesh& m) {
    std::ostringstream os(std::ios::binary);
    write_stl(m, os, "label");
    return os.str();
}

float f32_at(const std::string& bytes, std::size_t offset) {
    std::uint32_t u = 0;
    for (int b = 3; b >= 0; --b) u = (u << 8) | static_cast<unsigned char>(bytes[offset + b]);
    float f;
    std::memcpy(&f, &u, 4);
    return f;
}

std::vector<Polyline> unit_circle_lines(const Domain2D& d) {
    const ScalarField2D f = [](double x, double y) { return x * x + y * y - 1.0; };
    return marching_squares(sample_grid2d(f, d, 1), &f, 1);
}

} // namespace

TEST(WriteObj, SingleTriangleBody) {
    EXPECT_EQ(obj_of(single_triangle()), "# squircle\n# label\n"
                                         "v 0.000000000 0.000000000 0.000000000\n"
                                         "v 1.000000000 0.000000000 0.000000000\n"
                                         "v 0.000000000 1.000000000 0.000000000\n"
                                         "f 1 2 3\n");
}

TEST(WriteObj, EmptyMeshIsHeaderOnly) { EXPECT_EQ(obj_of(TriangleMesh{}, "family=sphube s=1 r=1"), "# squircle\n# family=sphube s=1 r=1\n"); }

TEST(WriteObj, ByteIdenticalOnRepeat) {
    const TriangleMesh m = sphere_mesh(16);
    EXPECT_EQ(obj_of(m), obj_of(m));
}

TEST(WriteObj, NineFractionalDigits) {
    const std::string text = obj_of(sphere_mesh(12));
    const std::regex vertex(R"(^v -?\d+\.\d{9} -?\d+\.\d{9} -?\d+\.\d{9}$)");
    std::istringstream in(text);
    std::string line;
    int vertices = 0;
    while (std::getline(in, line)) {
        if (line.rfind("v ", 0) != 0) continue;
        ++vertices;
        EXPECT_TRUE(std::regex_match(line, vertex)) << line;
    }
    EXPECT_GT(vertices, 0);
}

TEST(WriteStl, EmptyMeshIs84Bytes) {
    const std::string bytes = stl_of(TriangleMesh{});
    EXPECT_EQ(bytes.size(), 84u);
    EXPECT_EQ(bytes.substr(80), std::string(4, '\0'));
}

TEST(WriteStl, SingleTriangleLayout) {
    const std::string bytes = stl_of(single_triangle());
    ASSERT_EQ(bytes.size(), 134u);
    EXPECT_EQ(static_cast<unsigned char>(bytes[80]), 1u);
    EXPECT_EQ(bytes.substr(81, 3), std::string(3, '\0'));
    EXPECT_EQ(f32_at(bytes, 84), 0.0f);
    EXPECT_EQ(f32_at(bytes, 88), 0.0f);
    EXPECT_EQ(f32_at(bytes, 92), 1.0f);
    EXPECT_EQ(f32_at(bytes, 96 + 12), 1.0f);  // second vertex x
    EXPECT_EQ(bytes.substr(132), std::string(2, '\0'));
    EXPECT_EQ(bytes.substr(0, 8), "squircle");
}

TEST(WriteStl, MatchesObjCoordinates) {
    const TriangleMesh m = sphere_mesh(10);
    const std::string bytes = stl_of(m);
    ASSERT_EQ(bytes.size(), 84u + 50u * m.triangles.size());
    std::istringstream in(obj_of(m));
    std::string line;
    std::vector<Point3> from_obj;
    while (std::getline(in, line)) {
        if (line.rfind("v ", 0) != 0) continue;
        std::istringstream fields(line.substr(2));
        Point3 p;
        fields >> p.x >> p.y >> p.z;
        from_obj.push_back(p);
    }
    ASSERT_EQ(from_obj.size(), m.vertices.size());
    for (std::size_t t = 0; t < m.triangles.size(); ++t) {
        for (int c = 0; c < 3; ++c) {
            const Point3& p = from_obj[m.triangles[t][c]];
            const std::size_t at = 84 + 50 * t + 12 + 12 * c;
            EXPECT_NEAR(f32_at(bytes, at), p.x, 1e-6);
            EXPECT_NEAR(f32_at(bytes, at + 4), p.y, 1e-6);
            EXPECT_NEAR(f32_at(bytes, at + 8), p.z, 1e-6);
        }
    }
}

TEST(WriteSvg, EmptyListIsAValidDocument) {
    std::ostringstream os;
    write_svg({}, Domain2D{-1, 1, -1, 1, 8, 8}, os);
    const std::string doc = os.str();
    EXPECT_EQ(doc.rfind("<?xml", 0), 0u);
    EXPECT_NE(doc.find("<svg xmlns=\"http://www.w3.org/2000/svg\""), std::string::npos);
    EXPECT_NE(doc.find("</svg>"), std::string::npos);
    EXPECT_EQ(doc.find("<path"), std::string::npos);
}

TEST(WriteSvg, ClosedSquareIsOneClosedPath) {
    Polyline square;
    square.points = {{-1, -1}, {1, -1}, {1, 1}, {-1, 1}};
    square.closed = true;
    std::ostringstream os;
    write_svg({square}, Domain2D{-2, 2, -2, 2, 8, 8}, os);
    const std::string doc = os.str();
    const auto start = doc.find(" d=\"");
    ASSERT_NE(start, std::string::npos);
    const std::string d = doc.substr(start + 4, doc.find('"', start + 4) - start - 4);
    EXPECT_EQ(std::count(d.begin(), d.end(), 'M'), 1);
    EXPECT_EQ(std::count(d.begin(), d.end(), 'L'), 3);
    EXPECT_EQ(d.back(), 'Z');
    EXPECT_EQ(doc.find("<path", start), std::string::npos);
    // y is flipped: world (-1, 1) appears as screen (-1, -1)
    EXPECT_NE(d.find("L-1.000000 -1.000000"), std::string::npos) << d;
    EXPECT_NE(doc.find("viewBox=\"-2.000000 -2.000000 4.000000 4.000000\""), std::string::npos);
}

TEST(WriteSvg, CirclePathStaysWithinOneCell) {
    const Domain2D d{-2, 2, -2, 2, 64, 64};
    const auto lines = unit_circle_lines(d);
    std::ostringstream os;
    write_svg(lines, d, os);
    const std::string doc = os.str();
    const std::regex coord(R"([ML](-?\d+\.\d+) (-?\d+\.\d+))");
    double lo = 0.0, hi = 0.0;
    int count = 0;
    for (auto it = std::sregex_iterator(doc.begin(), doc.end(), coord); it != std::sregex_iterator(); ++it) {
        for (int g : {1, 2}) {
            const double v = std::stod((*it)[g].str());
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        ++count;
    }
    EXPECT_GT(count, 100);
    EXPECT_GE(lo, -1.0 - d.dx());
    EXPECT_LE(hi, 1.0 + d.dx());
    EXPECT_LT(lo, -0.99);
    EXPECT_GT(hi, 0.99);
}

TEST(WriteCsv, EmptyListIsHeaderOnly) {
    std::ostringstream os;
    write_csv({}, os);
    EXPECT_EQ(os.str(), "polyline_id,point_index,x,y,closed\n");
}

TEST(WriteCsv, OpenTwoPointPolyline) {
    Polyline seg;
    seg.points = {{0.5, -0.25}, {1.0, 2.0}};
    std::ostringstream os;
    write_csv({seg}, os);
    EXPECT_EQ(os.str(), "polyline_id,point_index,x,y,closed\n"
                        "0,0,0.500000000,-0.250000000,0\n"
                        "0,1,1.000000000,2.000000000,0\n");
}

TEST(WriteCsv, RoundTripRecoversCoordinates) {
    const auto lines = unit_circle_lines(Domain2D{-1.5, 1.5, -1.5, 1.5, 40, 40});
    std::ostringstream os;
    write_csv(lines, os);
    std::istringstream in(os.str());
    std::string row;
    std::getline(in, row);
    std::size_t rows = 0;
    while (std::getline(in, row)) {
        std::istringstream cells(row);
        std::string id, k, x, y, closed;
        std::getline(cells, id, ',');
        std::getline(cells, k, ',');
        std::getline(cells, x, ',');
        std::getline(cells, y, ',');
        std::getline(cells, closed, ',');
        const Point2& p = lines.at(std::stoul(id)).points.at(std::stoul(k));
        EXPECT_NEAR(std::stod(x), p.x, 1e-9);
        EXPECT_NEAR(std::stod(y), p.y, 1e-9);
        EXPECT_EQ(closed, lines[std::stoul(id)].closed ? "1" : "0");
        ++rows;
    }
    std::size_t expected = 0;
    for (const auto& l : lines) expected += l.points.size();
    EXPECT_EQ(rows, expected);
}

TEST(MeshStats, SingleTriangle) {
    const MeshStats st = mesh_stats(single_triangle());
    EXPECT_EQ(st.vertex_count, 3u);
    EXPECT_EQ(st.edge_count, 3u);
    EXPECT_EQ(st.triangle_count, 1u);
    EXPECT_EQ(st.euler_characteristic, 1);
    EXPECT_EQ(st.boundary_edge_count, 3u);
    EXPECT_FALSE(st.watertight);
    EXPECT_DOUBLE_EQ(st.total_area, 0.5);
}

TEST(MeshStats, Tetrahedron) {
    const MeshStats st = mesh_stats(tetrahedron());
    EXPECT_EQ(st.euler_characteristic, 2);
    EXPECT_EQ(st.edge_count, 6u);
    EXPECT_TRUE(st.watertight);
    EXPECT_EQ(st.boundary_edge_count, 0u);
    EXPECT_NEAR(st.total_area, 4 * std::sqrt(3.0) / 4 * 8, 1e-12);
}

TEST(MeshStats, SphereMesh) {
    const MeshStats st = mesh_stats(sphere_mesh(64));
    EXPECT_TRUE(st.watertight);
    EXPECT_EQ(st.euler_characteristic, 2);
    EXPECT_NEAR(st.total_area, 12.566370614359172954, 0.01 * 12.566370614359172954);
}

TEST(MeshStats, NonManifoldEdgeIsNotWatertight) {
    TriangleMesh m = tetrahedron();
    m.vertices.push_back({3, 3, 3});
    m.triangles.push_back({0, 1, 4});
    const MeshStats st = mesh_stats(m);
    EXPECT_FALSE(st.watertight);
    EXPECT_EQ(st.boundary_edge_count, 2u);
}

TEST(Writers, FailedSinkIsIoError) {
    std::ostringstream bad;
    bad.setstate(std::ios::badbit);
    EXPECT_THROW(write_obj(single_triangle(), bad), IoError);
    EXPECT_THROW(write_stl(single_triangle(), bad), IoError);
    EXPECT_THROW(write_svg({}, Domain2D{-1, 1, -1, 1, 8, 8}, bad), IoError);
    EXPECT_THROW(write_csv({}, bad), IoError);
}
