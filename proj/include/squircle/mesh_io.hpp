#ifndef SQUIRCLE_MESH_IO_HPP
#define SQUIRCLE_MESH_IO_HPP

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <ostream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "contour2d.hpp"
#include "core.hpp"
#include "polygonize3d.hpp"

namespace squircle {

struct MeshStats {
    std::size_t vertex_count = 0;
    std::size_t edge_count = 0;
    std::size_t triangle_count = 0;
    long long euler_characteristic = 0;
    bool watertight = false;
    std::size_t boundary_edge_count = 0;
    double total_area = 0.0;
};

inline MeshStats mesh_stats(const TriangleMesh& mesh) {
    std::unordered_map<std::uint64_t, int> edge_use;
    edge_use.reserve(mesh.triangles.size() * 2);
    MeshStats st;
    for (const auto& t : mesh.triangles) {
        for (int e = 0; e < 3; ++e) {
            const std::uint64_t a = t[e], b = t[(e + 1) % 3];
            ++edge_use[std::min(a, b) << 32 | std::max(a, b)];
        }
        const Point3& p0 = mesh.vertices[t[0]];
        st.total_area += 0.5 * norm(cross(mesh.vertices[t[1]] - p0, mesh.vertices[t[2]] - p0));
    }
    bool manifold = true;
    for (const auto& [edge, uses] : edge_use) {
        if (uses == 1) ++st.boundary_edge_count;
        if (uses != 2) manifold = false;
    }
    st.vertex_count = mesh.vertices.size();
    st.edge_count = edge_use.size();
    st.triangle_count = mesh.triangles.size();
    st.euler_characteristic = static_cast<long long>(st.vertex_count) - static_cast<long long>(st.edge_count) +
                              static_cast<long long>(st.triangle_count);
    st.watertight = manifold && st.boundary_edge_count == 0;
    return st;
}

namespace detail {

inline void check_sink(const std::ostream& out, std::string_view what) {
    if (!out) throw IoError("failed writing " + std::string(what));
}

inline void put_u32(std::ostream& out, std::uint32_t v) {
    const char bytes[4] = {static_cast<char>(v & 0xff), static_cast<char>((v >> 8) & 0xff),
                           static_cast<char>((v >> 16) & 0xff), static_cast<char>((v >> 24) & 0xff)};
    out.write(bytes, 4);
}

inline void put_f32(std::ostream& out, float f) { put_u32(out, std::bit_cast<std::uint32_t>(f)); }

} // namespace detail

/// Wavefront OBJ: two comment lines, then v and f records (1-based).
inline void write_obj(const TriangleMesh& mesh, std::ostream& out, std::string_view label = "") {
    out << "# squircle\n# " << label << '\n';
    for (const auto& p : mesh.vertices)
        out << "v " << format_real(p.x) << ' ' << format_real(p.y) << ' ' << format_real(p.z) << '\n';
    for (const auto& t : mesh.triangles) out << "f " << t[0] + 1 << ' ' << t[1] + 1 << ' ' << t[2] + 1 << '\n';
    detail::check_sink(out, "OBJ");
}

/// Binary little-endian STL with normals taken from the triangle winding.
inline void write_stl(const TriangleMesh& mesh, std::ostream& out, std::string_view label = "") {
    std::array<char, 80> header{};
    const std::string text = "squircle " + std::string(label);
    std::memcpy(header.data(), text.data(), std::min(text.size(), header.size()));
    out.write(header.data(), header.size());
    detail::put_u32(out, static_cast<std::uint32_t>(mesh.triangles.size()));
    for (const auto& t : mesh.triangles) {
        const Point3 &a = mesh.vertices[t[0]], &b = mesh.vertices[t[1]], &c = mesh.vertices[t[2]];
        Point3 n = cross(b - a, c - a);
        const double len = norm(n);
        n = len > 0.0 ? (1.0 / len) * n : Point3{};
        for (const Point3& p : {n, a, b, c}) {
            detail::put_f32(out, static_cast<float>(p.x));
            detail::put_f32(out, static_cast<float>(p.y));
            detail::put_f32(out, static_cast<float>(p.z));
        }
        out.write("\0\0", 2);
    }
    detail::check_sink(out, "STL");
}

/// SVG 1.1 drawing of the polylines; world y is flipped to screen y.
inline void write_svg(const std::vector<Polyline>& lines, const Domain2D& domain, std::ostream& out) {
    validate(domain);
    const double w = domain.xmax - domain.xmin, h = domain.ymax - domain.ymin;
    const double stroke = 0.004 * std::max(w, h);
    const int px_w = 512, px_h = static_cast<int>(std::lround(512.0 * h / w));
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << px_w << "\" height=\"" << px_h
        << "\" viewBox=\"" << format_real(domain.xmin, 6) << ' ' << format_real(-domain.ymax, 6) << ' '
        << format_real(w, 6) << ' ' << format_real(h, 6) << "\">\n";
    for (const auto& line : lines) {
        out << "<path fill=\"none\" stroke=\"black\" stroke-width=\"" << format_real(stroke, 6) << "\" d=\"";
        for (std::size_t k = 0; k < line.points.size(); ++k) {
            out << (k == 0 ? "M" : " L") << format_real(line.points[k].x, 6) << ' '
                << format_real(-line.points[k].y + 0.0, 6);
        }
        if (line.closed) out << " Z";
        out << "\"/>\n";
    }
    out << "</svg>\n";
    detail::check_sink(out, "SVG");
}

inline void write_csv(const std::vector<Polyline>& lines, std::ostream& out) {
    out << "polyline_id,point_index,x,y,closed\n";
    for (std::size_t id = 0; id < lines.size(); ++id) {
        const auto& line = lines[id];
        for (std::size_t k = 0; k < line.points.size(); ++k)
            out << id << ',' << k << ',' << format_real(line.points[k].x) << ',' << format_real(line.points[k].y)
                << ',' << (line.closed ? 1 : 0) << '\n';
    }
    detail::check_sink(out, "CSV");
}

} // namespace squircle

#endif
