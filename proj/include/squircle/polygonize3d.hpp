#ifndef SQUIRCLE_POLYGONIZE3D_HPP
#define SQUIRCLE_POLYGONIZE3D_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "contour2d.hpp"
#include "core.hpp"
#include "marching_cubes_table.hpp"
#include "parallel.hpp"

namespace squircle {

struct Domain3D {
    double xmin = -1.0, xmax = 1.0;
    double ymin = -1.0, ymax = 1.0;
    double zmin = -1.0, zmax = 1.0;
    int nx = 2, ny = 2, nz = 2;

    double x(int i) const { return i == nx ? xmax : xmin + i * ((xmax - xmin) / nx); }
    double y(int j) const { return j == ny ? ymax : ymin + j * ((ymax - ymin) / ny); }
    double z(int k) const { return k == nz ? zmax : zmin + k * ((zmax - zmin) / nz); }
};

inline void validate(const Domain3D& d) {
    if (d.nx < 2 || d.ny < 2 || d.nz < 2) throw std::invalid_argument("domain needs at least 2 cells per axis");
    if (!(d.xmax > d.xmin) || !(d.ymax > d.ymin) || !(d.zmax > d.zmin))
        throw std::invalid_argument("domain bounds must satisfy max > min");
    for (double b : {d.xmin, d.xmax, d.ymin, d.ymax, d.zmin, d.zmax})
        if (!std::isfinite(b)) throw std::invalid_argument("domain bounds must be finite");
}

/// Samples in x-fastest order: index = (k * (ny+1) + j) * (nx+1) + i.
struct Grid3D {
    Domain3D domain;
    std::vector<double> samples;

    std::size_t index(int i, int j, int k) const {
        return (static_cast<std::size_t>(k) * (domain.ny + 1) + j) * (domain.nx + 1) + i;
    }
    double at(int i, int j, int k) const { return samples[index(i, j, k)]; }
};

/// Indexed triangles, counter-clockwise when seen from the positive side.
struct TriangleMesh {
    std::vector<Point3> vertices;
    std::vector<std::array<std::uint32_t, 3>> triangles;

    bool empty() const { return triangles.empty(); }
};

inline Grid3D sample_grid3d(const ScalarField3D& field, const Domain3D& domain, unsigned workers = 0) {
    validate(domain);
    Grid3D grid{domain, std::vector<double>(static_cast<std::size_t>(domain.nx + 1) * (domain.ny + 1) * (domain.nz + 1))};
    parallel_bands(static_cast<std::size_t>(domain.nz + 1), workers, [&](std::size_t k0, std::size_t k1) {
        for (auto k = static_cast<int>(k0); k < static_cast<int>(k1); ++k) {
            const double z = domain.z(k);
            for (int j = 0; j <= domain.ny; ++j) {
                const double y = domain.y(j);
                for (int i = 0; i <= domain.nx; ++i) {
                    const double x = domain.x(i);
                    const double v = field(x, y, z);
                    if (!std::isfinite(v))
                        throw NumericError("non-finite field value at (" + format_general(x) + ", " +
                                           format_general(y) + ", " + format_general(z) + ")");
                    grid.samples[grid.index(i, j, k)] = v;
                }
            }
        }
    });
    return grid;
}

/// Marching cubes over every cell of `grid`. Vertices are shared through
/// their lattice edge, so neighbouring cells reference the same index.
inline TriangleMesh marching_cubes(const Grid3D& grid, unsigned workers = 0) {
    const Domain3D& d = grid.domain;
    validate(d);
    if (grid.samples.size() != static_cast<std::size_t>(d.nx + 1) * (d.ny + 1) * (d.nz + 1))
        throw std::invalid_argument("grid sample count does not match its domain");

    std::vector<double> v = grid.samples;
    nudge_zeros(v);

    // edge key = 3 * (index of the lower lattice point) + axis
    using Key = std::uint64_t;
    using Tri = std::array<Key, 3>;
    auto key_of = [&](int i, int j, int k, int edge) -> Key {
        const auto& ends = mc::kEdgeCorners[edge];
        const auto& a = mc::kCorner[ends[0]];
        const auto& b = mc::kCorner[ends[1]];
        const int axis = a[0] != b[0] ? 0 : (a[1] != b[1] ? 1 : 2);
        const int li = i + std::min(a[0], b[0]), lj = j + std::min(a[1], b[1]), lk = k + std::min(a[2], b[2]);
        return 3 * static_cast<Key>(grid.index(li, lj, lk)) + axis;
    };

    std::vector<std::vector<Tri>> slabs(static_cast<std::size_t>(d.nz));
    parallel_bands(static_cast<std::size_t>(d.nz), workers, [&](std::size_t k0, std::size_t k1) {
        for (auto k = static_cast<int>(k0); k < static_cast<int>(k1); ++k) {
            auto& out = slabs[k];
            for (int j = 0; j < d.ny; ++j) {
                for (int i = 0; i < d.nx; ++i) {
                    unsigned cube = 0;
                    for (int c = 0; c < 8; ++c) {
                        const auto& o = mc::kCorner[c];
                        if (v[grid.index(i + o[0], j + o[1], k + o[2])] < 0.0) cube |= 1u << c;
                    }
                    const auto* row = mc::kTriangles[cube];
                    for (int t = 0; t < 16 && row[t] >= 0; t += 3) {
                        // the table winds triangles clockwise seen from outside
                        out.push_back({key_of(i, j, k, row[t]), key_of(i, j, k, row[t + 2]), key_of(i, j, k, row[t + 1])});
                    }
                }
            }
        }
    });

    const auto sx = static_cast<Key>(d.nx + 1), sy = static_cast<Key>(d.ny + 1);
    auto position = [&](Key key) -> Point3 {
        const int axis = static_cast<int>(key % 3);
        const Key lattice = key / 3;
        const int i = static_cast<int>(lattice % sx);
        const int j = static_cast<int>((lattice / sx) % sy);
        const int k = static_cast<int>(lattice / (sx * sy));
        const int i1 = i + (axis == 0), j1 = j + (axis == 1), k1 = k + (axis == 2);
        const double a = v[grid.index(i, j, k)], b = v[grid.index(i1, j1, k1)];
        const double t = a / (a - b);
        const Point3 p0{d.x(i), d.y(j), d.z(k)}, p1{d.x(i1), d.y(j1), d.z(k1)};
        return p0 + t * (p1 - p0);
    };

    TriangleMesh mesh;
    std::unordered_map<Key, std::uint32_t> index_of;
    for (const auto& slab : slabs) {
        for (const Tri& tri : slab) {
            const Point3 p[3] = {position(tri[0]), position(tri[1]), position(tri[2])};
            const Point3 n = cross(p[1] - p[0], p[2] - p[0]);
            if (n.x == 0.0 && n.y == 0.0 && n.z == 0.0) continue; // zero area
            std::array<std::uint32_t, 3> out{};
            for (int c = 0; c < 3; ++c) {
                auto [it, inserted] = index_of.try_emplace(tri[c], static_cast<std::uint32_t>(mesh.vertices.size()));
                if (inserted) mesh.vertices.push_back(p[c]);
                out[c] = it->second;
            }
            mesh.triangles.push_back(out);
        }
    }
    return mesh;
}

} // namespace squircle

#endif
