#ifndef SQUIRCLE_DOMAINS_HPP
#define SQUIRCLE_DOMAINS_HPP

#include <optional>
#include <stdexcept>

#include "contour2d.hpp"
#include "fields2d.hpp"
#include "fields3d.hpp"
#include "polygonize3d.hpp"

namespace squircle {

/// Optional replacements for individual domain bounds.
struct DomainOverride {
    std::optional<double> xmin, xmax, ymin, ymax, zmin, zmax;
};

/// Window around the origin: [-1.2 r, 1.2 r]^2 for closed families. `tiles`
/// repeats the window 2 * tiles - 1 times along each axis.
inline Domain2D default_domain2d(const ShapeSpec2D& spec, int cells, int tiles = 1,
                                 const DomainOverride& over = {}) {
    if (tiles < 1) throw std::invalid_argument("tiles must be >= 1");
    const double base = spec.family == Family2D::phase_grid ? 2.5 * spec.r : 1.2 * spec.r;
    const double half = base * (2 * tiles - 1);
    Domain2D d{-half, half, -half, half, cells, cells};
    if (over.xmin) d.xmin = *over.xmin;
    if (over.xmax) d.xmax = *over.xmax;
    if (over.ymin) d.ymin = *over.ymin;
    if (over.ymax) d.ymax = *over.ymax;
    validate(d);
    return d;
}

inline Domain3D default_domain3d(const ShapeSpec3D& spec, int cells, int tiles = 1, const DomainOverride& over = {}) {
    if (tiles < 1) throw std::invalid_argument("tiles must be >= 1");
    const double m = 2 * tiles - 1;
    double hx, hy, z0, z1;
    switch (spec.family) {
    case Family3D::toroid:
    case Family3D::toroid_octic:
        hx = hy = 1.1 * (spec.ring_radius + spec.r);
        z1 = 1.5 * spec.r;
        z0 = -z1;
        break;
    case Family3D::cone_fg:
        hx = hy = 1.2;
        z0 = -0.1 * spec.c;
        z1 = 1.1 * spec.c;
        break;
    case Family3D::cone_lame:
        hx = 1.2 * spec.a;
        hy = 1.2 * spec.b;
        z0 = -0.1 * spec.c;
        z1 = 1.1 * spec.c;
        break;
    case Family3D::cuboctahedron:
        hx = hy = z1 = 1.2 * spec.k;
        z0 = -z1;
        break;
    default:
        hx = hy = z1 = 1.2 * spec.r;
        z0 = -z1;
        break;
    }
    const double zc = 0.5 * (z0 + z1), zh = 0.5 * (z1 - z0) * m;
    Domain3D d{-hx * m, hx * m, -hy * m, hy * m, zc - zh, zc + zh, cells, cells, cells};
    if (over.xmin) d.xmin = *over.xmin;
    if (over.xmax) d.xmax = *over.xmax;
    if (over.ymin) d.ymin = *over.ymin;
    if (over.ymax) d.ymax = *over.ymax;
    if (over.zmin) d.zmin = *over.zmin;
    if (over.zmax) d.zmax = *over.zmax;
    validate(d);
    return d;
}

} // namespace squircle

#endif
