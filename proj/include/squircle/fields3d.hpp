#ifndef SQUIRCLE_FIELDS3D_HPP
#define SQUIRCLE_FIELDS3D_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "core.hpp"
#include "fields2d.hpp"

namespace squircle {

enum class Family3D { lame3d, sphube, periodic3d, oblique3d, toroid, toroid_octic, cone_fg, cone_lame, cuboctahedron };

inline constexpr std::array<std::pair<Family3D, std::string_view>, 9> kFamily3DNames{{
    {Family3D::lame3d, "lame3d"},
    {Family3D::sphube, "sphube"},
    {Family3D::periodic3d, "periodic3d"},
    {Family3D::oblique3d, "oblique3d"},
    {Family3D::toroid, "toroid"},
    {Family3D::toroid_octic, "toroid_octic"},
    {Family3D::cone_fg, "cone_fg"},
    {Family3D::cone_lame, "cone_lame"},
    {Family3D::cuboctahedron, "cuboctahedron"},
}};

inline std::string_view to_string(Family3D f) {
    for (const auto& [family, name] : kFamily3DNames)
        if (family == f) return name;
    return "?";
}

inline std::optional<Family3D> parse_family3d(std::string_view name) {
    for (const auto& [family, n] : kFamily3DNames)
        if (n == name) return family;
    return std::nullopt;
}

/// Parameters of a squircular surface. Only the fields relevant to `family` are read.
struct ShapeSpec3D {
    Family3D family = Family3D::sphube;
    double p = 2.0;           ///< exponent (lame3d, cone_lame)
    double s = 0.0;           ///< squareness
    double r = 1.0;           ///< scale, or tube radius for toroids
    double h = 0.0;           ///< overshoot (oblique3d only)
    double ring_radius = 2.0; ///< toroid: hole centre to tube centre
    double a = 1.0;           ///< cone semi-axes
    double b = 1.0;
    double c = 1.0;           ///< cone height
    double k = 1.0;           ///< cuboctahedron scale
    double cc = 2.0;          ///< cuboctahedron cross-term constant
};

inline void validate(const ShapeSpec3D& spec) {
    auto fail = [](const std::string& what) { throw std::invalid_argument(what); };
    auto unit_squareness = [&] {
        if (!(spec.s >= 0.0 && spec.s <= 1.0)) fail("squareness must lie in [0, 1]");
    };
    switch (spec.family) {
    case Family3D::lame3d:
        if (!(spec.r > 0.0) || !std::isfinite(spec.r)) fail("radius must be a finite value > 0");
        if (std::isnan(spec.p) || spec.p < 1.0) fail("exponent p must be >= 1");
        break;
    case Family3D::sphube:
    case Family3D::periodic3d:
        if (!(spec.r > 0.0) || !std::isfinite(spec.r)) fail("radius must be a finite value > 0");
        unit_squareness();
        break;
    case Family3D::oblique3d:
        if (!(spec.r > 0.0) || !std::isfinite(spec.r)) fail("radius must be a finite value > 0");
        unit_squareness();
        if (!(spec.h >= 0.0 && spec.h <= 4.0)) fail("overshoot must lie in [0, 4]");
        break;
    case Family3D::toroid:
    case Family3D::toroid_octic:
        if (!(spec.r > 0.0)) fail("tube radius r must be > 0");
        if (!(spec.ring_radius > spec.r) || !std::isfinite(spec.ring_radius))
            fail("ring radius R must be finite and exceed the tube radius r");
        unit_squareness();
        break;
    case Family3D::cone_fg:
        if (!(spec.c > 0.0) || !std::isfinite(spec.c)) fail("cone height c must be a finite value > 0");
        unit_squareness();
        break;
    case Family3D::cone_lame:
        if (!(spec.c > 0.0) || !std::isfinite(spec.c)) fail("cone height c must be a finite value > 0");
        if (!(spec.a > 0.0) || !(spec.b > 0.0)) fail("cone semi-axes a, b must be > 0");
        if (!(spec.p >= 1.0 && spec.p <= 2.0)) fail("cone exponent p must lie in [1, 2]");
        break;
    case Family3D::cuboctahedron:
        if (!(spec.k > 0.0) || !std::isfinite(spec.k)) fail("scale k must be a finite value > 0");
        if (!std::isfinite(spec.cc)) fail("cross-term constant must be finite");
        break;
    }
}

/// Soft range checks; the returned messages are advisory.
inline std::vector<std::string> warnings(const ShapeSpec3D& spec) {
    std::vector<std::string> out;
    if (spec.family == Family3D::cuboctahedron && !(spec.cc >= 1.5 && spec.cc <= 4.0))
        out.push_back("cross-term constant outside [1.5, 4] gives a poor cuboctahedron approximation");
    return out;
}

inline std::string describe(const ShapeSpec3D& spec) {
    std::string out = "family=" + std::string(to_string(spec.family));
    auto add = [&](std::string_view key, double v) { out += " " + std::string(key) + "=" + format_general(v); };
    switch (spec.family) {
    case Family3D::lame3d: add("p", spec.p); add("r", spec.r); break;
    case Family3D::sphube:
    case Family3D::periodic3d: add("s", spec.s); add("r", spec.r); break;
    case Family3D::oblique3d: add("s", spec.s); add("r", spec.r); add("h", spec.h); break;
    case Family3D::toroid:
    case Family3D::toroid_octic: add("s", spec.s); add("R", spec.ring_radius); add("r", spec.r); break;
    case Family3D::cone_fg: add("s", spec.s); add("c", spec.c); break;
    case Family3D::cone_lame: add("p", spec.p); add("a", spec.a); add("b", spec.b); add("c", spec.c); break;
    case Family3D::cuboctahedron: add("k", spec.k); add("cc", spec.cc); break;
    }
    return out;
}

inline double eval_lame3d(double x, double y, double z, double p, double r) {
    const double ax = std::fabs(x), ay = std::fabs(y), az = std::fabs(z);
    const double m = std::max({ax, ay, az});
    if (std::isinf(p) || m == 0.0) return m - r;
    const double sum = std::pow(ax / m, p) + std::pow(ay / m, p) + std::pow(az / m, p);
    return m * std::pow(sum, 1.0 / p) - r;
}

/// Nested like eval_fg; at z = 0 the last term vanishes and the result equals
/// eval_fg(x, y, s, r) bit for bit.
inline double eval_sphube(double x, double y, double z, double s, double r) {
    const double x2 = x * x, y2 = y * y, z2 = z * z;
    const double q = (s * s) / (r * r);
    const double gx = 1.0 - q * x2;
    return (x2 - r * r) + y2 * gx + z2 * gx * (1.0 - q * y2);
}

inline double eval_periodic3d(double x, double y, double z, double s, double r) {
    return cospi(0.5 * s) - cospi(0.5 * s * (x / r)) * cospi(0.5 * s * (y / r)) * cospi(0.5 * s * (z / r));
}

inline double eval_oblique3d(double x, double y, double z, double s, double r, double h) {
    return 2.0 + cospi(s) - std::floor(s) * h - cospi(s * (x / r)) - cospi(s * (y / r)) - cospi(s * (z / r));
}

/// Squircular toroid, square-root form: tube cross-section is the FG squircle.
inline double eval_toroid(double x, double y, double z, double s, double ring, double r) {
    const double u = std::hypot(x, y) - ring;
    const double u2 = u * u, z2 = z * z;
    return u2 + z2 - (s * s) * z2 / (r * r) * u2 - r * r;
}

/// The same toroid with the square root squared away (degree 8).
inline double eval_toroid_octic(double x, double y, double z, double s, double ring, double r) {
    const double q2 = x * x + y * y, z2 = z * z, ring2 = ring * ring;
    const double k = (s * s) * z2 / (r * r);
    const double lhs = q2 + z2 + ring2 - r * r - k * (q2 + ring2);
    const double w = 1.0 - k;
    return lhs * lhs - 4.0 * ring2 * q2 * w * w;
}

/// FG-based cone with apex at the origin, base cap at z = c.
inline double eval_cone_fg(double x, double y, double z, double s, double c) {
    const double x2 = x * x, y2 = y * y, z2 = z * z, c2 = c * c;
    const double quartic = x2 * z2 + y2 * z2 - s * s * c2 * x2 * y2 - z2 * z2 / c2;
    // slabs |x| <= z/c and |y| <= z/c, in the quartic's units
    const double slab_x = z2 * (x2 - z2 / c2);
    const double slab_y = z2 * (y2 - z2 / c2);
    return std::max({quartic, slab_x, slab_y, -z, z - c});
}

inline double eval_cone_lame(double x, double y, double z, double p, double a, double b, double c) {
    const double lateral = eval_lame(x / a, y / b, p, 0.0) - z / c;
    return std::max({lateral, -z, z - c});
}

inline double eval_sham_cuboctahedron(double x, double y, double z, double k, double cc) {
    const double k2 = k * k;
    const double x2 = x * x / k2, y2 = y * y / k2, z2 = z * z / k2;
    const double sextic = x2 + y2 + z2 - (x2 * y2 + y2 * z2 + x2 * z2) + cc * x2 * y2 * z2 - 1.0;
    const double box = std::max({std::fabs(x), std::fabs(y), std::fabs(z)}) - k;
    return std::max(sextic, box);
}

inline ScalarField3D make_field3d(const ShapeSpec3D& spec) {
    validate(spec);
    const ShapeSpec3D sp = spec;
    auto sphere = [r = sp.r](double x, double y, double z) { return x * x + y * y + z * z - r * r; };
    switch (sp.family) {
    case Family3D::lame3d:
        return [sp](double x, double y, double z) { return eval_lame3d(x, y, z, sp.p, sp.r); };
    case Family3D::sphube:
        return [sp](double x, double y, double z) { return eval_sphube(x, y, z, sp.s, sp.r); };
    case Family3D::periodic3d:
        if (sp.s == 0.0) return sphere;
        return [sp](double x, double y, double z) { return eval_periodic3d(x, y, z, sp.s, sp.r); };
    case Family3D::oblique3d:
        if (sp.s == 0.0) return sphere;
        return [sp](double x, double y, double z) { return eval_oblique3d(x, y, z, sp.s, sp.r, sp.h); };
    case Family3D::toroid:
        return [sp](double x, double y, double z) { return eval_toroid(x, y, z, sp.s, sp.ring_radius, sp.r); };
    case Family3D::toroid_octic:
        return [sp](double x, double y, double z) { return eval_toroid_octic(x, y, z, sp.s, sp.ring_radius, sp.r); };
    case Family3D::cone_fg:
        return [sp](double x, double y, double z) { return eval_cone_fg(x, y, z, sp.s, sp.c); };
    case Family3D::cone_lame:
        return [sp](double x, double y, double z) { return eval_cone_lame(x, y, z, sp.p, sp.a, sp.b, sp.c); };
    case Family3D::cuboctahedron:
        return [sp](double x, double y, double z) { return eval_sham_cuboctahedron(x, y, z, sp.k, sp.cc); };
    }
    throw std::invalid_argument("unknown 3D family");
}

/// Pointwise maximum: the solid common to both fields.
inline ScalarField3D csg_intersect(ScalarField3D a, ScalarField3D b) {
    return [a = std::move(a), b = std::move(b)](double x, double y, double z) { return std::max(a(x, y, z), b(x, y, z)); };
}

/// Bounding field that removes periodic copies and extraneous sheets, leaving
/// the solid around the origin (or around the tube, for toroids).
inline std::optional<ScalarField3D> central_cell_bound(const ShapeSpec3D& spec) {
    switch (spec.family) {
    case Family3D::oblique3d:
        // overshoot moves the surface off the origin; leave it unbounded
        if (std::floor(spec.s) * spec.h > 0.0) return std::nullopt;
        [[fallthrough]];
    case Family3D::sphube:
    case Family3D::periodic3d:
        if (spec.s > 0.0) {
            const double w = spec.r / spec.s;
            return ScalarField3D{[w](double x, double y, double z) {
                return std::max({std::fabs(x), std::fabs(y), std::fabs(z)}) - w;
            }};
        }
        return std::nullopt;
    case Family3D::toroid:
    case Family3D::toroid_octic:
        return ScalarField3D{[r = spec.r](double, double, double z) { return std::fabs(z) - r; }};
    default:
        return std::nullopt;
    }
}

inline ScalarField3D make_closed_field3d(const ShapeSpec3D& spec) {
    ScalarField3D field = make_field3d(spec);
    if (auto bound = central_cell_bound(spec)) return csg_intersect(std::move(field), std::move(*bound));
    return field;
}

} // namespace squircle

#endif
