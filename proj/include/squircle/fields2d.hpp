#ifndef SQUIRCLE_FIELDS2D_HPP
#define SQUIRCLE_FIELDS2D_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "core.hpp"

namespace squircle {

enum class Family2D { lame, fg, periodic, oblique, frantz, phase_grid };

inline constexpr std::array<std::pair<Family2D, std::string_view>, 6> kFamily2DNames{{
    {Family2D::lame, "lame"},
    {Family2D::fg, "fg"},
    {Family2D::periodic, "periodic"},
    {Family2D::oblique, "oblique"},
    {Family2D::frantz, "frantz"},
    {Family2D::phase_grid, "phase_grid"},
}};

inline std::string_view to_string(Family2D f) {
    for (const auto& [family, name] : kFamily2DNames)
        if (family == f) return name;
    return "?";
}

inline std::optional<Family2D> parse_family2d(std::string_view name) {
    for (const auto& [family, n] : kFamily2DNames)
        if (n == name) return family;
    return std::nullopt;
}

/// Parameters of a planar squircle. Only the fields relevant to `family` are read.
struct ShapeSpec2D {
    Family2D family = Family2D::fg;
    double p = 2.0;  ///< Lamé exponent, kInfinity for the square
    double s = 0.0;  ///< squareness
    double r = 1.0;  ///< scale
    double h = 0.0;  ///< overshoot (oblique only)
};

/// Throws std::invalid_argument naming the offending parameter.
inline void validate(const ShapeSpec2D& spec) {
    auto fail = [](const std::string& what) { throw std::invalid_argument(what); };
    if (!(spec.r > 0.0) || !std::isfinite(spec.r)) fail("radius must be a finite value > 0");
    switch (spec.family) {
    case Family2D::lame:
        if (std::isnan(spec.p) || spec.p < 1.0) fail("exponent p must be >= 1");
        break;
    case Family2D::fg:
    case Family2D::periodic:
        if (!(spec.s >= 0.0 && spec.s <= 1.0)) fail("squareness must lie in [0, 1]");
        break;
    case Family2D::oblique:
        if (!(spec.s >= 0.0 && spec.s <= 1.0)) fail("squareness must lie in [0, 1]");
        if (!(spec.h >= 0.0 && spec.h <= 2.0)) fail("overshoot must lie in [0, 2]");
        break;
    case Family2D::frantz:
        if (!(spec.s >= 0.0) || !std::isfinite(spec.s)) fail("squareness must be a finite value >= 0");
        break;
    case Family2D::phase_grid:
        break;
    }
}

inline std::string describe(const ShapeSpec2D& spec) {
    std::string out = "family=" + std::string(to_string(spec.family));
    switch (spec.family) {
    case Family2D::lame: out += " p=" + format_general(spec.p); break;
    case Family2D::oblique: out += " s=" + format_general(spec.s) + " h=" + format_general(spec.h); break;
    case Family2D::phase_grid: return out;
    default: out += " s=" + format_general(spec.s); break;
    }
    return out + " r=" + format_general(spec.r);
}

// Evaluators. Each returns an inside-negative value whose zero set is the curve.

/// Normalized p-norm form: (|x|^p + |y|^p)^(1/p) - r.
inline double eval_lame(double x, double y, double p, double r) {
    const double ax = std::fabs(x), ay = std::fabs(y);
    const double m = std::max(ax, ay);
    if (std::isinf(p) || m == 0.0) return m - r;
    const double sum = std::pow(ax / m, p) + std::pow(ay / m, p);
    return m * std::pow(sum, 1.0 / p) - r;
}

/// x^2 + y^2 - (s^2/r^2) x^2 y^2 - r^2, nested as (x^2 - r^2) + y^2 (1 - q x^2)
/// so the sign stays exact near the double roots at the square's corners.
inline double eval_fg(double x, double y, double s, double r) {
    const double x2 = x * x, y2 = y * y;
    const double q = (s * s) / (r * r);
    return (x2 - r * r) + y2 * (1.0 - q * x2);
}

/// cos(s pi / 2) - cos(s pi x / 2r) cos(s pi y / 2r).
inline double eval_periodic(double x, double y, double s, double r) {
    return cospi(0.5 * s) - cospi(0.5 * s * (x / r)) * cospi(0.5 * s * (y / r));
}

/// 1 + cos(s pi) - floor(s) h - cos(s pi x / r) - cos(s pi y / r).
inline double eval_oblique(double x, double y, double s, double r, double h) {
    return 1.0 + cospi(s) - std::floor(s) * h - cospi(s * (x / r)) - cospi(s * (y / r));
}

inline double eval_phase_grid(double x, double y) { return sinpi(x) * sinpi(y); }

inline constexpr double kFrantzCircleCutoff = 1e-6;

inline Point2 frantz_point(double t, double s, double r) {
    if (s <= kFrantzCircleCutoff) return {r * std::cos(t), r * std::sin(t)};
    const double denom = std::tanh(s);
    return {r * std::tanh(s * std::cos(t)) / denom, r * std::tanh(s * std::sin(t)) / denom};
}

/// Builds the implicit field for `spec`. Squareness 0 on the fg, periodic and
/// oblique families yields the exact circle x^2 + y^2 - r^2.
inline ScalarField2D make_field2d(const ShapeSpec2D& spec) {
    if (spec.family == Family2D::frantz)
        throw std::invalid_argument("frantz family is parametric-only and has no implicit field");
    validate(spec);
    const double p = spec.p, s = spec.s, r = spec.r, h = spec.h;
    auto circle = [r](double x, double y) { return x * x + y * y - r * r; };
    switch (spec.family) {
    case Family2D::lame:
        return [p, r](double x, double y) { return eval_lame(x, y, p, r); };
    case Family2D::fg:
        if (s == 0.0) return circle;
        return [s, r](double x, double y) { return eval_fg(x, y, s, r); };
    case Family2D::periodic:
        if (s == 0.0) return circle;
        return [s, r](double x, double y) { return eval_periodic(x, y, s, r); };
    case Family2D::oblique:
        if (s == 0.0) return circle;
        return [s, r, h](double x, double y) { return eval_oblique(x, y, s, r, h); };
    case Family2D::phase_grid:
        return [](double x, double y) { return eval_phase_grid(x, y); };
    case Family2D::frantz:
        break;
    }
    throw std::invalid_argument("unknown 2D family");
}

/// Half-width of the square that isolates the component around the origin
/// from its periodic copies and from extraneous branches, if the family has any.
inline std::optional<double> central_cell_half_width(const ShapeSpec2D& spec) {
    switch (spec.family) {
    case Family2D::oblique:
        // overshoot moves the curves off the origin; show them unclipped
        if (std::floor(spec.s) * spec.h > 0.0) return std::nullopt;
        [[fallthrough]];
    case Family2D::fg:
    case Family2D::periodic:
        if (spec.s > 0.0) return spec.r / spec.s;
        return std::nullopt;
    default:
        return std::nullopt;
    }
}

/// The family field intersected with its central cell, so the zero set is the
/// single closed curve around the origin.
inline ScalarField2D make_closed_field2d(const ShapeSpec2D& spec) {
    ScalarField2D field = make_field2d(spec);
    const auto half = central_cell_half_width(spec);
    if (!half) return field;
    return [field = std::move(field), w = *half](double x, double y) {
        return std::max(field(x, y), std::max(std::fabs(x), std::fabs(y)) - w);
    };
}

} // namespace squircle

#endif
