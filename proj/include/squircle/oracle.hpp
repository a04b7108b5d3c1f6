#ifndef SQUIRCLE_ORACLE_HPP
#define SQUIRCLE_ORACLE_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "core.hpp"
#include "fields2d.hpp"
#include "fields3d.hpp"

namespace squircle {

// ---------------------------------------------------------------------------
// Radial profiles

inline constexpr double kRadialTolerance = 1e-12;

namespace detail {

/// First crossing of `f` along [0, t_max] given f(0) < 0 < f(t_max).
/// Scans `steps` intervals for the first positive sample, then bisects.
/// Samples that only touch zero count as inside.
template <typename F>
double first_crossing(const F& f, double t_max, int steps, double tol) {
    double lo = 0.0, hi = t_max;
    for (int n = 1; n <= steps; ++n) {
        const double t = t_max * n / steps;
        if (f(t) > 0.0) {
            hi = t;
            lo = t_max * (n - 1) / steps;
            break;
        }
    }
    for (int it = 0; it < 200 && hi - lo > tol; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        (f(mid) > 0.0 ? hi : lo) = mid;
    }
    return 0.5 * (lo + hi);
}

} // namespace detail

/// Distance from the origin to the first zero of `field` along direction theta.
/// Throws NumericError("no sign change") unless field(0,0) < 0 < field at r_max.
inline double radial_profile(const ScalarField2D& field, double theta, double r_max) {
    const double c = std::cos(theta), s = std::sin(theta);
    auto along = [&](double t) { return field(t * c, t * s); };
    if (!(along(0.0) < 0.0) || !(along(r_max) > 0.0))
        throw NumericError("no sign change along ray theta=" + format_general(theta));
    return detail::first_crossing(along, r_max, 4096, kRadialTolerance);
}

struct RadialProfileReport {
    std::vector<double> angles;
    std::vector<double> radii;
    std::vector<double> reference;
    double max_abs_error = 0.0;
};

/// Profiles `field` at `count` evenly spaced angles and compares with `reference(theta)`.
inline RadialProfileReport radial_profile_report(const ScalarField2D& field, int count, double r_max,
                                                 const std::function<double(double)>& reference) {
    RadialProfileReport rep;
    for (int n = 0; n < count; ++n) {
        const double theta = 2.0 * std::numbers::pi * n / count;
        const double radius = radial_profile(field, theta, r_max);
        const double ref = reference(theta);
        rep.angles.push_back(theta);
        rep.radii.push_back(radius);
        rep.reference.push_back(ref);
        rep.max_abs_error = std::max(rep.max_abs_error, std::fabs(radius - ref));
    }
    return rep;
}

/// Radius of the axis-aligned square with half-side r along theta.
inline double axis_square_radius(double r, double theta) {
    return r / std::max(std::fabs(std::cos(theta)), std::fabs(std::sin(theta)));
}

/// Radius of the 45-degree tilted square with vertices at distance r.
inline double tilted_square_radius(double r, double theta) {
    return r / (std::fabs(std::cos(theta)) + std::fabs(std::sin(theta)));
}

// ---------------------------------------------------------------------------
// Circle limits of the periodic families

enum class PeriodicFamily { periodic, oblique };

struct ConvergenceReport {
    std::vector<double> omegas;
    std::vector<double> errors;
    std::vector<double> ratios;

    bool quadratic(double lo = 3.5, double hi = 4.5) const {
        return !ratios.empty() && std::all_of(ratios.begin(), ratios.end(), [&](double q) { return q >= lo && q <= hi; });
    }
};

/// Isolated x on the unit-scale curve with w = s*pi, evaluated through
/// half-angle forms so that small w keeps full precision.
inline double isolated_x(PeriodicFamily family, double omega, double y) {
    using ld = long double;
    const ld w = omega, yy = y;
    ld one_minus;  // 1 - (argument of the inverse cosine)
    if (family == PeriodicFamily::periodic) {
        one_minus = 2.0L * std::sin(w * (1.0L + yy) / 4.0L) * std::sin(w * (1.0L - yy) / 4.0L) / std::cos(w * yy / 2.0L);
    } else {
        one_minus = 2.0L * std::sin(w * (1.0L + yy) / 2.0L) * std::sin(w * (1.0L - yy) / 2.0L);
    }
    if (!(one_minus >= 0.0L && one_minus <= 2.0L))
        throw NumericError("inverse cosine argument outside [-1, 1] at omega=" + format_general(omega) +
                           " y=" + format_general(y));
    const ld acos_arg = 2.0L * std::asin(std::sqrt(one_minus / 2.0L));
    const ld scale = family == PeriodicFamily::periodic ? 2.0L / w : 1.0L / w;
    return static_cast<double>(scale * acos_arg);
}

/// e(w) = max over y of |x(w, y) - sqrt(1 - y^2)| for each w, plus ratios of
/// consecutive errors. A quadratic limit shows ratios near 4.
inline ConvergenceReport limit_convergence_check(PeriodicFamily family, std::span<const double> y_grid,
                                                 std::span<const double> omegas) {
    if (omegas.empty()) throw std::invalid_argument("need at least one omega");
    for (std::size_t n = 0; n < omegas.size(); ++n) {
        if (!(omegas[n] > 0.0)) throw std::invalid_argument("omegas must be positive");
        if (omegas[n] > 0.5) throw std::invalid_argument("omegas must not exceed 0.5");
        if (n > 0 && std::fabs(omegas[n] * 2.0 - omegas[n - 1]) > 1e-12 * omegas[n - 1])
            throw std::invalid_argument("omegas must halve at each step");
    }
    for (double y : y_grid)
        if (!(std::fabs(y) < 1.0)) throw std::invalid_argument("y grid must lie inside (-1, 1)");

    ConvergenceReport rep;
    for (double w : omegas) {
        double err = 0.0;
        for (double y : y_grid) err = std::max(err, std::fabs(isolated_x(family, w, y) - std::sqrt(1.0 - y * y)));
        rep.omegas.push_back(w);
        rep.errors.push_back(err);
    }
    for (std::size_t n = 0; n + 1 < rep.errors.size(); ++n)
        rep.ratios.push_back(rep.errors[n + 1] > 0.0 ? rep.errors[n] / rep.errors[n + 1] : kInfinity);
    return rep;
}

/// `count` evenly spaced points strictly inside (-0.95, 0.95).
inline std::vector<double> default_y_grid(int count = 50) {
    std::vector<double> ys;
    for (int n = 0; n < count; ++n) ys.push_back(-0.95 + 1.9 * (n + 0.5) / count);
    return ys;
}

// ---------------------------------------------------------------------------
// Deterministic probes

namespace detail {

/// Uniform double in [0, 1) from the top 53 bits; identical on every platform.
inline double unit_uniform(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

inline Point3 unit_direction(std::mt19937_64& rng) {
    const double z = 2.0 * unit_uniform(rng) - 1.0;
    const double phi = 2.0 * std::numbers::pi * unit_uniform(rng);
    const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
    return {rho * std::cos(phi), rho * std::sin(phi), z};
}

} // namespace detail

inline constexpr std::uint64_t kProbeSeed = 0x5eed5eedULL;

/// Locates `sample_count` zeros of `reference` by bisection along rays from
/// the interior `seeds` (cycled) in pseudo-random directions, and returns the
/// largest |alternate| found at those zeros.
inline double zero_set_residual(const ScalarField3D& reference, const ScalarField3D& alternate,
                                std::span<const Point3> seeds, int sample_count, double max_ray) {
    if (seeds.empty()) throw std::invalid_argument("need at least one interior seed");
    std::mt19937_64 rng(kProbeSeed);
    double worst = 0.0;
    for (int n = 0; n < sample_count; ++n) {
        const Point3 o = seeds[static_cast<std::size_t>(n) % seeds.size()];
        const Point3 dir = detail::unit_direction(rng);
        auto along = [&](double t) {
            const Point3 p = o + t * dir;
            return reference(p.x, p.y, p.z);
        };
        if (!(along(0.0) < 0.0)) throw NumericError("no sign change: seed is not inside the reference");
        bool bracket = false;
        for (int k = 1; k <= 512 && !bracket; ++k) bracket = along(max_ray * k / 512) > 0.0;
        if (!bracket) throw NumericError("no sign change along probe ray");
        const double t = detail::first_crossing(along, max_ray, 512, 1e-14 * std::max(1.0, max_ray));
        const Point3 p = o + t * dir;
        worst = std::max(worst, std::fabs(alternate(p.x, p.y, p.z)));
    }
    return worst;
}

/// max |f(p + period * e_axis) - f(p)| over random p in [-period, period]^2 and both axes.
inline double periodicity_check(const ScalarField2D& field, double period, int probes) {
    if (!(period > 0.0)) throw std::invalid_argument("period must be > 0");
    std::mt19937_64 rng(kProbeSeed);
    double worst = 0.0;
    for (int n = 0; n < probes; ++n) {
        const double x = period * (2.0 * detail::unit_uniform(rng) - 1.0);
        const double y = period * (2.0 * detail::unit_uniform(rng) - 1.0);
        const double f = field(x, y);
        worst = std::max({worst, std::fabs(field(x + period, y) - f), std::fabs(field(x, y + period) - f)});
    }
    return worst;
}

inline double periodicity_check(const ScalarField3D& field, double period, int probes) {
    if (!(period > 0.0)) throw std::invalid_argument("period must be > 0");
    std::mt19937_64 rng(kProbeSeed);
    double worst = 0.0;
    for (int n = 0; n < probes; ++n) {
        const double x = period * (2.0 * detail::unit_uniform(rng) - 1.0);
        const double y = period * (2.0 * detail::unit_uniform(rng) - 1.0);
        const double z = period * (2.0 * detail::unit_uniform(rng) - 1.0);
        const double f = field(x, y, z);
        worst = std::max({worst, std::fabs(field(x + period, y, z) - f), std::fabs(field(x, y + period, z) - f),
                          std::fabs(field(x, y, z + period) - f)});
    }
    return worst;
}

/// Largest |field| on the lines the squareness-1 curve should reduce to:
/// x, y = (2n+1) r for the periodic family, y = +-x + (2n+1) r for the oblique one.
inline double square_case_check(PeriodicFamily family, double r, int probes) {
    if (probes < 1) throw std::invalid_argument("probes must be >= 1");
    if (!(r > 0.0)) throw std::invalid_argument("radius must be > 0");
    std::mt19937_64 rng(kProbeSeed);
    double worst = 0.0;
    for (int p = 0; p < probes; ++p) {
        for (int n = -2; n <= 2; ++n) {
            const double offset = (2 * n + 1) * r;
            const double t = 5.0 * r * (2.0 * detail::unit_uniform(rng) - 1.0);
            if (family == PeriodicFamily::periodic) {
                worst = std::max({worst, std::fabs(eval_periodic(offset, t, 1.0, r)),
                                  std::fabs(eval_periodic(t, offset, 1.0, r))});
            } else {
                worst = std::max({worst, std::fabs(eval_oblique(t, t + offset, 1.0, r, 0.0)),
                                  std::fabs(eval_oblique(t, -t + offset, 1.0, r, 0.0))});
            }
        }
    }
    return worst;
}

} // namespace squircle

#endif
