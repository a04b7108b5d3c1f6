#ifndef SQUIRCLE_CORE_HPP
#define SQUIRCLE_CORE_HPP

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace squircle {

/// Raised when a numeric procedure cannot produce a result (no sign bracket,
/// inverse-cosine argument out of range, non-finite samples).
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when writing to a sink fails.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Point2 {
    double x = 0.0;
    double y = 0.0;
    friend bool operator==(const Point2&, const Point2&) = default;
};

struct Point3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
    friend bool operator==(const Point3&, const Point3&) = default;
};

inline Point3 operator-(const Point3& a, const Point3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Point3 operator+(const Point3& a, const Point3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Point3 operator*(double k, const Point3& a) { return {k * a.x, k * a.y, k * a.z}; }
inline double dot(const Point3& a, const Point3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Point3 cross(const Point3& a, const Point3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(const Point3& a) { return std::sqrt(dot(a, a)); }

/// Inside-negative scalar fields. The zero level set is the shape.
using ScalarField2D = std::function<double(double, double)>;
using ScalarField3D = std::function<double(double, double, double)>;

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// sin(pi * t) with exact zeros at integers and exact +-1 at half-integers.
inline double sinpi(double t) {
    if (!std::isfinite(t)) return std::numeric_limits<double>::quiet_NaN();
    // reduce to [-1, 1]
    double u = std::fmod(t, 2.0);
    if (u > 1.0) u -= 2.0;
    if (u < -1.0) u += 2.0;
    const double sign = u < 0.0 ? -1.0 : 1.0;
    u = std::fabs(u);
    // sin(pi u) = sin(pi (1 - u))
    if (u > 0.5) u = 1.0 - u;
    if (u <= 0.25) return sign * std::sin(std::numbers::pi * u);
    return sign * std::cos(std::numbers::pi * (0.5 - u));
}

/// cos(pi * t) with exact zeros at half-integers and exact +-1 at integers.
inline double cospi(double t) {
    if (!std::isfinite(t)) return std::numeric_limits<double>::quiet_NaN();
    double u = std::fabs(std::fmod(t, 2.0));
    if (u > 1.0) u = 2.0 - u;
    // u in [0, 1]; cos(pi u) = -cos(pi (1 - u))
    double sign = 1.0;
    if (u > 0.5) {
        u = 1.0 - u;
        sign = -1.0;
    }
    if (u <= 0.25) return sign * std::cos(std::numbers::pi * u);
    return sign * std::sin(std::numbers::pi * (0.5 - u));
}

/// Relative size below which a lattice sample counts as lying on the zero set.
inline constexpr double kZeroTolerance = 1e-12;

inline double sample_scale(const std::vector<double>& samples) {
    double scale = 0.0;
    for (double v : samples) scale = std::max(scale, std::fabs(v));
    return scale;
}

/// Gives every lattice sample a strict sign. Samples within kZeroTolerance of
/// zero, relative to the largest magnitude on the grid, are rounding noise
/// around a zero that lies on the lattice; they are all moved to +tolerance.
inline void nudge_zeros(std::vector<double>& samples) {
    const double scale = sample_scale(samples);
    const double eps = scale > 0.0 ? kZeroTolerance * scale : std::numeric_limits<double>::min();
    for (double& v : samples)
        if (std::fabs(v) <= eps) v = eps;
}

/// True when the samples hold both clearly negative and clearly positive
/// values. A field that only touches zero (a receded level set) has none.
inline bool has_sign_change(const std::vector<double>& samples) {
    const double eps = kZeroTolerance * sample_scale(samples);
    bool neg = false, pos = false;
    for (double v : samples) {
        neg = neg || v < -eps;
        pos = pos || v > eps;
        if (neg && pos) return true;
    }
    return false;
}

inline std::string format_real(double v, int digits = 9) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

inline std::string format_general(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

} // namespace squircle

#endif
