#ifndef SQUIRCLE_CONTOUR2D_HPP
#define SQUIRCLE_CONTOUR2D_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "core.hpp"
#include "fields2d.hpp"
#include "parallel.hpp"

namespace squircle {

struct Domain2D {
    double xmin = -1.0, xmax = 1.0;
    double ymin = -1.0, ymax = 1.0;
    int nx = 2, ny = 2;

    double dx() const { return (xmax - xmin) / nx; }
    double dy() const { return (ymax - ymin) / ny; }
    double x(int i) const { return i == nx ? xmax : xmin + i * dx(); }
    double y(int j) const { return j == ny ? ymax : ymin + j * dy(); }
};

inline void validate(const Domain2D& d) {
    if (d.nx < 2 || d.ny < 2) throw std::invalid_argument("domain needs at least 2 cells per axis");
    if (!(d.xmax > d.xmin) || !(d.ymax > d.ymin)) throw std::invalid_argument("domain bounds must satisfy max > min");
    if (!std::isfinite(d.xmin) || !std::isfinite(d.xmax) || !std::isfinite(d.ymin) || !std::isfinite(d.ymax))
        throw std::invalid_argument("domain bounds must be finite");
}

/// Field samples on the lattice points of a Domain2D, row-major (x fastest).
struct Grid2D {
    Domain2D domain;
    std::vector<double> samples;

    std::size_t index(int i, int j) const { return static_cast<std::size_t>(j) * (domain.nx + 1) + i; }
    double at(int i, int j) const { return samples[index(i, j)]; }
};

struct Polyline {
    std::vector<Point2> points;
    bool closed = false;
};

inline Grid2D sample_grid2d(const ScalarField2D& field, const Domain2D& domain, unsigned workers = 0) {
    validate(domain);
    Grid2D grid{domain, std::vector<double>(static_cast<std::size_t>(domain.nx + 1) * (domain.ny + 1))};
    parallel_bands(static_cast<std::size_t>(domain.ny + 1), workers, [&](std::size_t j0, std::size_t j1) {
        for (auto j = static_cast<int>(j0); j < static_cast<int>(j1); ++j) {
            const double y = domain.y(j);
            for (int i = 0; i <= domain.nx; ++i) {
                const double x = domain.x(i);
                const double v = field(x, y);
                if (!std::isfinite(v))
                    throw NumericError("non-finite field value at (" + format_general(x) + ", " + format_general(y) + ")");
                grid.samples[grid.index(i, j)] = v;
            }
        }
    });
    return grid;
}

namespace detail {

struct Segment2 {
    std::uint64_t from;
    std::uint64_t to;
};

// Edge keys: 2 * vertex index for the +x edge leaving a lattice point, +1 for the +y edge.
inline Point2 edge_point(const Grid2D& g, const std::vector<double>& v, std::uint64_t key) {
    const auto vertex = static_cast<std::size_t>(key / 2);
    const int i = static_cast<int>(vertex % (g.domain.nx + 1));
    const int j = static_cast<int>(vertex / (g.domain.nx + 1));
    const bool along_y = key % 2 == 1;
    const int i1 = along_y ? i : i + 1;
    const int j1 = along_y ? j + 1 : j;
    const double a = v[g.index(i, j)], b = v[g.index(i1, j1)];
    const double t = a / (a - b);
    const double x0 = g.domain.x(i), y0 = g.domain.y(j);
    const double x1 = g.domain.x(i1), y1 = g.domain.y(j1);
    return {x0 + t * (x1 - x0), y0 + t * (y1 - y0)};
}

} // namespace detail

/// Zero-level polylines of `grid`. Segments are oriented with the negative
/// side on the left and chained through shared edge crossings. Saddle cells
/// are split according to the sign at the cell centre, taken from
/// `center_field` when given and from the corner mean otherwise.
inline std::vector<Polyline> marching_squares(const Grid2D& grid, const ScalarField2D* center_field = nullptr,
                                              unsigned workers = 0) {
    const Domain2D& d = grid.domain;
    validate(d);
    if (grid.samples.size() != static_cast<std::size_t>(d.nx + 1) * (d.ny + 1))
        throw std::invalid_argument("grid sample count does not match its domain");

    std::vector<double> v = grid.samples;
    nudge_zeros(v);

    const auto stride = static_cast<std::uint64_t>(d.nx + 1);
    auto vertex_key = [&](int i, int j) { return 2 * (static_cast<std::uint64_t>(j) * stride + i); };

    std::vector<std::vector<detail::Segment2>> bands(static_cast<std::size_t>(d.ny));
    parallel_bands(static_cast<std::size_t>(d.ny), workers, [&](std::size_t j0, std::size_t j1) {
        for (auto j = static_cast<int>(j0); j < static_cast<int>(j1); ++j) {
            auto& out = bands[j];
            for (int i = 0; i < d.nx; ++i) {
                // corners counter-clockwise from bottom-left
                const double c[4] = {v[grid.index(i, j)], v[grid.index(i + 1, j)], v[grid.index(i + 1, j + 1)],
                                     v[grid.index(i, j + 1)]};
                // edge k runs from corner k to corner k+1
                const std::uint64_t e[4] = {vertex_key(i, j), vertex_key(i + 1, j) + 1, vertex_key(i, j + 1),
                                            vertex_key(i, j) + 1};
                int exits[2], entries[2], n_exit = 0, n_entry = 0;
                for (int k = 0; k < 4; ++k) {
                    const bool in0 = c[k] < 0.0, in1 = c[(k + 1) % 4] < 0.0;
                    if (in0 && !in1) exits[n_exit++] = k;
                    if (!in0 && in1) entries[n_entry++] = k;
                }
                if (n_exit == 1) {
                    out.push_back({e[exits[0]], e[entries[0]]});
                    continue;
                }
                if (n_exit != 2) continue;
                double centre;
                if (center_field) {
                    centre = (*center_field)(0.5 * (d.x(i) + d.x(i + 1)), 0.5 * (d.y(j) + d.y(j + 1)));
                    if (centre == 0.0) centre = 1.0;
                } else {
                    centre = 0.25 * (c[0] + c[1] + c[2] + c[3]);
                }
                // negative centre joins the negative corners: pair each exit
                // with the next entry counter-clockwise, else the previous one
                for (int n = 0; n < 2; ++n) {
                    const int ex = exits[n];
                    int best = -1;
                    for (int m = 0; m < 2; ++m) {
                        const int en = entries[m];
                        const int ahead = (en - ex + 4) % 4;
                        if (centre < 0.0 ? ahead == 1 : ahead == 3) best = en;
                    }
                    out.push_back({e[ex], e[best]});
                }
            }
        }
    });

    std::vector<detail::Segment2> segs;
    for (auto& band : bands) segs.insert(segs.end(), band.begin(), band.end());

    std::unordered_map<std::uint64_t, std::size_t> starting_at, ending_at;
    starting_at.reserve(segs.size());
    ending_at.reserve(segs.size());
    for (std::size_t n = 0; n < segs.size(); ++n) {
        starting_at.emplace(segs[n].from, n);
        ending_at.emplace(segs[n].to, n);
    }

    std::vector<Polyline> result;
    std::vector<char> used(segs.size(), 0);
    for (std::size_t n = 0; n < segs.size(); ++n) {
        if (used[n]) continue;
        std::size_t head = n;
        bool closed = false;
        for (;;) {
            auto it = ending_at.find(segs[head].from);
            if (it == ending_at.end()) break;
            if (it->second == n) {
                closed = true;
                break;
            }
            head = it->second;
        }
        if (closed) head = n;

        Polyline line;
        line.closed = closed;
        line.points.push_back(detail::edge_point(grid, v, segs[head].from));
        std::size_t cur = head;
        for (;;) {
            used[cur] = 1;
            const std::uint64_t to = segs[cur].to;
            auto it = starting_at.find(to);
            if (closed && it != starting_at.end() && it->second == head) break;
            line.points.push_back(detail::edge_point(grid, v, to));
            if (it == starting_at.end() || used[it->second]) break;
            cur = it->second;
        }
        auto last = std::unique(line.points.begin(), line.points.end());
        line.points.erase(last, line.points.end());
        if (closed && line.points.size() > 1 && line.points.front() == line.points.back()) line.points.pop_back();
        if (line.points.size() >= 2) result.push_back(std::move(line));
    }
    return result;
}

/// Closed polyline of `n` evenly spaced Frantz squircle points.
inline Polyline frantz_polyline(double s, double r, int n) {
    if (n < 3) throw std::invalid_argument("frantz polyline needs at least 3 samples");
    if (!(r > 0.0)) throw std::invalid_argument("radius must be > 0");
    if (!(s >= 0.0) || !std::isfinite(s)) throw std::invalid_argument("squareness must be a finite value >= 0");
    Polyline line;
    line.closed = true;
    line.points.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) line.points.push_back(frantz_point(2.0 * std::numbers::pi * k / n, s, r));
    auto last = std::unique(line.points.begin(), line.points.end());
    line.points.erase(last, line.points.end());
    return line;
}

inline double polyline_length(const Polyline& line) {
    double total = 0.0;
    const std::size_t n = line.points.size();
    for (std::size_t k = 0; k + 1 < n; ++k)
        total += std::hypot(line.points[k + 1].x - line.points[k].x, line.points[k + 1].y - line.points[k].y);
    if (line.closed && n > 1) total += std::hypot(line.points[0].x - line.points[n - 1].x, line.points[0].y - line.points[n - 1].y);
    return total;
}

} // namespace squircle

#endif
